#ifndef THETANULL_IGUSA_H_
#define THETANULL_IGUSA_H_

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thetanull/numerics.h"

namespace thetanull {

using Rational = boost::multiprecision::cpp_rational;

// Igusa-Clebsch invariants J2, J4, J6, J10 of a binary sextic, built from
// transvectants. Weights are 2, 4, 6, 10.
template <typename F>
struct IgusaInvariantsT {
  F j2, j4, j6, j10;
};
using IgusaInvariants = IgusaInvariantsT<Rational>;
using IgusaInvariantsC = IgusaInvariantsT<Complex>;

// Coefficients of x^6, x^5, ..., x^0; a zero leading coefficient means a
// quintic model with a branch point at infinity.
template <typename F>
IgusaInvariantsT<F> IgusaFromSextic(const std::vector<F>& coeffs);

// Coefficients of x(x-1)(x-a1)(x-a2)(x-a3) as a sextic with leading zero.
template <typename F>
std::vector<F> RosenhainSextic(const F& a1, const F& a2, const F& a3);

// Weighted monomial c * J2^a J4^b J6^c J10^d.
struct IgusaMonomial {
  long long coefficient;
  int a, b, c, d;
};

const std::vector<IgusaMonomial>& L2Locus();
const std::vector<IgusaMonomial>& D8Locus();
const std::vector<IgusaMonomial>& D12LocusFirst();
const std::vector<IgusaMonomial>& D12LocusSecond();

template <typename F>
F EvaluateLocus(const std::vector<IgusaMonomial>& poly,
                const IgusaInvariantsT<F>& j);

// |value| divided by the largest monomial magnitude.
double NormalizedLocusResidual(const std::vector<IgusaMonomial>& poly,
                               const IgusaInvariantsC& j);

// The fifteen cross-ratio factors f_k(a1, a2, a3), k = 1..15.
template <typename F>
std::array<F, 15> CrossRatioFactors(const F& a1, const F& a2, const F& a3);

IgusaInvariantsC ToComplex(const IgusaInvariants& j);
std::string ToString(const Rational& q);

}  // namespace thetanull

#endif  // THETANULL_IGUSA_H_
