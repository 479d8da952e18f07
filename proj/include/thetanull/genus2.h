#ifndef THETANULL_GENUS2_H_
#define THETANULL_GENUS2_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thetanull/characteristics.h"
#include "thetanull/hyperelliptic.h"
#include "thetanull/igusa.h"
#include "thetanull/numerics.h"

namespace thetanull {

// Sixteen genus-2 characteristics: theta_1..theta_10 are even, entries
// 11..16 are the odd ones.
const std::vector<Characteristic>& Genus2CharTable();

// Even thetanulls theta_1..theta_10, accessed 1-based.
struct Genus2Thetas {
  std::array<Complex, 10> values{};
  Complex operator()(int i) const { return values.at(i - 1); }
  Complex& operator()(int i) { return values.at(i - 1); }
  static Genus2Thetas FromTau(const CMatrix& tau, double tol = 1e-14);
  // Scaled so the largest magnitude is one.
  Genus2Thetas Normalized() const;
};

// Residual of each fundamental identity divided by its largest term.
std::array<double, 6> FundamentalIdentityResiduals(const Genus2Thetas& t);

// (lambda, mu, nu) for Y^2 = X(X-1)(X-lambda)(X-mu)(X-nu).
std::array<Complex, 3> PicardBranchPoints(const Genus2Thetas& t);

// Thomae products for theta_1^4..theta_10^4 up to a common constant, for
// Y^2 = X(X-1)(X-lambda)(X-mu)(X-nu).
std::array<Complex, 10> Genus2ThomaeProducts(const Complex& lambda,
                                             const Complex& mu,
                                             const Complex& nu);
// The same rows with the factors (nu - lambda), (nu - lambda), mu in rows 3,
// 4, 5 where the Thomae partitions give (nu - 1), (nu - 1), (mu - 1).
std::array<Complex, 10> Genus2ThomaeProductsAsPrinted(const Complex& lambda,
                                                      const Complex& mu,
                                                      const Complex& nu);
// |theta_i^8 / theta_1^8 - P_i^2 / P_1^2| / |P_i^2 / P_1^2| for i = 1..10.
std::array<double, 10> Genus2ThomaeRatioResiduals(const Complex& lambda,
                                                  const Complex& mu,
                                                  const Complex& nu,
                                                  const Genus2Thetas& t);

// c = (t1^4 + t2^4 - t3^4 - t4^4) / (t1^2 t2^2 - t3^2 t4^2). The identities
// for t8 and t10 give alpha + 1/alpha = c, so alpha^2 - c alpha + 1 = 0.
struct AlphaQuadratic {
  Complex coefficient;
  std::array<Complex, 2> roots;
};
AlphaQuadratic SolveAlphaQuadratic(const Complex& t1, const Complex& t2,
                                   const Complex& t3, const Complex& t4);
// The same for a curve, with the thetanulls, c and the roots carried at the
// working precision. Near c = +-2 the roots are double and lose half the
// digits of c, so extended precision is needed for roots accurate to 1e-8.
AlphaQuadratic CurveAlphaQuadratic(const HyperellipticCurve& curve,
                                   double quad_tol = 1e-14);
// |alpha^2 - c alpha + 1| / max(|alpha|^2, |c alpha|, 1), alpha = t8^2/t10^2.
double AlphaQuadraticResidual(const Genus2Thetas& t);
// Same with the opposite sign of the linear term.
double AlphaQuadraticPlusSignResidual(const Genus2Thetas& t);

struct Table1Row {
  Complex factor;       // f(a1, a2, a3)
  Complex theta_value;  // theta expression
  double factor_normalized;
  double theta_normalized;  // |value| / largest monomial magnitude
};
// The curve is Y^2 = X(X-1)(X-a1)(X-a2)(X-a3) with (a1, a2, a3) =
// (nu, mu, lambda) in the Picard labelling.
std::array<Table1Row, 15> Table1Rows(const Complex& a1, const Complex& a2,
                                     const Complex& a3, const Genus2Thetas& t);

// Normalized product of the fifteen theta factors.
double V4ThetaProduct(const Genus2Thetas& t);
bool V4ThetaTest(const Genus2Thetas& t, double tol = 1e-8);
double V4FundamentalProduct(const Complex& t1, const Complex& t2,
                            const Complex& t3, const Complex& t4);
bool V4FundamentalTest(const Complex& t1, const Complex& t2, const Complex& t3,
                       const Complex& t4, double tol = 1e-8);

struct LocusResiduals {
  double l2 = 0;
  double d8 = 0;
  std::array<double, 2> d12{};
};
LocusResiduals LocusTests(const IgusaInvariantsC& j);

struct ExactLocus {
  bool l2 = false;
  bool d8 = false;
  bool d12 = false;
};
ExactLocus LocusTestsExact(const IgusaInvariants& j);

enum class AutLabel { kZ2, kV4, kD8, kD12, kSpecialPoint };
std::string AutLabelName(AutLabel label);

struct Classification {
  AutLabel label;
  // For special points, the matching curve: "y^2=x^6-x", "y^2=x^6-1" or
  // "y^2=x^5-x".
  std::string special;
  bool exact = false;
};

// Sextic coefficients x^6..x^0.
Classification ClassifyAut(const std::vector<Rational>& sextic);
Classification ClassifyAut(const std::vector<Complex>& sextic,
                           double on_tol = 1e-8, double off_tol = 1e-4);
Classification ClassifyRosenhain(const Rational& a1, const Rational& a2,
                                 const Rational& a3);

// J10 from the two theta expressions.
std::array<Complex, 2> J10FromThetas(const Genus2Thetas& t);

struct J10Check {
  Complex j10_branch;
  std::array<Complex, 2> j10_theta;
  std::array<Complex, 2> ratio;  // j10_branch / j10_theta
  double formula_agreement = 0;   // relative distance between the formulas
  double min_nonzero_theta = 0;   // min |theta_i|, i in {1,3,5,6,7,8,9}
};
J10Check J10ThetaChecks(const Genus2Thetas& t, const IgusaInvariantsC& j);

}  // namespace thetanull

#endif  // THETANULL_GENUS2_H_
