#ifndef THETANULL_THETA_EVAL_H_
#define THETANULL_THETA_EVAL_H_

#include <vector>

#include "thetanull/characteristics.h"
#include "thetanull/numerics.h"

namespace thetanull {

constexpr double kDefaultThetaTol = 1e-12;

// Radius R such that the lattice terms with ||u + a|| > R contribute less
// than tol in absolute value, from the shell bound
// (2k+3)^g exp(-pi lambda k^2 + 2 pi k |Im z|) with lambda = min eig Im(tau).
double TruncationRadius(const CMatrix& tau, double im_z_norm, double tol);
double TruncationRadius(int g, double lambda_min, double im_z_norm,
                        double tol);

// Radius rho in the Im(tau) metric such that the terms outside the
// ellipsoid of radius rho around the peak sum to less than tol, where
// log_peak is the log of the largest term magnitude.
double EllipsoidRadius(int g, double lambda_min, double log_peak, double tol);

// Riemann theta function and theta with rational characteristic. The
// working precision follows GetPrecision().
Complex Theta(const CVector& z, const CMatrix& tau,
              double tol = kDefaultThetaTol);
Complex ThetaChar(const Characteristic& c, const CVector& z,
                  const CMatrix& tau, double tol = kDefaultThetaTol);
Complex Thetanull(const Characteristic& c, const CMatrix& tau,
                  double tol = kDefaultThetaTol);

// Theta with unreduced rational characteristic top / level, bottom / level.
Complex ThetaRational(const std::vector<long long>& top,
                      const std::vector<long long>& bottom, int level,
                      const CVector& z, const CMatrix& tau,
                      double tol = kDefaultThetaTol);

// Thetanulls for a list of characteristics, evaluated in parallel with
// results in input order.
std::vector<Complex> Thetanulls(const std::vector<Characteristic>& chars,
                                const CMatrix& tau,
                                double tol = kDefaultThetaTol);

// Quartic identities between half-integer thetanulls, indexed by an even
// characteristic a and a shift h with a o h even. The sum runs over the even
// e with |e| = |e o h|, weighted by (-1)^{|a o e|} and a root of unity.
struct QuarticResult {
  double residual1 = 0;   // squared-product identity
  double residual2 = 0;   // fourth-power identity
  // Same sums with the 2^{1-g} normalization and (h choose a o e) weight.
  double literal_residual1 = 0;
  double literal_residual2 = 0;
  double scale = 0;       // max |theta|^4 over all even thetanulls
  int candidates = 0;
};

int QuarticCandidateCountFormula(int g);
QuarticResult QuarticIdentityResiduals(const CMatrix& tau, const Characteristic& a,
                           const Characteristic& h,
                           double tol = kDefaultThetaTol);

}  // namespace thetanull

#endif  // THETANULL_THETA_EVAL_H_
