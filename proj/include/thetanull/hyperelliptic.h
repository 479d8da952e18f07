#ifndef THETANULL_HYPERELLIPTIC_H_
#define THETANULL_HYPERELLIPTIC_H_

#include <array>
#include <string>
#include <vector>

#include "thetanull/characteristics.h"
#include "thetanull/numerics.h"

namespace thetanull {

enum class BranchOrdering { kGenus1, kRosenhainGenus2, kRosenhainGenus3 };
std::string OrderingName(BranchOrdering ordering);
BranchOrdering ParseOrdering(const std::string& name);

// y^2 = prod (x - p_k) over 2g+1 finite branch points; infinity is the last
// branch point. Points are stored in the order that the eps map indexes:
// branch_points[k - 1] carries eps(k).
struct HyperellipticCurve {
  int genus = 0;
  std::vector<Complex> branch_points;
  BranchOrdering ordering = BranchOrdering::kRosenhainGenus2;

  // Y^2 = X(X-1)(X-lambda)(X-mu)(X-nu), ordered (nu, mu, lambda, 1, 0).
  static HyperellipticCurve Genus2(Complex lambda, Complex mu, Complex nu);
  // Y^2 = X(X-1)(X-a1)...(X-a5), ordered (a1, ..., a5, 1, 0).
  static HyperellipticCurve Genus3(const std::array<Complex, 5>& a);
  // Y^2 = (X-e1)(X-e2)(X-e3).
  static HyperellipticCurve Genus1(Complex e1, Complex e2, Complex e3);

  void Validate() const;
};

struct PeriodData {
  CMatrix a_periods;  // a_periods(i, j) = integral of w_i over A_j
  CMatrix b_periods;  // b_periods(i, j) = integral of w_i over B_j
  CMatrix tau;        // symmetrized a_periods^{-1} b_periods
  double quadrature_error = 0;
  double symmetry_defect = 0;   // before symmetrization
  double bilinear_residual = 0; // relative Riemann bilinear defect
  double intersection_defect = 0;
};

// Characteristic eps(k) for k in 1..2g+1; k = 0 stands for infinity.
Characteristic EpsMap(int k, int g);
// Sum of eps over indices in T (1-based, 0 for infinity), reduced mod 1.
Characteristic CharOfSubset(const std::vector<int>& subset, int g);
// Odd indices of {1..2g+1}.
std::vector<int> OddIndexSet(int g);
// Even eps_T (#T even) with #(T symdiff U) != g+1.
std::vector<Characteristic> VanishingPattern(int g);
// Characteristic of the Thomae partition {P, complement} of
// {1..2g+2}, where 2g+2 is infinity: eps_{P symdiff U}.
Characteristic PartitionCharacteristic(const std::vector<int>& part, int g);

// Period matrix in the symplectic basis adapted to the eps map: the
// Abel-Jacobi images of the branch points are the half periods eps(k).
PeriodData PeriodMatrix(const HyperellipticCurve& curve,
                        double quad_tol = 1e-14);

// Thetanulls at the calibrated tau computed end to end at the working
// precision selected by GetPrecision().
std::vector<Complex> CurveThetanulls(const HyperellipticCurve& curve,
                                     const std::vector<Characteristic>& chars,
                                     double quad_tol = 1e-14,
                                     double theta_tol = 1e-14);

// Frobenius identity residual, normalized by the largest term. The b must
// sum to zero mod 1 and the z to zero; the fourth characteristic numerator is
// evaluated as -(b1 + b2 + b3) exactly.
double FrobeniusResidual(const HyperellipticCurve& curve, const CMatrix& tau,
                         const std::array<Characteristic, 4>& b,
                         const std::array<CVector, 4>& z,
                         double tol = 1e-14);

// Product of branch differences over pairs inside each part of a Thomae
// partition; index 2g+2 (infinity) contributes no factors.
Complex ThomaeProduct(const HyperellipticCurve& curve,
                      const std::vector<int>& part);

// |theta[e1]^8 / theta[e2]^8 - P1^2 / P2^2| / |P1^2 / P2^2|.
double ThomaeRatioCheck(const HyperellipticCurve& curve, const CMatrix& tau,
                        const std::vector<int>& part1,
                        const std::vector<int>& part2, double tol = 1e-14);

}  // namespace thetanull

#endif  // THETANULL_HYPERELLIPTIC_H_
