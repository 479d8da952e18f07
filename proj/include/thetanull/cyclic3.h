#ifndef THETANULL_CYCLIC3_H_
#define THETANULL_CYCLIC3_H_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "thetanull/characteristics.h"
#include "thetanull/hyperelliptic.h"
#include "thetanull/numerics.h"
#include "thetanull/theta_eval.h"

namespace thetanull {

// Genus-3 cyclic trigonal curve y^3 = x (x - 1) (x - s) (x - t).
struct TrigonalCurve {
  Complex s = 2.0;
  Complex t = 3.0;

  TrigonalCurve() = default;
  TrigonalCurve(Complex s_in, Complex t_in);
  // Finite branch points in the order 0, 1, s, t.
  std::vector<Complex> BranchPoints() const;
  void Validate() const;
};

// Frame rule: the two mod-3 classes p0 and w that route to the displayed
// characteristics, as coefficient words on the Abel-Jacobi images of the
// branch points 0, 1, s, t. Words are canonical: lexicographically smallest
// modulo (1,1,1,1), the relation among the four images.
struct TrigonalCalibration {
  std::array<int, 4> p0_word{};
  std::array<int, 4> w_word{};

  // The rule found by CalibrateTrigonal on (s, t) = (2, 3).
  static TrigonalCalibration Frozen();
  std::string ToString() const;
  bool operator==(const TrigonalCalibration& o) const {
    return p0_word == o.p0_word && w_word == o.w_word;
  }
};

// One integer transvection x -> x + power (x^T J v) v on cycle coordinates.
struct TransvectionStep {
  IVector v;
  long long power = 1;
};

struct TrigonalPeriodData {
  PeriodData periods;  // in the calibrated frame
  // Raw symplectic basis (rows A_1..A_3, B_1..B_3 in cycle coordinates) and
  // the calibrated one, related by the transvection word.
  IMatrix raw_basis;
  IMatrix basis;
  std::vector<TransvectionStep> word;
  CMatrix raw_tau;
  // Abel-Jacobi images of 0, 1, s, t in the raw frame as numerators mod 3
  // of (bottom; top) coordinates.
  std::array<IVector, 4> abel_jacobi;
  // Riemann constant in the raw frame and the size of the largest theta on
  // its vanishing set.
  Characteristic riemann_constant;
  double riemann_vanishing = 0;
  TrigonalCalibration calibration;
};

// Period matrix of the holomorphic forms dx/y, dx/y^2, x dx/y^2 in the
// calibrated frame. sheet_shift relabels the sheets by a deck transformation.
TrigonalPeriodData TrigonalPeriodMatrix(
    const TrigonalCurve& curve, double quad_tol = 1e-14,
    const TrigonalCalibration& calibration = TrigonalCalibration::Frozen(),
    int sheet_shift = 0);

// M with calibrated tau = M . raw tau, and the raw-frame characteristics
// that M maps onto Level6Characteristics() modulo integers.
IMatrix CalibrationTransform(const TrigonalPeriodData& data);
std::array<Characteristic, 3> RawFrameCharacteristics(
    const TrigonalPeriodData& data);

// Frame rule search on a reference curve: the pairs of Abel-Jacobi words for
// which the calibrated thetas reproduce the reference (s, t) and the
// exchanged (t, s) to `match_tol`, with the lexicographically smallest
// returned. Rules matching only the unexchanged reference are listed in
// `rejected`.
struct CalibrationResult {
  TrigonalCalibration best;
  std::vector<TrigonalCalibration> candidates;
  std::vector<TrigonalCalibration> rejected;
  double best_error = 0;
};
CalibrationResult CalibrateTrigonal(const TrigonalCurve& reference,
                                    double quad_tol = 1e-14,
                                    double match_tol = 1e-6);

// Level-6 characteristics with numerators (0,1,0; 4,1,4), (0,1,0; 2,1,2),
// (0,1,0; 0,1,0).
std::array<Characteristic, 3> Level6Characteristics();

struct Level6Thetas {
  std::array<Complex, 3> theta;
  const Complex& operator()(int i) const { return theta.at(i - 1); }
};

Level6Thetas Level6ThetasFromTau(const CMatrix& tau,
                                 double tol = kDefaultThetaTol);

// (s, t) = (theta_2^3 / theta_1^3, theta_3^3 / theta_1^3).
std::pair<Complex, Complex> BranchFromTrigonal(const Level6Thetas& th);

// |theta_2^3 - theta_1^3 + theta_3^3| / max(|theta_1|^3, 1e-300).
double C6RelationResidual(const Level6Thetas& th);

// Integer symplectic M = [[A, B], [C, D]] acting on tau by
// (A tau + B)(C tau + D)^{-1}.
CMatrix SymplecticActionOnTau(const IMatrix& m, const CMatrix& tau);

// Exact action of M on a characteristic with numerators over `level`:
// top' = D top - C bottom + diag(C D^T) / 2,
// bottom' = -B top + A bottom + diag(A B^T) / 2, returned over 2 * level
// without reduction.
std::pair<std::vector<long long>, std::vector<long long>> CharacteristicAction(
    const IMatrix& m, const std::vector<long long>& top,
    const std::vector<long long>& bottom, int level);

// Phase phi with theta[M c](0, M tau) = kappa(M) exp(2 pi i phi)
// det(C tau + D)^{1/2} theta[c](0, tau), reduced into [0, 1) and returned as
// a double.
double ThetaTransformPhase(const IMatrix& m, const std::vector<long long>& top,
                           const std::vector<long long>& bottom, int level);

// The period matrix of the sheet-relabeled computation against the
// unshifted one: an integer symplectic N with Pi' = N Pi must exist.
struct DeckCheck {
  double integrality_defect = 0;  // distance of N to the nearest integers
  bool symplectic = false;
  double tau_residual = 0;        // |tau' - N . tau| relative
  IMatrix n;
};
DeckCheck TrigonalDeckCheck(const TrigonalCurve& curve, int sheet_shift = 1,
                            double quad_tol = 1e-14);

}  // namespace thetanull

#endif  // THETANULL_CYCLIC3_H_
