#ifndef THETANULL_GENUS3_HYPER_H_
#define THETANULL_GENUS3_HYPER_H_

#include <array>
#include <utility>
#include <vector>

#include "thetanull/characteristics.h"
#include "thetanull/hyperelliptic.h"
#include "thetanull/numerics.h"

namespace thetanull {

// theta_1..theta_64; the first 36 are even. Index 12 is the even
// characteristic that vanishes on hyperelliptic period matrices.
const std::vector<Characteristic>& Genus3CharTable();
constexpr int kGenus3VanishingIndex = 12;

// Thomae products for theta_i^4 / A with the branch points labelled
// a_1..a_5, a_6 = 0, a_7 = 1; (i, j) stands for a_i - a_j. Thirty-five
// entries, theta_12 excluded.
struct Thomae36Entry {
  int theta;
  std::vector<std::pair<int, int>> factors;
};
const std::vector<Thomae36Entry>& Thomae36Table();

// Partition of {1..8} (8 = infinity) in the labelling above, read off from
// the factors: the part not containing infinity.
std::vector<int> Thomae36Partition(const Thomae36Entry& entry);

// Evaluates the product of an entry for a = (a1..a5).
Complex Thomae36Product(const Thomae36Entry& entry, const std::array<Complex, 5>& a);

// Even thetanulls theta_1..theta_36, 1-based.
struct Genus3Thetas {
  std::array<Complex, 36> values{};
  Complex operator()(int i) const { return values.at(i - 1); }
  static Genus3Thetas FromTau(const CMatrix& tau, double tol = 1e-14);
};

// For each table entry, |theta_i^8 / theta_1^8 - P_i^2 / P_1^2| relative to
// the right side. The first entry is theta_1 itself.
std::vector<double> Thomae36RatioResiduals(const HyperellipticCurve& curve,
                                           const Genus3Thetas& t);

// (a1..a5) from the selected ratios.
std::array<Complex, 5> BranchFromThetasG3(const Genus3Thetas& t);

// The three squared alternatives for each a_i^2.
std::array<std::array<Complex, 3>, 5> PossibleRatios(const Genus3Thetas& t);

// Largest pairwise relative disagreement among the alternatives.
double PossibleRatiosSpread(const Genus3Thetas& t);

// Indices of the thetanulls used by the recovery formulas.
std::vector<int> RecoveryThetaIndices();
// The indices 1, 6, 7, 11, 15, 24, 31, which lie in one Goepel group.
std::vector<int> RemarkGoepelIndices();
// A rank-3 Goepel group containing every characteristic of the given
// indices, if one exists.
bool ShareGoepelGroup(const std::vector<int>& indices, GoepelGroup* group = nullptr);

}  // namespace thetanull

#endif  // THETANULL_GENUS3_HYPER_H_
