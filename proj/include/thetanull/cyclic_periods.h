#ifndef THETANULL_CYCLIC_PERIODS_H_
#define THETANULL_CYCLIC_PERIODS_H_

#include <array>
#include <utility>
#include <vector>

#include "thetanull/multiprecision.h"

namespace thetanull {

// Periods of the cyclic cover y^m = prod_k (x - p_k) with all p_k finite and
// m coprime to the number of points. The cycles are lifts of the segments of
// a spanning tree on the branch points; forms are x^i dx / y^j.
template <typename Real>
struct CyclicPeriods {
  int m = 2;
  std::vector<Complex> points;
  std::vector<std::pair<int, int>> forms;   // (i, j)
  std::vector<std::pair<int, int>> tree;    // spanning-tree edges
  std::vector<std::array<int, 3>> cycles;   // (a, b, sheet)
  CMatrixT<Real> periods;                   // cycles x forms
  IMatrix intersection;                     // cycle intersection matrix
  IMatrix basis;                            // rows A_1..A_g, B_1..B_g in cycle coords
  std::vector<int> holomorphic;             // indices into forms
  double quadrature_error = 0;
  double intersection_defect = 0;           // distance of the form to integers

  int genus() const { return static_cast<int>(holomorphic.size()); }
  int CycleIndex(int a, int b, int sheet) const;
};

template <typename Real>
CyclicPeriods<Real> ComputeCyclicPeriods(
    const std::vector<Complex>& points, int m,
    const std::vector<std::pair<int, int>>& holomorphic, double quad_tol,
    int sheet_shift = 0);

// A and B periods of the holomorphic forms for a change of symplectic basis
// `basis` (rows A_1..A_g, B_1..B_g in cycle coordinates). Rows of the
// returned blocks are cycles, columns are forms.
template <typename Real>
void HolomorphicPeriods(const CyclicPeriods<Real>& data, const IMatrix& basis,
                        CMatrixT<Real>* a_block, CMatrixT<Real>* b_block);

// tau = B A^{-1} in the row-cycle convention, symmetrized.
template <typename Real>
CMatrixT<Real> NormalizedTau(const CMatrixT<Real>& a_block,
                             const CMatrixT<Real>& b_block,
                             double* symmetry_defect = nullptr);

// Quality of the segment a-b: the smallest Bernstein-ellipse parameter of the
// other points relative to it.
double EdgeQuality(const std::vector<Complex>& points, int a, int b);
std::vector<std::pair<int, int>> SpanningTree(const std::vector<Complex>& points);

}  // namespace thetanull

#endif  // THETANULL_CYCLIC_PERIODS_H_
