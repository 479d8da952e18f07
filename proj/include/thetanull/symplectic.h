#ifndef THETANULL_SYMPLECTIC_H_
#define THETANULL_SYMPLECTIC_H_

#include <vector>

#include "thetanull/numerics.h"

namespace thetanull {

// Symplectic basis of Z^n for the unimodular alternating form E, found by
// Euclidean pairing. Rows of the result are A_1..A_g, B_1..B_g with
// A_i E B_j = delta_ij and all other pairings zero.
IMatrix SymplecticReduce(const IMatrix& form);

bool IsSymplectic(const IMatrix& m);

// Integer transvection x -> x + k (x^T J v) v, as a matrix.
IMatrix Transvection(const IVector& v, long long k);

// L with L X = Y mod 2, X invertible mod 2 (columns are vectors).
IMatrix SolveMapMod2(const IMatrix& x, const IMatrix& y);

// Vectors v_1..v_k with L = T_{v_1} ... T_{v_k} mod 2 for a symplectic L
// over F_2.
std::vector<IVector> DecomposeMod2(const IMatrix& l);

// Transvection powers over F_3 mapping x to y while fixing every vector in
// `fixed`; pairs (v, lambda) with lambda in {1, 2}.
struct F3Step {
  IVector v;
  int lambda;
};
std::vector<F3Step> RouteMod3(const IVector& x, const IVector& y,
                              const std::vector<IVector>& fixed);

// Inverse of an integer symplectic matrix: -J U^T J.
IMatrix SymplecticInverse(const IMatrix& u);

IMatrix ModMatrix(const IMatrix& m, long long p);
IVector ModVector(const IVector& v, long long p);

}  // namespace thetanull

#endif  // THETANULL_SYMPLECTIC_H_
