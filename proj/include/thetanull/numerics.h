#ifndef THETANULL_NUMERICS_H_
#define THETANULL_NUMERICS_H_

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace thetanull {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using IMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// Bad input: wrong shape, out-of-range index, violated precondition.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Numerical failure: non-convergence, degenerate geometry, indeterminate
// locus membership.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

#define THETANULL_CHECK(cond, msg)                       \
  do {                                                   \
    if (!(cond)) throw ::thetanull::ValidationError(msg); \
  } while (0)

enum class Precision { kDouble, kExtended };

// Process-wide working precision for the analytic engines. kExtended uses a
// 113-bit significand internally; results are rounded to double on output.
void SetPrecision(Precision precision);
Precision GetPrecision();
Precision ParsePrecision(const std::string& name);
std::string PrecisionName(Precision precision);

// Cap on internal worker threads; honours THETA_CYCLIC_THREADS.
int MaxThreads();

// True iff ||m - m^T||_max <= sym_tol and Im(m) admits a Cholesky factor.
bool IsSiegel(const CMatrix& m, double sym_tol = 1e-8);

// Smallest eigenvalue of Im(tau). Throws ValidationError if tau is not Siegel.
double MinEigenImag(const CMatrix& tau, double sym_tol = 1e-8);

CMatrix Symmetrize(const CMatrix& m);
double SymmetryDefect(const CMatrix& m);

// Integer helpers for symplectic bookkeeping.
long long PosMod(long long a, long long n);
IMatrix RoundToInteger(const Eigen::MatrixXd& m, double tol = 1e-6);
IMatrix IntegerInverse(const IMatrix& m);
IMatrix StandardSymplecticForm(int g);

}  // namespace thetanull

#endif  // THETANULL_NUMERICS_H_
