#include "thetanull/numerics.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace thetanull {
namespace {

std::atomic<Precision> g_precision{Precision::kDouble};

}  // namespace

void SetPrecision(Precision precision) { g_precision.store(precision); }

Precision GetPrecision() { return g_precision.load(); }

Precision ParsePrecision(const std::string& name) {
  if (name == "double") return Precision::kDouble;
  if (name == "extended") return Precision::kExtended;
  throw ValidationError("unknown precision '" + name +
                        "' (expected double or extended)");
}

std::string PrecisionName(Precision precision) {
  return precision == Precision::kDouble ? "double" : "extended";
}

int MaxThreads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("THETA_CYCLIC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<int>(std::min<long>(v, hw));
  }
  return hw;
}

double SymmetryDefect(const CMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

bool IsSiegel(const CMatrix& m, double sym_tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) return false;
  if (!m.allFinite()) return false;
  if (SymmetryDefect(m) > sym_tol) return false;
  const Eigen::MatrixXd y = 0.5 * (m.imag() + m.imag().transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(y);
  return llt.info() == Eigen::Success;
}

double MinEigenImag(const CMatrix& tau, double sym_tol) {
  if (!IsSiegel(tau, sym_tol)) {
    throw ValidationError("matrix is not in the Siegel upper half space");
  }
  const Eigen::MatrixXd y = 0.5 * (tau.imag() + tau.imag().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

CMatrix Symmetrize(const CMatrix& m) { return 0.5 * (m + m.transpose()); }

long long PosMod(long long a, long long n) {
  const long long r = a % n;
  return r < 0 ? r + n : r;
}

IMatrix RoundToInteger(const Eigen::MatrixXd& m, double tol) {
  IMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double v = std::round(m(i, j));
      if (std::abs(v - m(i, j)) > tol) {
        throw NumericalError("matrix is not integral within tolerance");
      }
      r(i, j) = static_cast<long long>(v);
    }
  }
  return r;
}

IMatrix IntegerInverse(const IMatrix& m) {
  THETANULL_CHECK(m.rows() == m.cols(), "IntegerInverse needs a square matrix");
  const Eigen::MatrixXd inv = m.cast<double>().inverse();
  IMatrix r = RoundToInteger(inv, 1e-6);
  if (r * m != IMatrix::Identity(m.rows(), m.cols())) {
    throw NumericalError("matrix is not unimodular");
  }
  return r;
}

IMatrix StandardSymplecticForm(int g) {
  IMatrix j = IMatrix::Zero(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

}  // namespace thetanull
