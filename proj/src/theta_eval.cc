#include "thetanull/theta_eval.h"

#include <algorithm>
#include <functional>
#include <cmath>
#include <thread>

#include "thetanull/theta_eval_t.h"

namespace thetanull {
namespace {

struct LatticeTerm {
  double log_magnitude;
  size_t order;
};

// Integer points u with (u - c)^T Y (u - c) <= rho^2, Y = R^T R with R upper
// triangular, in lexicographic order of the enumeration.
void EnumerateEllipsoid(const Eigen::MatrixXd& r, const Eigen::VectorXd& center,
                        double rho, std::vector<std::vector<int>>* points) {
  const int g = static_cast<int>(r.rows());
  std::vector<int> cur(g);
  const double rho2 = rho * rho;
  // Level i fixes u_i given u_{i+1..g-1}; remaining is the unused budget.
  std::function<void(int, double)> recurse = [&](int i, double remaining) {
    double c = 0;
    for (int j = i + 1; j < g; ++j) c += r(i, j) * (cur[j] - center(j));
    c /= r(i, i);
    const double half = std::sqrt(std::max(remaining, 0.0)) / r(i, i);
    const int lo = static_cast<int>(std::ceil(center(i) - c - half));
    const int hi = static_cast<int>(std::floor(center(i) - c + half));
    for (int u = lo; u <= hi; ++u) {
      const double d = r(i, i) * (u - center(i) + c);
      const double rest = remaining - d * d;
      if (rest < 0) continue;
      cur[i] = u;
      if (i == 0) {
        points->push_back(cur);
      } else {
        recurse(i - 1, rest);
      }
    }
  };
  recurse(g - 1, rho2);
}

template <typename Real>
double ImagNorm(const CVectorT<Real>& z) {
  double s = 0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double y = static_cast<double>(z(i).imag());
    s += y * y;
  }
  return std::sqrt(s);
}

template <typename Real>
void CheckInputs(size_t genus, const CVectorT<Real>& z,
                 const CMatrixT<Real>& tau) {
  THETANULL_CHECK(tau.rows() == tau.cols() && tau.rows() >= 1,
                  "tau must be a square matrix");
  THETANULL_CHECK(static_cast<Eigen::Index>(genus) == tau.rows(),
                  "characteristic genus mismatch");
  THETANULL_CHECK(z.size() == tau.rows(), "argument dimension mismatch");
}

}  // namespace

double TruncationRadius(int g, double lambda_min, double im_z_norm,
                        double tol) {
  THETANULL_CHECK(lambda_min > 0, "Im(tau) must be positive definite");
  THETANULL_CHECK(tol > 0, "tolerance must be positive");
  const double pi = M_PI;
  // Shell bound is decreasing in k beyond the peak of the Gaussian factor.
  const int k0 = static_cast<int>(std::ceil(im_z_norm / lambda_min));
  auto log_shell = [&](int k) {
    return g * std::log(2.0 * k + 3.0) - pi * lambda_min * k * k +
           2.0 * pi * k * im_z_norm;
  };
  const double log_tol = std::log(tol);
  for (int r = std::max(k0, 0);; ++r) {
    // The tail decays faster than geometrically, so a finite window bounds it.
    double lmax = log_shell(r);
    double sum = 0;
    for (int k = r; k < r + 400; ++k) {
      const double l = log_shell(k);
      sum += std::exp(l - lmax);
      if (l - lmax < -60) break;
    }
    if (lmax + std::log(sum) < log_tol) return static_cast<double>(r);
    if (r > 100000) throw NumericalError("truncation radius diverged");
  }
}

double TruncationRadius(const CMatrix& tau, double im_z_norm, double tol) {
  return TruncationRadius(static_cast<int>(tau.rows()), MinEigenImag(tau),
                          im_z_norm, tol);
}

double EllipsoidRadius(int g, double lambda_min, double log_peak, double tol) {
  THETANULL_CHECK(lambda_min > 0, "Im(tau) must be positive definite");
  THETANULL_CHECK(tol > 0, "tolerance must be positive");
  // Balls of radius delta around lattice points are disjoint in the Y metric,
  // so a Y-ball of radius r holds at most ((r + delta) / delta)^g points.
  const double delta = 0.5 * std::sqrt(lambda_min);
  const double h = 0.25;
  auto log_shell = [&](double k) {
    return g * std::log((k + h + delta) / delta) - M_PI * k * k + log_peak;
  };
  const double log_tol = std::log(tol);
  for (int step = 0;; ++step) {
    const double rho = step * h;
    double lmax = log_shell(rho);
    double sum = 0;
    for (int k = 0; k < 4000; ++k) {
      const double l = log_shell(rho + k * h);
      sum += std::exp(l - lmax);
      if (l - lmax < -60) break;
    }
    if (lmax + std::log(sum) < log_tol) return rho;
    if (step > 400000) throw NumericalError("truncation radius diverged");
  }
}

template <typename Real>
double MinEigenImagT(const CMatrixT<Real>& tau) {
  const CMatrix t = MatrixToDouble<Real>(tau);
  const double scale = std::max(1.0, t.cwiseAbs().maxCoeff());
  return MinEigenImag(t, 1e-8 * scale);
}

template <typename Real>
ComplexT<Real> ThetaCharT(const Characteristic& c, const CVectorT<Real>& z,
                          const CMatrixT<Real>& tau, double tol) {
  return ThetaRationalT<Real>(
      std::vector<long long>(c.top.begin(), c.top.end()),
      std::vector<long long>(c.bottom.begin(), c.bottom.end()), c.level, z,
      tau, tol);
}

template <typename Real>
ComplexT<Real> ThetaRationalT(const std::vector<long long>& top,
                              const std::vector<long long>& bottom, int level,
                              const CVectorT<Real>& z, const CMatrixT<Real>& tau,
                              double tol) {
  THETANULL_CHECK(level >= 1, "characteristic level must be positive");
  THETANULL_CHECK(top.size() == bottom.size(),
                  "characteristic rows must have equal length");
  CheckInputs<Real>(top.size(), z, tau);
  const int g = static_cast<int>(tau.rows());
  const double lambda = MinEigenImagT<Real>(tau);

  std::vector<Real> a(g);
  CVectorT<Real> zb = z;
  for (int i = 0; i < g; ++i) {
    a[i] = Real(top[i]) / Real(level);
    zb(i) += ComplexT<Real>(Real(bottom[i]) / Real(level), Real(0));
  }
  // |term(v)| = exp(-pi (v - c)^T Y (v - c) + pi y^T Y^{-1} y), c = -Y^{-1} y,
  // v = u + a.
  const CMatrix tau_d = MatrixToDouble<Real>(tau);
  const Eigen::MatrixXd y_mat = 0.5 * (tau_d.imag() + tau_d.imag().transpose());
  Eigen::VectorXd y_vec(g);
  for (int i = 0; i < g; ++i) y_vec(i) = static_cast<double>(z(i).imag());
  const Eigen::LLT<Eigen::MatrixXd> llt(y_mat);
  if (llt.info() != Eigen::Success) throw ValidationError("Im(tau) is not positive definite");
  const Eigen::VectorXd yinv_y = llt.solve(y_vec);
  const double log_peak = M_PI * y_vec.dot(yinv_y);
  const double rho = EllipsoidRadius(g, lambda, log_peak, tol);
  Eigen::VectorXd center(g);
  for (int i = 0; i < g; ++i) {
    center(i) = -yinv_y(i) - static_cast<double>(top[i]) / level;
  }
  const Eigen::MatrixXd r_mat = llt.matrixU();
  std::vector<std::vector<int>> points;
  // A small margin absorbs rounding in the enumeration bounds.
  EnumerateEllipsoid(r_mat, center, rho * (1 + 1e-12) + 1e-12, &points);

  const Real pi = Pi<Real>();
  const ComplexT<Real> i_pi(Real(0), pi);
  std::vector<ComplexT<Real>> exponents(points.size());
  std::vector<LatticeTerm> order(points.size());
  std::vector<Real> v(g);
  for (size_t p = 0; p < points.size(); ++p) {
    for (int i = 0; i < g; ++i) v[i] = Real(points[p][i]) + a[i];
    ComplexT<Real> q(Real(0), Real(0));
    for (int i = 0; i < g; ++i) {
      ComplexT<Real> row = tau(i, i) * v[i];
      for (int j = i + 1; j < g; ++j) row += Real(2) * tau(i, j) * v[j];
      q += v[i] * row;
      q += Real(2) * v[i] * zb(i);
    }
    exponents[p] = i_pi * q;
    order[p] = {static_cast<double>(exponents[p].real()), p};
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const LatticeTerm& x, const LatticeTerm& y) {
                     return x.log_magnitude > y.log_magnitude;
                   });
  ComplexT<Real> sum(Real(0), Real(0));
  for (const LatticeTerm& t : order) sum += exp(exponents[t.order]);
  return sum;
}

template <typename Real>
std::vector<ComplexT<Real>> ThetanullsT(const std::vector<Characteristic>& chars,
                                        const CMatrixT<Real>& tau, double tol) {
  std::vector<ComplexT<Real>> out(chars.size());
  const CVectorT<Real> zero =
      CVectorT<Real>::Constant(tau.rows(), ComplexT<Real>(Real(0), Real(0)));
  const int workers =
      std::max(1, std::min<int>(MaxThreads(), static_cast<int>(chars.size())));
  if (workers == 1) {
    for (size_t k = 0; k < chars.size(); ++k) {
      out[k] = ThetaCharT<Real>(chars[k], zero, tau, tol);
    }
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (size_t k = w; k < chars.size(); k += workers) {
          out[k] = ThetaCharT<Real>(chars[k], zero, tau, tol);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

template double MinEigenImagT<double>(const CMatrixT<double>&);
template double MinEigenImagT<Float113>(const CMatrixT<Float113>&);
template ComplexT<double> ThetaCharT<double>(const Characteristic&,
                                             const CVectorT<double>&,
                                             const CMatrixT<double>&, double);
template ComplexT<Float113> ThetaCharT<Float113>(const Characteristic&,
                                                 const CVectorT<Float113>&,
                                                 const CMatrixT<Float113>&,
                                                 double);
template ComplexT<double> ThetaRationalT<double>(
    const std::vector<long long>&, const std::vector<long long>&, int,
    const CVectorT<double>&, const CMatrixT<double>&, double);
template ComplexT<Float113> ThetaRationalT<Float113>(
    const std::vector<long long>&, const std::vector<long long>&, int,
    const CVectorT<Float113>&, const CMatrixT<Float113>&, double);
template std::vector<ComplexT<double>> ThetanullsT<double>(
    const std::vector<Characteristic>&, const CMatrixT<double>&, double);
template std::vector<ComplexT<Float113>> ThetanullsT<Float113>(
    const std::vector<Characteristic>&, const CMatrixT<Float113>&, double);

Complex ThetaChar(const Characteristic& c, const CVector& z,
                  const CMatrix& tau, double tol) {
  if (GetPrecision() == Precision::kExtended) {
    CVectorT<Float113> ze(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) ze(i) = FromDouble<Float113>(z(i));
    return ToDouble<Float113>(
        ThetaCharT<Float113>(c, ze, MatrixFromDouble<Float113>(tau), tol));
  }
  return ThetaCharT<double>(c, z, tau, tol);
}

Complex ThetaRational(const std::vector<long long>& top,
                      const std::vector<long long>& bottom, int level,
                      const CVector& z, const CMatrix& tau, double tol) {
  if (GetPrecision() == Precision::kExtended) {
    CVectorT<Float113> ze(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) ze(i) = FromDouble<Float113>(z(i));
    return ToDouble<Float113>(ThetaRationalT<Float113>(
        top, bottom, level, ze, MatrixFromDouble<Float113>(tau), tol));
  }
  return ThetaRationalT<double>(top, bottom, level, z, tau, tol);
}

Complex Theta(const CVector& z, const CMatrix& tau, double tol) {
  return ThetaChar(Characteristic::Zero(static_cast<int>(tau.rows())), z, tau,
                   tol);
}

Complex Thetanull(const Characteristic& c, const CMatrix& tau, double tol) {
  return ThetaChar(c, CVector::Zero(tau.rows()), tau, tol);
}

std::vector<Complex> Thetanulls(const std::vector<Characteristic>& chars,
                                const CMatrix& tau, double tol) {
  std::vector<Complex> out;
  if (GetPrecision() == Precision::kExtended) {
    for (const auto& v :
         ThetanullsT<Float113>(chars, MatrixFromDouble<Float113>(tau), tol)) {
      out.push_back(ToDouble<Float113>(v));
    }
  } else {
    out = ThetanullsT<double>(chars, tau, tol);
  }
  return out;
}

int QuarticCandidateCountFormula(int g) {
  THETANULL_CHECK(g >= 2, "candidate count needs genus >= 2");
  return 2 * (1 << (g - 2)) * ((1 << (g - 1)) + 1);
}

QuarticResult QuarticIdentityResiduals(const CMatrix& tau, const Characteristic& a,
                           const Characteristic& h, double tol) {
  const int g = static_cast<int>(tau.rows());
  THETANULL_CHECK(g >= 2, "quartic identities need genus >= 2");
  THETANULL_CHECK(a.genus == g && h.genus == g, "characteristic genus mismatch");
  THETANULL_CHECK(a.IsHalf() && h.IsHalf(), "half characteristics required");
  THETANULL_CHECK(h.Mask() != 0, "shift characteristic must be nonzero");

  const std::vector<Characteristic> all = AllHalfCharacteristics(g);
  const std::vector<Complex> th = Thetanulls(all, tau, tol);
  auto value = [&](const Characteristic& c) { return th[c.Mask()]; };

  std::vector<Characteristic> candidates;
  for (const auto& e : all) {
    if (IsEven(e) && IsEven(Compose(e, h))) candidates.push_back(e);
  }
  QuarticResult r;
  r.candidates = static_cast<int>(candidates.size());
  if (r.candidates != QuarticCandidateCountFormula(g)) {
    throw ValidationError("candidate count disagrees with the closed form");
  }
  for (const auto& c : all) {
    if (IsEven(c)) r.scale = std::max(r.scale, std::pow(std::abs(value(c)), 4));
  }

  const Characteristic ah = Compose(a, h);
  const double sign_ah = Pairing(a, h) == 0 ? 1.0 : -1.0;
  // Summing over every candidate counts each product for e and e o h once,
  // hence the 2^{-g} normalization.
  const double norm = 1.0 / static_cast<double>(1 << g);
  static const Complex kUnitPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Complex rhs1 = 0, rhs2 = 0, literal1 = 0;
  for (const auto& e : candidates) {
    const Characteristic ae = Compose(a, e);
    const Characteristic eh = Compose(e, h);
    const int k = (IsEven(ae) ? 0 : 2) + BinomialExponent(ae, h);
    const int k_literal = (IsEven(ae) ? 0 : 2) + BinomialExponent(h, ae);
    const Complex weight = kUnitPowers[k % 4];
    const double parity_weight = IsEven(ae) ? 1.0 : -1.0;
    const Complex product = std::pow(value(e), 2) * std::pow(value(eh), 2);
    rhs1 += weight * product;
    literal1 += kUnitPowers[k_literal % 4] * product;
    rhs2 += parity_weight *
            (std::pow(value(e), 4) + sign_ah * std::pow(value(eh), 4));
  }
  const Complex lhs1 = std::pow(value(a), 2) * std::pow(value(ah), 2);
  const Complex lhs2 = std::pow(value(a), 4) + sign_ah * std::pow(value(ah), 4);
  r.residual1 = std::abs(lhs1 - norm * rhs1);
  r.residual2 = std::abs(lhs2 - norm * rhs2);
  r.literal_residual1 = std::abs(lhs1 - 2.0 * norm * literal1);
  r.literal_residual2 = std::abs(lhs2 - 2.0 * norm * rhs2);
  return r;
}

}  // namespace thetanull
