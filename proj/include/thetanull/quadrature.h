#ifndef THETANULL_QUADRATURE_H_
#define THETANULL_QUADRATURE_H_

#include <cmath>
#include <functional>
#include <vector>

#include "thetanull/multiprecision.h"

namespace thetanull {

template <typename Real>
struct QuadratureResult {
  std::vector<ComplexT<Real>> values;
  double error = 0;
  int evaluations = 0;
};

// Vector integrand evaluated at u in (-1, 1); the rule supplies the weight.
template <typename Real>
using VectorIntegrand =
    std::function<void(const Real& u, std::vector<ComplexT<Real>>* out)>;

template <typename Real>
double MaxAbsDiff(const std::vector<ComplexT<Real>>& a,
                  const std::vector<ComplexT<Real>>& b, double* scale) {
  double d = 0;
  *scale = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    d = std::max(d, AbsD<Real>(ComplexT<Real>(a[k] - b[k])));
    *scale = std::max(*scale, AbsD<Real>(a[k]));
  }
  return d;
}

// Gauss-Chebyshev rule for int_{-1}^{1} f(u) / sqrt(1 - u^2) du with node
// doubling until successive estimates agree to tol (relative to max(1, |I|)).
template <typename Real>
QuadratureResult<Real> GaussChebyshev(const VectorIntegrand<Real>& f,
                                      size_t dim, double tol,
                                      int max_nodes = 1 << 16) {
  const Real pi = Pi<Real>();
  std::vector<ComplexT<Real>> prev, cur(dim), tmp(dim);
  QuadratureResult<Real> r;
  for (int n = 16; n <= max_nodes; n *= 2) {
    for (auto& c : cur) c = ComplexT<Real>(Real(0), Real(0));
    for (int k = 1; k <= n; ++k) {
      const Real u = cos(Real(2 * k - 1) * pi / Real(2 * n));
      f(u, &tmp);
      for (size_t d = 0; d < dim; ++d) cur[d] += tmp[d];
    }
    for (auto& c : cur) c *= pi / Real(n);
    r.evaluations += n;
    if (!prev.empty()) {
      double scale = 0;
      const double diff = MaxAbsDiff<Real>(cur, prev, &scale);
      if (diff <= tol * std::max(1.0, scale)) {
        r.values = cur;
        r.error = diff;
        return r;
      }
    }
    prev = cur;
  }
  throw NumericalError("Gauss-Chebyshev quadrature did not converge");
}

// Tanh-sinh rule for int_{-1}^{1} f(u) (1 - u^2)^{-alpha} du, 0 <= alpha < 1.
// The endpoint weight is folded into the transformed measure analytically so
// that nodes arbitrarily close to +-1 lose no accuracy.
template <typename Real>
QuadratureResult<Real> TanhSinh(const VectorIntegrand<Real>& f, size_t dim,
                                const Real& alpha, double tol,
                                int max_level = 12) {
  using std::log;
  const Real pi = Pi<Real>();
  const Real half_pi = pi / Real(2);
  const double eps = static_cast<double>(std::numeric_limits<Real>::epsilon());
  const double a = static_cast<double>(alpha);
  // Weight decays like exp(-(2 - 2 alpha) w) with w = (pi/2) sinh s.
  const double w_max = (-std::log(eps) + 10.0) / (2.0 - 2.0 * a);
  const double s_max = std::asinh(w_max / (M_PI / 2));

  auto log_cosh = [](const Real& w) {
    const Real aw = w < 0 ? Real(-w) : w;
    return Real(aw + log1p(exp(Real(-2) * aw)) - log(Real(2)));
  };
  std::vector<ComplexT<Real>> tmp(dim);
  auto accumulate = [&](const Real& s, std::vector<ComplexT<Real>>* acc) {
    const Real w = half_pi * sinh(s);
    const Real u = tanh(w);
    const Real weight =
        half_pi * cosh(s) * exp((Real(2) * alpha - Real(2)) * log_cosh(w));
    f(u, &tmp);
    for (size_t d = 0; d < dim; ++d) (*acc)[d] += weight * tmp[d];
  };

  QuadratureResult<Real> r;
  std::vector<ComplexT<Real>> sum(dim, ComplexT<Real>(Real(0), Real(0)));
  std::vector<ComplexT<Real>> prev;
  Real h(1);
  const int k_max0 = static_cast<int>(std::ceil(s_max));
  for (int k = -k_max0; k <= k_max0; ++k) {
    accumulate(Real(k), &sum);
    ++r.evaluations;
  }
  std::vector<ComplexT<Real>> est = sum;
  for (int level = 1; level <= max_level; ++level) {
    h /= Real(2);
    const int k_max = static_cast<int>(std::ceil(s_max / static_cast<double>(h)));
    std::vector<ComplexT<Real>> odd(dim, ComplexT<Real>(Real(0), Real(0)));
    for (int k = -k_max; k <= k_max; ++k) {
      if ((k & 1) == 0) continue;
      accumulate(Real(k) * h, &odd);
      ++r.evaluations;
    }
    for (size_t d = 0; d < dim; ++d) sum[d] += odd[d];
    std::vector<ComplexT<Real>> next(dim);
    for (size_t d = 0; d < dim; ++d) next[d] = sum[d] * h;
    if (level >= 3) {
      double scale = 0;
      const double diff = MaxAbsDiff<Real>(next, est, &scale);
      if (diff <= tol * std::max(1.0, scale)) {
        r.values = next;
        r.error = diff;
        return r;
      }
    }
    est = next;
  }
  throw NumericalError("tanh-sinh quadrature did not converge");
}

}  // namespace thetanull

#endif  // THETANULL_QUADRATURE_H_
