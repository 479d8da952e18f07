#include "thetanull/cyclic_periods.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <set>

#include "thetanull/quadrature.h"
#include "thetanull/symplectic.h"

namespace thetanull {
namespace {

template <typename Real>
ComplexT<Real> Root(const ComplexT<Real>& z, int m) {
  return exp(log(z) / Real(m));
}

template <typename Real>
ComplexT<Real> Cx(const Complex& z) {
  return FromDouble<Real>(z);
}

// Integrals of x^i half / y0(u)^j over u in (-1, 1), for i = 0..n-2, where
// y0 is a continuous branch of y along the segment a-b.
template <typename Real>
QuadratureResult<Real> EdgeIntegrals(const std::vector<Complex>& pts, int a,
                                     int b, int m, int j, double quad_tol) {
  const int n = static_cast<int>(pts.size());
  const ComplexT<Real> pa = Cx<Real>(pts[a]), pb = Cx<Real>(pts[b]);
  const ComplexT<Real> mid = (pa + pb) / Real(2);
  const ComplexT<Real> half = (pb - pa) / Real(2);
  ComplexT<Real> half_n(Real(1), Real(0));
  for (int k = 0; k < n; ++k) half_n *= half;
  const ComplexT<Real> lead = Root<Real>(ComplexT<Real>(-half_n), m);
  struct Factor {
    ComplexT<Real> uk;
    ComplexT<Real> scale;  // (-u_k)^{1/m} for far points
    bool far;
  };
  std::vector<Factor> factors;
  for (int k = 0; k < n; ++k) {
    if (k == a || k == b) continue;
    Factor f;
    f.uk = (Cx<Real>(pts[k]) - mid) / half;
    f.far = abs(f.uk) > Real(1);
    f.scale = f.far ? Root<Real>(ComplexT<Real>(-f.uk), m)
                    : ComplexT<Real>(Real(1), Real(0));
    factors.push_back(f);
  }
  const size_t dim = static_cast<size_t>(n - 1);
  VectorIntegrand<Real> integrand = [&](const Real& u,
                                        std::vector<ComplexT<Real>>* out) {
    ComplexT<Real> y = lead;
    const ComplexT<Real> uc(u, Real(0));
    for (const Factor& f : factors) {
      if (f.far) {
        y *= f.scale * Root<Real>(ComplexT<Real>(Real(1) - uc / f.uk), m);
      } else {
        y *= Root<Real>(ComplexT<Real>(uc - f.uk), m);
      }
    }
    ComplexT<Real> yj = y;
    for (int t = 1; t < j; ++t) yj *= y;
    const ComplexT<Real> x = mid + half * u;
    ComplexT<Real> v = half / yj;
    for (size_t i = 0; i < dim; ++i) {
      (*out)[i] = v;
      v *= x;
    }
  };
  if (m == 2) return GaussChebyshev<Real>(integrand, dim, quad_tol);
  return TanhSinh<Real>(integrand, dim, Real(j) / Real(m), quad_tol);
}

// Coefficients of prod_k (1 - p_k T)^{-j/m} up to T^order.
template <typename Real>
std::vector<ComplexT<Real>> InfinitySeries(const std::vector<Complex>& pts,
                                           int m, int j, int order) {
  const ComplexT<Real> zero(Real(0), Real(0));
  std::vector<ComplexT<Real>> logc(order + 1, zero), e(order + 1, zero);
  for (int r = 1; r <= order; ++r) {
    ComplexT<Real> s = zero;
    for (const Complex& p : pts) {
      ComplexT<Real> pr(Real(1), Real(0));
      const ComplexT<Real> pc = Cx<Real>(p);
      for (int t = 0; t < r; ++t) pr *= pc;
      s += pr;
    }
    logc[r] = s * (Real(j) / Real(m)) / Real(r);
  }
  e[0] = ComplexT<Real>(Real(1), Real(0));
  for (int k = 1; k <= order; ++k) {
    ComplexT<Real> acc = zero;
    for (int r = 1; r <= k; ++r) acc += Real(r) * logc[r] * e[k - r];
    e[k] = acc / Real(k);
  }
  return e;
}

// Residue pairing of the forms at infinity: C[A][B] = Res(F_A omega_B) with
// dF_A = omega_A, in the local parameter at the unique point over infinity.
template <typename Real>
CMatrixT<Real> CupMatrix(const std::vector<Complex>& pts, int m,
                         const std::vector<std::pair<int, int>>& forms) {
  const int n = static_cast<int>(pts.size());
  const int order = 3 * n + 6;
  const size_t nf = forms.size();
  std::vector<std::vector<std::pair<int, ComplexT<Real>>>> series(nf);
  for (size_t f = 0; f < nf; ++f) {
    const auto [i, j] = forms[f];
    const auto s = InfinitySeries<Real>(pts, m, j, order);
    const int p0 = n * j - m * i - m - 1;
    for (int r = 0; r <= order; ++r) {
      series[f].push_back({p0 + m * r, ComplexT<Real>(Real(-m) * s[r])});
    }
  }
  CMatrixT<Real> c(nf, nf);
  for (size_t x = 0; x < nf; ++x) {
    for (size_t y = 0; y < nf; ++y) {
      ComplexT<Real> acc(Real(0), Real(0));
      for (const auto& [p, coef] : series[x]) {
        if (p + 1 == 0) throw NumericalError("logarithmic term at infinity");
        const int q = -1 - (p + 1);
        for (const auto& [py, cy] : series[y]) {
          if (py == q) acc += coef / Real(p + 1) * cy;
        }
      }
      c(x, y) = acc;
    }
  }
  return c;
}

void CheckPoints(const std::vector<Complex>& pts) {
  double scale = 1.0;
  for (const Complex& p : pts) {
    THETANULL_CHECK(std::isfinite(p.real()) && std::isfinite(p.imag()),
                    "branch points must be finite");
    scale = std::max(scale, std::abs(p));
  }
  for (size_t a = 0; a < pts.size(); ++a) {
    for (size_t b = a + 1; b < pts.size(); ++b) {
      if (std::abs(pts[a] - pts[b]) < 1e-10 * scale) {
        throw ValidationError("branch points are not distinct");
      }
    }
  }
}

}  // namespace

double EdgeQuality(const std::vector<Complex>& pts, int a, int b) {
  const Complex mid = 0.5 * (pts[a] + pts[b]);
  const Complex half = 0.5 * (pts[b] - pts[a]);
  double r = 1e300;
  for (int k = 0; k < static_cast<int>(pts.size()); ++k) {
    if (k == a || k == b) continue;
    const Complex u = (pts[k] - mid) / half;
    const Complex s = std::sqrt(u * u - 1.0);
    r = std::min(r, std::max(std::abs(u + s), std::abs(u - s)));
  }
  return r;
}

std::vector<std::pair<int, int>> SpanningTree(const std::vector<Complex>& pts) {
  const int n = static_cast<int>(pts.size());
  std::set<int> in_tree{0};
  std::vector<std::pair<int, int>> edges;
  while (static_cast<int>(in_tree.size()) < n) {
    double best = -1;
    std::pair<int, int> edge{-1, -1};
    for (int a : in_tree) {
      for (int b = 0; b < n; ++b) {
        if (in_tree.count(b)) continue;
        const double q = EdgeQuality(pts, a, b);
        if (q > best) {
          best = q;
          edge = {a, b};
        }
      }
    }
    edges.push_back(edge);
    in_tree.insert(edge.second);
  }
  return edges;
}

template <typename Real>
int CyclicPeriods<Real>::CycleIndex(int a, int b, int sheet) const {
  for (size_t k = 0; k < cycles.size(); ++k) {
    if (cycles[k][0] == a && cycles[k][1] == b && cycles[k][2] == sheet) {
      return static_cast<int>(k);
    }
  }
  throw ValidationError("unknown cycle");
}

template <typename Real>
void HolomorphicPeriods(const CyclicPeriods<Real>& data, const IMatrix& basis,
                        CMatrixT<Real>* a_block, CMatrixT<Real>* b_block) {
  const int g = data.genus();
  CMatrixT<Real> bm(basis.rows(), basis.cols());
  for (Eigen::Index r = 0; r < basis.rows(); ++r) {
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      bm(r, c) = ComplexT<Real>(Real(basis(r, c)), Real(0));
    }
  }
  CMatrixT<Real> hol(data.periods.rows(), g);
  for (int k = 0; k < g; ++k) hol.col(k) = data.periods.col(data.holomorphic[k]);
  const CMatrixT<Real> pc = bm * hol;
  *a_block = pc.topRows(g);
  *b_block = pc.bottomRows(g);
}

template <typename Real>
CMatrixT<Real> NormalizedTau(const CMatrixT<Real>& a_block,
                             const CMatrixT<Real>& b_block,
                             double* symmetry_defect) {
  const CMatrixT<Real> tau = b_block * a_block.inverse();
  if (symmetry_defect) *symmetry_defect = SymmetryDefect(MatrixToDouble<Real>(tau));
  return CMatrixT<Real>((tau + tau.transpose()) / Real(2));
}

template <typename Real>
CyclicPeriods<Real> ComputeCyclicPeriods(
    const std::vector<Complex>& points, int m,
    const std::vector<std::pair<int, int>>& holomorphic, double quad_tol,
    int sheet_shift) {
  THETANULL_CHECK(m == 2 || m == 3, "only double and triple covers supported");
  THETANULL_CHECK(std::gcd(static_cast<int>(points.size()), m) == 1,
                  "point count must be coprime to the cover degree");
  THETANULL_CHECK(quad_tol > 0, "quadrature tolerance must be positive");
  CheckPoints(points);
  CyclicPeriods<Real> d;
  d.m = m;
  d.points = points;
  const int n = static_cast<int>(points.size());
  for (int j = 1; j < m; ++j) {
    for (int i = 0; i <= n - 2; ++i) d.forms.push_back({i, j});
  }
  for (const auto& h : holomorphic) {
    auto it = std::find(d.forms.begin(), d.forms.end(), h);
    THETANULL_CHECK(it != d.forms.end(), "unknown holomorphic form");
    d.holomorphic.push_back(static_cast<int>(it - d.forms.begin()));
  }
  d.tree = SpanningTree(points);

  // Edge integrals, one task per (edge, j).
  struct Job {
    int edge, j;
  };
  std::vector<Job> jobs;
  for (int e = 0; e < static_cast<int>(d.tree.size()); ++e) {
    for (int j = 1; j < m; ++j) jobs.push_back({e, j});
  }
  std::vector<QuadratureResult<Real>> results(jobs.size());
  {
    const int workers = std::max(1, std::min<int>(MaxThreads(), jobs.size()));
    std::vector<std::future<void>> futures;
    for (int w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w]() {
        for (size_t k = w; k < jobs.size(); k += workers) {
          const auto [a, b] = d.tree[jobs[k].edge];
          results[k] = EdgeIntegrals<Real>(points, a, b, m, jobs[k].j, quad_tol);
        }
      }));
    }
    for (auto& f : futures) f.get();
  }
  for (const auto& r : results) d.quadrature_error = std::max(d.quadrature_error, r.error);

  const Real pi = Pi<Real>();
  const size_t nf = d.forms.size();
  d.periods.resize(static_cast<Eigen::Index>(d.tree.size() * (m - 1)), nf);
  int row = 0;
  for (int e = 0; e < static_cast<int>(d.tree.size()); ++e) {
    for (int l = 0; l < m - 1; ++l) {
      d.cycles.push_back({d.tree[e].first, d.tree[e].second, l});
      for (size_t f = 0; f < nf; ++f) {
        const auto [i, j] = d.forms[f];
        const auto& res = results[e * (m - 1) + (j - 1)];
        const Real ang = Real(-2) * pi * Real((l + sheet_shift) * j) / Real(m);
        const Real ang1 = Real(-2) * pi * Real(j) / Real(m);
        const ComplexT<Real> zl(cos(ang), sin(ang));
        const ComplexT<Real> z1(cos(ang1), sin(ang1));
        d.periods(row, f) = zl * (ComplexT<Real>(Real(1), Real(0)) - z1) * res.values[i];
      }
      ++row;
    }
  }

  const CMatrixT<Real> cup = CupMatrix<Real>(points, m, d.forms);
  const CMatrixT<Real> pinv = d.periods.inverse();
  const ComplexT<Real> two_pi_i(Real(0), Real(2) * pi);
  const CMatrix mm =
      MatrixToDouble<Real>(CMatrixT<Real>(pinv.transpose() * (two_pi_i * cup) * pinv));
  const Eigen::MatrixXd mr = mm.real().array().round().matrix();
  d.intersection_defect = (mm - mr.cast<Complex>()).cwiseAbs().maxCoeff();
  if (d.intersection_defect > 1e-3) {
    throw NumericalError("intersection matrix is not integral");
  }
  d.intersection = IntegerInverse(RoundToInteger(mr)).transpose();

  for (int sign : {1, -1}) {
    const IMatrix basis = SymplecticReduce(IMatrix(sign * d.intersection));
    CMatrixT<Real> ab, bb;
    HolomorphicPeriods<Real>(d, basis, &ab, &bb);
    const CMatrix tau = MatrixToDouble<Real>(NormalizedTau<Real>(ab, bb));
    if (IsSiegel(tau, 1e-6 * std::max(1.0, tau.cwiseAbs().maxCoeff()))) {
      if (sign == -1) d.intersection = -d.intersection;
      d.basis = basis;
      return d;
    }
  }
  throw NumericalError("no orientation yields a Siegel period matrix");
}

#define THETANULL_INSTANTIATE(Real)                                          \
  template struct CyclicPeriods<Real>;                                       \
  template CyclicPeriods<Real> ComputeCyclicPeriods<Real>(                   \
      const std::vector<Complex>&, int,                                      \
      const std::vector<std::pair<int, int>>&, double, int);                 \
  template void HolomorphicPeriods<Real>(const CyclicPeriods<Real>&,         \
                                         const IMatrix&, CMatrixT<Real>*,    \
                                         CMatrixT<Real>*);                   \
  template CMatrixT<Real> NormalizedTau<Real>(                               \
      const CMatrixT<Real>&, const CMatrixT<Real>&, double*);

THETANULL_INSTANTIATE(double)
THETANULL_INSTANTIATE(Float113)

#undef THETANULL_INSTANTIATE

}  // namespace thetanull
