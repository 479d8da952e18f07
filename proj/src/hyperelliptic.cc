#include "thetanull/hyperelliptic.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "thetanull/cyclic_periods.h"
#include "thetanull/hyperelliptic_t.h"
#include "thetanull/multiprecision.h"
#include "thetanull/symplectic.h"
#include "thetanull/theta_eval.h"
#include "thetanull/theta_eval_t.h"

namespace thetanull {
namespace {

// Edge half-period coordinates (bottom; top) of the branch points relative
// to the calibrated Abel-Jacobi base, mod 2.
template <typename Real>
std::vector<IVector> BranchPointCoordinates(const CyclicPeriods<Real>& d) {
  const int g = d.genus();
  const int n = static_cast<int>(d.points.size());
  const IMatrix binv = IntegerInverse(d.basis);
  std::vector<IVector> rel(n);
  std::vector<bool> known(n, false);
  rel[0] = IVector::Zero(2 * g);
  known[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t e = 0; e < d.tree.size(); ++e) {
      const auto [a, b] = d.tree[e];
      const IVector x = binv.row(d.CycleIndex(a, b, 0)).transpose();
      if (known[a] && !known[b]) {
        rel[b] = ModVector(rel[a] + x, 2);
        known[b] = changed = true;
      } else if (known[b] && !known[a]) {
        rel[a] = ModVector(rel[b] + x, 2);
        known[a] = changed = true;
      }
    }
  }
  IVector root = IVector::Zero(2 * g);
  for (const auto& r : rel) root += r;
  std::vector<IVector> xs;
  for (const auto& r : rel) xs.push_back(ModVector(r + root, 2));
  return xs;
}

IVector EpsTarget(int k, int g) {
  const Characteristic c = EpsMap(k, g);
  IVector v(2 * g);
  for (int i = 0; i < g; ++i) {
    v(i) = c.bottom[i];
    v(g + i) = c.top[i];
  }
  return v;
}

// Symplectic change of basis under which the branch point k is the half
// period eps(k).
template <typename Real>
IMatrix CalibratedBasis(const CyclicPeriods<Real>& d) {
  const int g = d.genus();
  const int n2 = 2 * g;
  const std::vector<IVector> xs = BranchPointCoordinates(d);
  IMatrix x(n2, n2), y(n2, n2);
  for (int k = 0; k < n2; ++k) {
    x.col(k) = xs[k];
    y.col(k) = EpsTarget(k + 1, g);
  }
  const IMatrix l = SolveMapMod2(x, y);
  for (size_t k = 0; k < xs.size(); ++k) {
    if (ModVector(l * xs[k], 2) != ModVector(EpsTarget(static_cast<int>(k) + 1, g), 2)) {
      throw NumericalError("branch points do not match the eps map");
    }
  }
  IMatrix u = IMatrix::Identity(n2, n2);
  for (const IVector& v : DecomposeMod2(l)) u = u * Transvection(v, 1);
  const IMatrix t = SymplecticInverse(u).transpose();
  return t * d.basis;
}

template <typename Real>
struct PeriodDataT {
  CMatrixT<Real> a_block;  // cycles x forms
  CMatrixT<Real> b_block;
  CMatrixT<Real> tau;
  double quadrature_error = 0;
  double symmetry_defect = 0;
  double intersection_defect = 0;
};

template <typename Real>
PeriodDataT<Real> PeriodMatrixT(const HyperellipticCurve& curve,
                                double quad_tol) {
  curve.Validate();
  const int g = curve.genus;
  std::vector<std::pair<int, int>> holo;
  for (int i = 0; i < g; ++i) holo.push_back({i, 1});
  const CyclicPeriods<Real> d =
      ComputeCyclicPeriods<Real>(curve.branch_points, 2, holo, quad_tol);
  PeriodDataT<Real> out;
  HolomorphicPeriods<Real>(d, CalibratedBasis(d), &out.a_block, &out.b_block);
  out.tau = NormalizedTau<Real>(out.a_block, out.b_block, &out.symmetry_defect);
  out.quadrature_error = d.quadrature_error;
  out.intersection_defect = d.intersection_defect;
  return out;
}

std::vector<long long> Numerators(const std::vector<int>& v) {
  return std::vector<long long>(v.begin(), v.end());
}

}  // namespace

std::string OrderingName(BranchOrdering ordering) {
  switch (ordering) {
    case BranchOrdering::kGenus1:
      return "genus1";
    case BranchOrdering::kRosenhainGenus2:
      return "rosenhain-g2";
    case BranchOrdering::kRosenhainGenus3:
      return "rosenhain-g3";
  }
  return "unknown";
}

BranchOrdering ParseOrdering(const std::string& name) {
  if (name == "genus1") return BranchOrdering::kGenus1;
  if (name == "rosenhain-g2") return BranchOrdering::kRosenhainGenus2;
  if (name == "rosenhain-g3") return BranchOrdering::kRosenhainGenus3;
  throw ValidationError("unknown ordering: " + name);
}

HyperellipticCurve HyperellipticCurve::Genus2(Complex lambda, Complex mu,
                                              Complex nu) {
  HyperellipticCurve c;
  c.genus = 2;
  c.branch_points = {nu, mu, lambda, 1.0, 0.0};
  c.ordering = BranchOrdering::kRosenhainGenus2;
  c.Validate();
  return c;
}

HyperellipticCurve HyperellipticCurve::Genus3(const std::array<Complex, 5>& a) {
  HyperellipticCurve c;
  c.genus = 3;
  c.branch_points = {a[0], a[1], a[2], a[3], a[4], 1.0, 0.0};
  c.ordering = BranchOrdering::kRosenhainGenus3;
  c.Validate();
  return c;
}

HyperellipticCurve HyperellipticCurve::Genus1(Complex e1, Complex e2,
                                              Complex e3) {
  HyperellipticCurve c;
  c.genus = 1;
  c.branch_points = {e1, e2, e3};
  c.ordering = BranchOrdering::kGenus1;
  c.Validate();
  return c;
}

void HyperellipticCurve::Validate() const {
  THETANULL_CHECK(genus >= 1 && genus <= 3, "genus must be 1, 2 or 3");
  THETANULL_CHECK(static_cast<int>(branch_points.size()) == 2 * genus + 1,
                  "expected 2g+1 finite branch points");
  double scale = 1.0;
  for (const Complex& p : branch_points) {
    THETANULL_CHECK(std::isfinite(p.real()) && std::isfinite(p.imag()),
                    "branch points must be finite");
    scale = std::max(scale, std::abs(p));
  }
  for (size_t i = 0; i < branch_points.size(); ++i) {
    for (size_t j = i + 1; j < branch_points.size(); ++j) {
      THETANULL_CHECK(std::abs(branch_points[i] - branch_points[j]) >= 1e-10 * scale,
                      "branch points must be distinct");
    }
  }
}

Characteristic EpsMap(int k, int g) {
  THETANULL_CHECK(g >= 1, "genus must be positive");
  THETANULL_CHECK(k >= 0 && k <= 2 * g + 1, "eps index out of range");
  std::vector<int> top(g, 0), bottom(g, 0);
  if (k == 0) return Characteristic(2, top, bottom);
  const int i = (k + 1) / 2;
  if (i <= g) top[i - 1] = 1;
  for (int c = 0; c < i - 1; ++c) bottom[c] = 1;
  if (k % 2 == 0 && i <= g) bottom[i - 1] = 1;
  return Characteristic(2, top, bottom);
}

Characteristic CharOfSubset(const std::vector<int>& subset, int g) {
  Characteristic acc = Characteristic::Zero(g);
  std::set<int> seen;
  for (int k : subset) {
    THETANULL_CHECK(seen.insert(k).second, "subset has repeated indices");
    acc = Compose(acc, EpsMap(k, g));
  }
  return acc;
}

std::vector<int> OddIndexSet(int g) {
  std::vector<int> u;
  for (int k = 1; k <= 2 * g + 1; k += 2) u.push_back(k);
  return u;
}

std::vector<Characteristic> VanishingPattern(int g) {
  THETANULL_CHECK(g >= 1 && g <= 3, "genus must be 1, 2 or 3");
  const int n = 2 * g + 1;
  const std::vector<int> u = OddIndexSet(g);
  std::set<std::uint32_t> masks;
  std::vector<Characteristic> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<int> t;
    for (int k = 0; k < n; ++k) {
      if (s >> k & 1) t.push_back(k + 1);
    }
    if (t.size() % 2) continue;
    int sym = 0;
    for (int k = 1; k <= n; ++k) {
      const bool in_t = std::find(t.begin(), t.end(), k) != t.end();
      const bool in_u = std::find(u.begin(), u.end(), k) != u.end();
      sym += in_t != in_u;
    }
    if (sym == g + 1) continue;
    const Characteristic c = CharOfSubset(t, g);
    if (IsEven(c) && masks.insert(c.Mask()).second) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Characteristic& a, const Characteristic& b) {
    return a.Mask() < b.Mask();
  });
  return out;
}

Characteristic PartitionCharacteristic(const std::vector<int>& part, int g) {
  THETANULL_CHECK(static_cast<int>(part.size()) == g + 1,
                  "partition part must have g+1 elements");
  std::set<int> p;
  for (int k : part) {
    THETANULL_CHECK(k >= 1 && k <= 2 * g + 2, "partition index out of range");
    THETANULL_CHECK(p.insert(k).second, "partition has repeated indices");
  }
  std::vector<int> t;
  const std::vector<int> u = OddIndexSet(g);
  for (int k = 1; k <= 2 * g + 1; ++k) {
    const bool in_u = std::find(u.begin(), u.end(), k) != u.end();
    if (p.count(k) != static_cast<size_t>(in_u)) t.push_back(k);
  }
  return CharOfSubset(t, g);
}

PeriodData PeriodMatrix(const HyperellipticCurve& curve, double quad_tol) {
  PeriodData out;
  auto fill = [&](const auto& t) {
    using Real = typename std::decay_t<decltype(t.tau)>::Scalar::value_type;
    const CMatrix ah = MatrixToDouble<Real>(t.a_block);
    const CMatrix bh = MatrixToDouble<Real>(t.b_block);
    out.a_periods = ah.transpose();
    out.b_periods = bh.transpose();
    out.tau = MatrixToDouble<Real>(t.tau);
    out.quadrature_error = t.quadrature_error;
    out.symmetry_defect = t.symmetry_defect;
    out.intersection_defect = t.intersection_defect;
    const CMatrixT<Real> bil =
        t.a_block.transpose() * t.b_block - t.b_block.transpose() * t.a_block;
    const double den = ah.norm() * bh.norm();
    out.bilinear_residual = MatrixToDouble<Real>(bil).norm() / den;
  };
  if (GetPrecision() == Precision::kExtended) {
    fill(PeriodMatrixT<Float113>(curve, quad_tol));
  } else {
    fill(PeriodMatrixT<double>(curve, quad_tol));
  }
  if (!IsSiegel(out.tau, 1e-6)) {
    throw NumericalError("computed period matrix is not in the Siegel space");
  }
  return out;
}

template <typename Real>
std::vector<ComplexT<Real>> CurveThetanullsT(
    const HyperellipticCurve& curve, const std::vector<Characteristic>& chars,
    double quad_tol, double theta_tol) {
  const auto t = PeriodMatrixT<Real>(curve, quad_tol);
  return ThetanullsT<Real>(chars, t.tau, theta_tol);
}

template std::vector<ComplexT<double>> CurveThetanullsT<double>(
    const HyperellipticCurve&, const std::vector<Characteristic>&, double,
    double);
template std::vector<ComplexT<Float113>> CurveThetanullsT<Float113>(
    const HyperellipticCurve&, const std::vector<Characteristic>&, double,
    double);

std::vector<Complex> CurveThetanulls(const HyperellipticCurve& curve,
                                     const std::vector<Characteristic>& chars,
                                     double quad_tol, double theta_tol) {
  if (GetPrecision() == Precision::kExtended) {
    std::vector<Complex> out;
    for (const auto& v :
         CurveThetanullsT<Float113>(curve, chars, quad_tol, theta_tol)) {
      out.push_back(ToDouble<Float113>(v));
    }
    return out;
  }
  return CurveThetanullsT<double>(curve, chars, quad_tol, theta_tol);
}

double FrobeniusResidual(const HyperellipticCurve& curve, const CMatrix& tau,
                         const std::array<Characteristic, 4>& b,
                         const std::array<CVector, 4>& z, double tol) {
  curve.Validate();
  const int g = curve.genus;
  THETANULL_CHECK(tau.rows() == g && tau.cols() == g, "tau has wrong size");
  Characteristic sum = Characteristic::Zero(g);
  CVector zsum = CVector::Zero(g);
  for (int i = 0; i < 4; ++i) {
    THETANULL_CHECK(b[i].genus == g && b[i].IsHalf(),
                    "characteristics must be half characteristics of genus g");
    THETANULL_CHECK(z[i].size() == g, "argument has wrong size");
    sum = Compose(sum, b[i]);
    zsum += z[i];
  }
  THETANULL_CHECK(sum.Mask() == 0, "characteristics must sum to zero");
  double zscale = 1.0;
  for (const auto& zi : z) zscale = std::max(zscale, zi.cwiseAbs().maxCoeff());
  THETANULL_CHECK(zsum.cwiseAbs().maxCoeff() <= 1e-12 * zscale,
                  "arguments must sum to zero");

  // The fourth numerator is taken as minus the sum of the first three so that
  // the numerators sum to zero exactly, not merely mod 2.
  std::array<std::vector<long long>, 4> top, bottom;
  for (int i = 0; i < 3; ++i) {
    top[i] = Numerators(b[i].top);
    bottom[i] = Numerators(b[i].bottom);
  }
  top[3].assign(g, 0);
  bottom[3].assign(g, 0);
  for (int i = 0; i < 3; ++i) {
    for (int c = 0; c < g; ++c) {
      top[3][c] -= top[i][c];
      bottom[3][c] -= bottom[i][c];
    }
  }
  CVector z4 = -(z[0] + z[1] + z[2]);

  const std::vector<int> u = OddIndexSet(g);
  Complex total = 0;
  double largest = 0;
  for (int j = 0; j <= 2 * g + 1; ++j) {
    const Characteristic e = EpsMap(j, g);
    const bool in_u = std::find(u.begin(), u.end(), j) != u.end();
    Complex term = in_u ? 1.0 : -1.0;
    for (int i = 0; i < 4; ++i) {
      std::vector<long long> t = top[i], bt = bottom[i];
      for (int c = 0; c < g; ++c) {
        t[c] += e.top[c];
        bt[c] += e.bottom[c];
      }
      term *= ThetaRational(t, bt, 2, i == 3 ? z4 : z[i], tau, tol);
    }
    total += term;
    largest = std::max(largest, std::abs(term));
  }
  THETANULL_CHECK(largest > 0, "all Frobenius terms vanish");
  return std::abs(total) / largest;
}

Complex ThomaeProduct(const HyperellipticCurve& curve,
                      const std::vector<int>& part) {
  const int g = curve.genus;
  const int n = 2 * g + 2;
  std::vector<bool> in(n + 1, false);
  for (int k : part) {
    THETANULL_CHECK(k >= 1 && k <= n, "partition index out of range");
    in[k] = true;
  }
  Complex prod = 1.0;
  for (int i = 1; i <= 2 * g + 1; ++i) {
    for (int j = i + 1; j <= 2 * g + 1; ++j) {
      if (in[i] == in[j]) {
        prod *= curve.branch_points[i - 1] - curve.branch_points[j - 1];
      }
    }
  }
  return prod;
}

double ThomaeRatioCheck(const HyperellipticCurve& curve, const CMatrix& tau,
                        const std::vector<int>& part1,
                        const std::vector<int>& part2, double tol) {
  curve.Validate();
  const int g = curve.genus;
  const Characteristic e1 = PartitionCharacteristic(part1, g);
  const Characteristic e2 = PartitionCharacteristic(part2, g);
  const Complex t1 = Thetanull(e1, tau, tol);
  const Complex t2 = Thetanull(e2, tau, tol);
  if (std::abs(t2) < 1e-12) {
    throw NumericalError("denominator thetanull vanishes");
  }
  const Complex lhs = std::pow(t1 / t2, 8);
  const Complex p1 = ThomaeProduct(curve, part1);
  const Complex p2 = ThomaeProduct(curve, part2);
  const Complex rhs = (p1 / p2) * (p1 / p2);
  return std::abs(lhs - rhs) / std::abs(rhs);
}

}  // namespace thetanull
