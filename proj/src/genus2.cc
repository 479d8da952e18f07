#include "thetanull/genus2.h"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>

#include "thetanull/hyperelliptic_t.h"
#include "thetanull/multiprecision.h"
#include "thetanull/theta_eval.h"

namespace thetanull {
namespace {

// Monomial sign * prod theta_i^{2 e_i}, with squares as the variables.
struct ThetaTerm {
  int sign;
  std::vector<std::pair<int, int>> squares;  // (index, exponent of theta^2)
};
using ThetaPoly = std::vector<ThetaTerm>;

std::pair<Complex, double> Evaluate(const ThetaPoly& poly, const Genus2Thetas& t) {
  Complex sum = 0;
  double largest = 0;
  for (const ThetaTerm& term : poly) {
    Complex v = static_cast<double>(term.sign);
    for (const auto& [i, e] : term.squares) v *= std::pow(t(i) * t(i), e);
    sum += v;
    largest = std::max(largest, std::abs(v));
  }
  return {sum, largest};
}

double Normalized(const std::pair<Complex, double>& v) {
  return v.second > 0 ? std::abs(v.first) / v.second : 0.0;
}

// Theta expressions of the cross-ratio factors, written in theta_i^2.
const std::array<ThetaPoly, 15>& Table1Polys() {
  static const std::array<ThetaPoly, 15> kRows = {
      ThetaPoly{{-1, {{1, 1}, {3, 1}, {8, 1}, {2, 1}}},
                {-1, {{1, 1}, {2, 1}, {4, 1}, {10, 1}}},
                {1, {{1, 2}, {3, 1}, {10, 1}}},
                {1, {{3, 1}, {2, 2}, {10, 1}}}},
      ThetaPoly{{1, {{3, 1}, {8, 1}, {2, 1}, {4, 1}}},
                {-1, {{2, 1}, {4, 2}, {10, 1}}},
                {1, {{1, 1}, {3, 1}, {4, 1}, {10, 1}}},
                {-1, {{3, 2}, {2, 1}, {10, 1}}}},
      ThetaPoly{{-1, {{8, 2}, {3, 1}, {2, 1}}},
                {1, {{8, 1}, {2, 1}, {10, 1}, {4, 1}}},
                {1, {{1, 1}, {3, 1}, {8, 1}, {10, 1}}},
                {-1, {{3, 1}, {2, 1}, {10, 2}}}},
      ThetaPoly{{-1, {{1, 1}, {8, 2}, {4, 1}}},
                {-1, {{1, 1}, {10, 2}, {4, 1}}},
                {1, {{8, 1}, {2, 1}, {10, 1}, {4, 1}}},
                {1, {{1, 1}, {3, 1}, {8, 1}, {10, 1}}}},
      ThetaPoly{{-1, {{1, 1}, {8, 1}, {3, 1}, {4, 1}}},
                {1, {{1, 1}, {10, 1}, {4, 2}}},
                {1, {{1, 1}, {3, 2}, {10, 1}}},
                {-1, {{3, 1}, {2, 1}, {10, 1}, {4, 1}}}},
      ThetaPoly{{-1, {{1, 1}, {8, 1}, {2, 1}, {4, 1}}},
                {1, {{1, 2}, {10, 1}, {4, 1}}},
                {-1, {{1, 1}, {3, 1}, {2, 1}, {10, 1}}},
                {1, {{2, 2}, {4, 1}, {10, 1}}}},
      ThetaPoly{{-1, {{8, 2}, {2, 1}, {4, 1}}},
                {1, {{1, 1}, {8, 1}, {10, 1}, {4, 1}}},
                {-1, {{2, 1}, {10, 2}, {4, 1}}},
                {1, {{3, 1}, {8, 1}, {2, 1}, {10, 1}}}},
      // The image of a3 a1 - a1 - a3 a2 + a3 under the Picard substitution.
      ThetaPoly{{-1, {{2, 1}, {4, 2}, {8, 1}}},
                {1, {{1, 1}, {3, 1}, {4, 1}, {8, 1}}},
                {-1, {{2, 1}, {3, 2}, {8, 1}}},
                {1, {{2, 1}, {3, 1}, {4, 1}, {10, 1}}}},
      ThetaPoly{{1, {{1, 2}, {8, 1}, {4, 1}}},
                {-1, {{1, 1}, {2, 1}, {4, 1}, {10, 1}}},
                {-1, {{1, 1}, {3, 1}, {8, 1}, {2, 1}}},
                {1, {{8, 1}, {2, 2}, {4, 1}}}},
      ThetaPoly{{1, {{1, 2}, {3, 1}, {8, 1}}},
                {-1, {{1, 1}, {8, 1}, {2, 1}, {4, 1}}},
                {-1, {{1, 1}, {3, 1}, {2, 1}, {10, 1}}},
                {1, {{3, 1}, {8, 1}, {2, 2}}}},
      ThetaPoly{{1, {{1, 1}, {8, 2}, {3, 1}}},
                {-1, {{1, 1}, {8, 1}, {10, 1}, {4, 1}}},
                {1, {{1, 1}, {3, 1}, {10, 2}}},
                {-1, {{3, 1}, {8, 1}, {2, 1}, {10, 1}}}},
      ThetaPoly{{1, {{1, 1}, {8, 1}, {4, 2}}},
                {-1, {{1, 1}, {3, 1}, {4, 1}, {10, 1}}},
                {1, {{1, 1}, {3, 2}, {8, 1}}},
                {-1, {{3, 1}, {8, 1}, {2, 1}, {4, 1}}}},
      ThetaPoly{{1, {{8, 2}}}, {-1, {{10, 2}}}},
      ThetaPoly{{1, {{3, 2}}}, {-1, {{4, 2}}}},
      ThetaPoly{{1, {{1, 2}}}, {-1, {{2, 2}}}}};
  return kRows;
}

Characteristic Half(std::vector<int> top, std::vector<int> bottom) {
  return Characteristic(2, std::move(top), std::move(bottom));
}

template <typename T>
T Pow(const T& x, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Pairwise weighted-projective equality of (J2, J4, J6, J10).
template <typename F, typename Eq>
bool SameWeightedPoint(const IgusaInvariantsT<F>& a, const IgusaInvariantsT<F>& b,
                       Eq eq) {
  const std::array<F, 4> x = {a.j2, a.j4, a.j6, a.j10};
  const std::array<F, 4> y = {b.j2, b.j4, b.j6, b.j10};
  const std::array<int, 4> w = {1, 2, 3, 5};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      if (!eq(Pow(x[i], w[k]) * Pow(y[k], w[i]), Pow(y[i], w[k]) * Pow(x[k], w[i]))) {
        return false;
      }
    }
  }
  return true;
}

struct SpecialCurve {
  const char* name;
  std::vector<long long> coeffs;
};

const std::vector<SpecialCurve>& SpecialCurves() {
  static const std::vector<SpecialCurve> kCurves = {
      {"y^2=x^6-x", {1, 0, 0, 0, 0, -1, 0}},
      {"y^2=x^6-1", {1, 0, 0, 0, 0, 0, -1}},
      {"y^2=x^5-x", {0, 1, 0, 0, 0, -1, 0}}};
  return kCurves;
}

}  // namespace

const std::vector<Characteristic>& Genus2CharTable() {
  static const std::vector<Characteristic> kTable = {
      Half({0, 0}, {0, 0}), Half({0, 0}, {1, 1}), Half({0, 0}, {1, 0}),
      Half({0, 0}, {0, 1}), Half({1, 0}, {0, 0}), Half({1, 0}, {0, 1}),
      Half({0, 1}, {0, 0}), Half({1, 1}, {0, 0}), Half({0, 1}, {1, 0}),
      Half({1, 1}, {1, 1}),
      Half({0, 1}, {0, 1}), Half({0, 1}, {1, 1}), Half({1, 0}, {1, 0}),
      Half({1, 1}, {1, 0}), Half({1, 0}, {1, 1}), Half({1, 1}, {0, 1})};
  return kTable;
}

Genus2Thetas Genus2Thetas::FromTau(const CMatrix& tau, double tol) {
  THETANULL_CHECK(tau.rows() == 2 && tau.cols() == 2, "tau must be 2x2");
  const auto& table = Genus2CharTable();
  const std::vector<Characteristic> even(table.begin(), table.begin() + 10);
  const std::vector<Complex> v = Thetanulls(even, tau, tol);
  Genus2Thetas t;
  std::copy(v.begin(), v.end(), t.values.begin());
  return t;
}

Genus2Thetas Genus2Thetas::Normalized() const {
  double m = 0;
  for (const Complex& v : values) m = std::max(m, std::abs(v));
  THETANULL_CHECK(m > 0, "all thetanulls vanish");
  Genus2Thetas t = *this;
  for (Complex& v : t.values) v /= m;
  return t;
}

std::array<double, 6> FundamentalIdentityResiduals(const Genus2Thetas& t) {
  auto p2 = [&](int i) { return t(i) * t(i); };
  auto p4 = [&](int i) { return p2(i) * p2(i); };
  auto rel = [](std::initializer_list<Complex> terms) {
    Complex sum = 0;
    double largest = 0;
    for (const Complex& x : terms) {
      sum += x;
      largest = std::max(largest, std::abs(x));
    }
    return largest > 0 ? std::abs(sum) / largest : 0.0;
  };
  return {rel({p2(5) * p2(6), -p2(1) * p2(4), p2(2) * p2(3)}),
          rel({p4(5), p4(6), -p4(1), p4(2), p4(3), -p4(4)}),
          rel({p2(7) * p2(9), -p2(1) * p2(3), p2(2) * p2(4)}),
          rel({p4(7), p4(9), -p4(1), p4(2), -p4(3), p4(4)}),
          rel({p2(8) * p2(10), -p2(1) * p2(2), p2(3) * p2(4)}),
          rel({p4(8), p4(10), -p4(1), -p4(2), p4(3), p4(4)})};
}

std::array<Complex, 3> PicardBranchPoints(const Genus2Thetas& t) {
  auto p2 = [&](int i) { return t(i) * t(i); };
  const double scale = std::max({std::abs(t(1)), std::abs(t(3)), std::abs(t(8))});
  for (int i : {2, 4, 10}) {
    if (std::abs(t(i)) <= 1e-12 * std::max(scale, 1e-300)) {
      throw NumericalError("vanishing denominator thetanull");
    }
  }
  return {p2(1) * p2(3) / (p2(2) * p2(4)), p2(3) * p2(8) / (p2(4) * p2(10)),
          p2(1) * p2(8) / (p2(2) * p2(10))};
}

namespace {

// Coefficient and roots at precision Real, rounded to double on output.
template <typename Real>
AlphaQuadratic SolveAlphaQuadraticT(const ComplexT<Real>& t1,
                                    const ComplexT<Real>& t2,
                                    const ComplexT<Real>& t3,
                                    const ComplexT<Real>& t4) {
  using C = ComplexT<Real>;
  const C s1 = t1 * t1, s2 = t2 * t2, s3 = t3 * t3, s4 = t4 * t4;
  const C den = s1 * s2 - s3 * s4;
  const double a = static_cast<double>(abs(s1 * s2));
  const double b = static_cast<double>(abs(s3 * s4));
  if (static_cast<double>(abs(den)) <= 1e-14 * std::max(a, b)) {
    throw NumericalError("alpha quadratic has a vanishing denominator");
  }
  const C c = (s1 * s1 + s2 * s2 - s3 * s3 - s4 * s4) / den;
  const C disc = sqrt(c * c - C(4));
  // Larger root first; the other is its reciprocal.
  C r1 = (c + disc) / C(2);
  const C r2 = (c - disc) / C(2);
  if (abs(r2) > abs(r1)) r1 = r2;
  AlphaQuadratic q;
  q.coefficient = ToDouble<Real>(c);
  q.roots = {ToDouble<Real>(r1), ToDouble<Real>(C(1) / r1)};
  return q;
}

}  // namespace

AlphaQuadratic SolveAlphaQuadratic(const Complex& t1, const Complex& t2,
                                   const Complex& t3, const Complex& t4) {
  return SolveAlphaQuadraticT<double>(t1, t2, t3, t4);
}

AlphaQuadratic CurveAlphaQuadratic(const HyperellipticCurve& curve,
                                   double quad_tol) {
  THETANULL_CHECK(curve.genus == 2, "alpha quadratic needs a genus-2 curve");
  const auto& table = Genus2CharTable();
  const std::vector<Characteristic> chars(table.begin(), table.begin() + 4);
  if (GetPrecision() == Precision::kExtended) {
    const auto v = CurveThetanullsT<Float113>(curve, chars, quad_tol, 1e-30);
    return SolveAlphaQuadraticT<Float113>(v[0], v[1], v[2], v[3]);
  }
  const auto v = CurveThetanullsT<double>(curve, chars, quad_tol, 1e-14);
  return SolveAlphaQuadraticT<double>(v[0], v[1], v[2], v[3]);
}

namespace {

double AlphaResidual(const Genus2Thetas& t, double sign) {
  const AlphaQuadratic q = SolveAlphaQuadratic(t(1), t(2), t(3), t(4));
  const Complex alpha = t(8) * t(8) / (t(10) * t(10));
  const Complex a2 = alpha * alpha, ca = q.coefficient * alpha;
  const double scale = std::max({std::abs(a2), std::abs(ca), 1.0});
  return std::abs(a2 + sign * ca + 1.0) / scale;
}

}  // namespace

double AlphaQuadraticResidual(const Genus2Thetas& t) { return AlphaResidual(t, -1.0); }

double AlphaQuadraticPlusSignResidual(const Genus2Thetas& t) {
  return AlphaResidual(t, 1.0);
}

std::array<Table1Row, 15> Table1Rows(const Complex& a1, const Complex& a2,
                                     const Complex& a3, const Genus2Thetas& t) {
  const std::array<Complex, 15> f = CrossRatioFactors<Complex>(a1, a2, a3);
  std::array<Table1Row, 15> rows;
  const double m1 = std::abs(a1), m2 = std::abs(a2), m3 = std::abs(a3);
  const double fscale = std::max({m1 * m2, m1 * m3, m2 * m3, m1, m2, m3});
  for (int k = 0; k < 15; ++k) {
    const auto v = Evaluate(Table1Polys()[k], t);
    rows[k].factor = f[k];
    rows[k].theta_value = v.first;
    rows[k].factor_normalized = std::abs(f[k]) / fscale;
    rows[k].theta_normalized = Normalized(v);
  }
  return rows;
}

double V4ThetaProduct(const Genus2Thetas& t) {
  double prod = 1;
  for (const ThetaPoly& p : Table1Polys()) prod *= Normalized(Evaluate(p, t));
  return prod;
}

bool V4ThetaTest(const Genus2Thetas& t, double tol) { return V4ThetaProduct(t) < tol; }

double V4FundamentalProduct(const Complex& t1, const Complex& t2,
                            const Complex& t3, const Complex& t4) {
  const Complex a = t1 * t1, b = t2 * t2, c = t3 * t3, d = t4 * t4;
  const Complex p = a * b * c * d;
  auto rel = [](std::initializer_list<Complex> terms) {
    Complex sum = 0;
    double largest = 0;
    for (const Complex& x : terms) {
      sum += x;
      largest = std::max(largest, std::abs(x));
    }
    return largest > 0 ? std::abs(sum) / largest : 0.0;
  };
  const double factors[] = {
      rel({c * c, -d * d}),          rel({a * a, -c * c}),
      rel({b * b, -d * d}),          rel({a * a, -d * d}),
      rel({c * c, -b * b}),          rel({a * a, -b * b}),
      rel({-d, c, a, -b}),           rel({d, -c, a, -b}),
      rel({-d, -c, b, a}),           rel({d, c, b, a}),
      rel({a * a * b * b, c * c * b * b, a * a * c * c, -2.0 * p}),
      rel({-c * c * b * b, -b * b * d * d, -c * c * d * d, 2.0 * p}),
      rel({b * b * d * d, a * a * b * b, a * a * d * d, -2.0 * p}),
      rel({a * a * d * d, c * c * d * d, a * a * c * c, -2.0 * p})};
  double prod = 1;
  for (double f : factors) prod *= f;
  return prod;
}

bool V4FundamentalTest(const Complex& t1, const Complex& t2, const Complex& t3,
                       const Complex& t4, double tol) {
  return V4FundamentalProduct(t1, t2, t3, t4) < tol;
}

LocusResiduals LocusTests(const IgusaInvariantsC& j) {
  if (std::abs(j.j10) == 0) throw ValidationError("J10 vanishes");
  LocusResiduals r;
  r.l2 = NormalizedLocusResidual(L2Locus(), j);
  r.d8 = NormalizedLocusResidual(D8Locus(), j);
  r.d12 = {NormalizedLocusResidual(D12LocusFirst(), j),
           NormalizedLocusResidual(D12LocusSecond(), j)};
  return r;
}

ExactLocus LocusTestsExact(const IgusaInvariants& j) {
  if (j.j10 == 0) throw ValidationError("J10 vanishes");
  ExactLocus r;
  r.l2 = EvaluateLocus(L2Locus(), j) == 0;
  r.d8 = EvaluateLocus(D8Locus(), j) == 0;
  r.d12 = EvaluateLocus(D12LocusFirst(), j) == 0 &&
          EvaluateLocus(D12LocusSecond(), j) == 0;
  return r;
}

std::string AutLabelName(AutLabel label) {
  switch (label) {
    case AutLabel::kZ2:
      return "Z2";
    case AutLabel::kV4:
      return "V4";
    case AutLabel::kD8:
      return "D8";
    case AutLabel::kD12:
      return "D12";
    case AutLabel::kSpecialPoint:
      return "SPECIAL_POINT";
  }
  return "unknown";
}

namespace {

Classification Decide(bool l2, bool d8, bool d12) {
  Classification c;
  if (!l2) {
    c.label = AutLabel::kZ2;
  } else if (d8 && d12) {
    c.label = AutLabel::kSpecialPoint;
  } else if (d8) {
    c.label = AutLabel::kD8;
  } else if (d12) {
    c.label = AutLabel::kD12;
  } else {
    c.label = AutLabel::kV4;
  }
  return c;
}

}  // namespace

Classification ClassifyAut(const std::vector<Rational>& sextic) {
  const IgusaInvariants j = IgusaFromSextic(sextic);
  if (j.j10 == 0) throw ValidationError("singular curve: J10 vanishes");
  for (const auto& special : SpecialCurves()) {
    std::vector<Rational> coeffs(special.coeffs.begin(), special.coeffs.end());
    const IgusaInvariants js = IgusaFromSextic(coeffs);
    if (SameWeightedPoint(j, js, [](const Rational& x, const Rational& y) { return x == y; })) {
      Classification c{AutLabel::kSpecialPoint, special.name, true};
      return c;
    }
  }
  const ExactLocus r = LocusTestsExact(j);
  Classification c = Decide(r.l2, r.d8, r.d12);
  c.exact = true;
  return c;
}

Classification ClassifyAut(const std::vector<Complex>& sextic, double on_tol,
                           double off_tol) {
  const IgusaInvariantsC j = IgusaFromSextic(sextic);
  const std::array<Complex, 4> jv = {j.j2, j.j4, j.j6, j.j10};
  double scale = 0;
  const std::array<int, 4> w = {2, 4, 6, 10};
  for (int i = 0; i < 4; ++i) scale = std::max(scale, std::pow(std::abs(jv[i]), 1.0 / w[i]));
  if (std::abs(j.j10) <= 1e-12 * std::pow(scale, 10)) {
    throw ValidationError("singular curve: J10 vanishes");
  }
  auto decide = [&](double r) {
    if (r < on_tol) return true;
    if (r > off_tol) return false;
    throw NumericalError("locus membership indeterminate at this precision");
  };
  for (const auto& special : SpecialCurves()) {
    std::vector<Complex> coeffs(special.coeffs.begin(), special.coeffs.end());
    const IgusaInvariantsC js = IgusaFromSextic(coeffs);
    const bool same = SameWeightedPoint(j, js, [&](const Complex& x, const Complex& y) {
      const double m = std::max(std::abs(x), std::abs(y));
      return m == 0 || std::abs(x - y) < on_tol * m;
    });
    if (same) return Classification{AutLabel::kSpecialPoint, special.name, false};
  }
  const LocusResiduals r = LocusTests(j);
  const bool l2 = decide(r.l2);
  const bool d8 = l2 && decide(r.d8);
  const bool d12 = l2 && decide(r.d12[0]) && decide(r.d12[1]);
  return Decide(l2, d8, d12);
}

Classification ClassifyRosenhain(const Rational& a1, const Rational& a2,
                                 const Rational& a3) {
  return ClassifyAut(RosenhainSextic<Rational>(a1, a2, a3));
}

std::array<Complex, 2> J10FromThetas(const Genus2Thetas& t) {
  auto p = [&](int i, int e) { return std::pow(t(i), e); };
  const Complex s1 = p(1, 2), s2 = p(2, 2), s3 = p(3, 2), s4 = p(4, 2);
  const Complex first = p(1, 12) * p(3, 12) / (p(2, 28) * p(4, 28) * p(10, 40)) *
                        std::pow(s1 * s2 - s3 * s4, 12) *
                        std::pow(s1 * s4 - s2 * s3, 12) *
                        std::pow(s1 * s3 - s2 * s4, 12);
  const Complex second = std::pow(t(1) * t(3), 12) /
                         (std::pow(t(2) * t(4), 28) * p(10, 16)) *
                         std::pow(t(5) * t(6) * t(7) * t(8) * t(9), 24);
  return {first, second};
}

J10Check J10ThetaChecks(const Genus2Thetas& t, const IgusaInvariantsC& j) {
  J10Check c;
  c.j10_branch = j.j10;
  c.j10_theta = J10FromThetas(t);
  for (int k = 0; k < 2; ++k) c.ratio[k] = c.j10_branch / c.j10_theta[k];
  c.formula_agreement = std::abs(c.j10_theta[0] - c.j10_theta[1]) /
                        std::max(std::abs(c.j10_theta[0]), std::abs(c.j10_theta[1]));
  c.min_nonzero_theta = INFINITY;
  for (int i : {1, 3, 5, 6, 7, 8, 9}) {
    c.min_nonzero_theta = std::min(c.min_nonzero_theta, std::abs(t(i)));
  }
  return c;
}

std::array<Complex, 10> Genus2ThomaeProducts(const Complex& lambda,
                                             const Complex& mu,
                                             const Complex& nu) {
  const Complex l = lambda, m = mu, n = nu;
  return {n * l * (m - 1.0) * (n - l),
          m * (m - 1.0) * (n - l),
          m * l * (m - l) * (n - 1.0),
          n * (n - 1.0) * (m - l),
          l * (m - 1.0) * (n - 1.0) * (n - m),
          (n - m) * (n - l) * (m - l),
          m * (n - 1.0) * (l - 1.0) * (n - l),
          m * n * (n - m) * (l - 1.0),
          n * (m - 1.0) * (l - 1.0) * (m - l),
          l * (l - 1.0) * (n - m)};
}

std::array<Complex, 10> Genus2ThomaeProductsAsPrinted(const Complex& lambda,
                                                      const Complex& mu,
                                                      const Complex& nu) {
  std::array<Complex, 10> p = Genus2ThomaeProducts(lambda, mu, nu);
  const Complex l = lambda, m = mu, n = nu;
  p[2] = m * l * (m - l) * (n - l);
  p[3] = n * (n - l) * (m - l);
  p[4] = l * m * (n - 1.0) * (n - m);
  return p;
}

std::array<double, 10> Genus2ThomaeRatioResiduals(const Complex& lambda,
                                                  const Complex& mu,
                                                  const Complex& nu,
                                                  const Genus2Thetas& t) {
  const std::array<Complex, 10> p = Genus2ThomaeProducts(lambda, mu, nu);
  THETANULL_CHECK(std::abs(p[0]) > 0 && std::abs(t(1)) > 0,
                  "reference Thomae product vanishes");
  std::array<double, 10> out;
  for (int i = 0; i < 10; ++i) {
    const Complex expected = std::pow(p[i] / p[0], 2);
    const Complex actual = std::pow(t(i + 1) / t(1), 8);
    out[i] = std::abs(actual - expected) / std::abs(expected);
  }
  return out;
}

}  // namespace thetanull
