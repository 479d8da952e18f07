#include "acceptance_suite.h"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <exception>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "thetanull/characteristics.h"
#include "thetanull/cyclic3.h"
#include "thetanull/genus2.h"
#include "thetanull/genus3_hyper.h"
#include "thetanull/hyperelliptic.h"
#include "thetanull/igusa.h"
#include "thetanull/numerics.h"
#include "thetanull/theta_eval.h"

namespace thetanull {
namespace acceptance {
namespace {

constexpr double kPi = 3.14159265358979323846;
const Complex kI(0.0, 1.0);

// Worst-case bookkeeping. Upper bounds keep the maximum, lower bounds the
// minimum, exact checks count failures; info values carry no threshold.
class Tracker {
 public:
  void Upper(const std::string& name, double value, double limit) {
    Entry& e = Get(name, Kind::kUpper, limit);
    e.worst = e.seen ? std::max(e.worst, value) : value;
    e.seen = true;
  }
  void Lower(const std::string& name, double value, double limit) {
    Entry& e = Get(name, Kind::kLower, limit);
    e.worst = e.seen ? std::min(e.worst, value) : value;
    e.seen = true;
  }
  void Exact(const std::string& name, bool ok) {
    Entry& e = Get(name, Kind::kExact, 0);
    e.worst += ok ? 0 : 1;
    e.seen = true;
  }
  void InfoMax(const std::string& name, double value) {
    Entry& e = Get(name, Kind::kInfo, 0);
    e.worst = e.seen ? std::max(e.worst, value) : value;
    e.seen = true;
  }
  void InfoMin(const std::string& name, double value) {
    Entry& e = Get(name, Kind::kInfo, 0);
    e.worst = e.seen ? std::min(e.worst, value) : value;
    e.seen = true;
  }
  void Fail(const std::string& message) { errors_.push_back(message); }

  void Finish(CriterionResult* r) const {
    r->passed = errors_.empty();
    std::ostringstream os;
    os.precision(3);
    bool first = true;
    for (const Entry& e : entries_) {
      bool ok = true;
      if (!first) os << ", ";
      first = false;
      switch (e.kind) {
        case Kind::kUpper:
          ok = e.worst < e.limit;
          os << e.name << "=" << e.worst << (ok ? " < " : " >= ") << e.limit;
          break;
        case Kind::kLower:
          ok = e.worst > e.limit;
          os << e.name << "=" << e.worst << (ok ? " > " : " <= ") << e.limit;
          break;
        case Kind::kExact:
          ok = e.worst == 0;
          os << e.name << " failures=" << e.worst;
          break;
        case Kind::kInfo:
          os << e.name << "=" << e.worst;
          break;
      }
      r->passed = r->passed && ok;
      r->metrics.emplace_back(e.name, e.worst);
    }
    for (const std::string& err : errors_) {
      if (!first) os << ", ";
      first = false;
      os << "error: " << err;
    }
    r->summary = os.str();
  }

 private:
  enum class Kind { kUpper, kLower, kExact, kInfo };
  struct Entry {
    std::string name;
    Kind kind;
    double limit;
    double worst = 0;
    bool seen = false;
  };
  Entry& Get(const std::string& name, Kind kind, double limit) {
    for (Entry& e : entries_) {
      if (e.name == name) return e;
    }
    entries_.push_back(Entry{name, kind, limit});
    return entries_.back();
  }
  std::vector<Entry> entries_;
  std::vector<std::string> errors_;
};

// Independent stream per criterion so that running a subset reproduces the
// same samples.
std::mt19937_64 StreamFor(const SuiteOptions& options, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return std::mt19937_64(seq);
}

constexpr double kExtendedQuadTol = 1e-28;

// Sets the working precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(Precision p) : saved_(GetPrecision()) {
    SetPrecision(p);
  }
  ~PrecisionScope() { SetPrecision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  Precision saved_;
};

double MinSeparation(const std::vector<Complex>& points) {
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      d = std::min(d, std::abs(points[i] - points[j]));
    }
  }
  return d;
}

// n complex points in [-3, 3]^2 with pairwise separation, including from 0
// and 1, at least `sep`.
std::vector<Complex> RandomBranchPoints(std::mt19937_64* rng, int n,
                                        double sep) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  while (true) {
    std::vector<Complex> p(n);
    for (Complex& x : p) x = Complex(u(*rng), u(*rng));
    std::vector<Complex> all = p;
    all.push_back(0.0);
    all.push_back(1.0);
    if (MinSeparation(all) >= sep) return p;
  }
}

double RelError(const Complex& got, const Complex& want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Brute-force lattice sum over the cube |u_i| <= radius, accumulated in long
// double.
Complex BruteForceTheta(const std::vector<double>& a,
                        const std::vector<double>& b, const CVector& z,
                        const CMatrix& tau, int radius) {
  const int g = static_cast<int>(z.size());
  using LC = std::complex<long double>;
  LC sum = 0;
  std::vector<int> u(g, -radius);
  while (true) {
    Complex q = 0;
    for (int i = 0; i < g; ++i) {
      const double vi = u[i] + a[i];
      for (int j = 0; j < g; ++j) q += vi * tau(i, j) * (u[j] + a[j]);
      q += 2.0 * vi * (z(i) + b[i]);
    }
    const Complex term = std::exp(kPi * kI * q);
    sum += LC(term.real(), term.imag());
    int k = 0;
    while (k < g && u[k] == radius) u[k++] = -radius;
    if (k == g) break;
    ++u[k];
  }
  return Complex(static_cast<double>(sum.real()),
                 static_cast<double>(sum.imag()));
}

CMatrix RandomSiegel(std::mt19937_64* rng, int g) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  Eigen::MatrixXd x(g, g), b(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j <= i; ++j) x(i, j) = x(j, i) = u(*rng);
    for (int j = 0; j < g; ++j) b(i, j) = u(*rng);
  }
  Eigen::MatrixXd y = 0.7 * Eigen::MatrixXd::Identity(g, g) + b * b.transpose();
  CMatrix tau(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) tau(i, j) = Complex(x(i, j), y(i, j));
  }
  return tau;
}

// 1. Parity counts.
void ParityCounts(const SuiteOptions&, Tracker* t) {
  t->Exact("g=2 count (10,6)", CountByParity(2) == std::make_pair(10LL, 6LL));
  t->Exact("g=3 count (36,28)", CountByParity(3) == std::make_pair(36LL, 28LL));
  for (int g = 1; g <= 4; ++g) {
    t->Exact("count vs 2^{g-1}(2^g+-1)", CountByParity(g) == ParityCountFormula(g));
  }
}

// 2. Goepel groups and systems.
void GoepelCounting(const SuiteOptions&, Tracker* t) {
  for (int r = 0; r <= 2; ++r) {
    t->Exact("g=2 group count",
             static_cast<long long>(EnumerateGoepelGroups(2, r).size()) ==
                 GoepelGroupCountFormula(2, r));
  }
  for (int g = 1; g <= 3; ++g) {
    for (int r = 0; r <= g; ++r) {
      const SystemCounts want = GoepelSystemCountFormula(g, r);
      for (const GoepelGroup& group : EnumerateGoepelGroups(g, r)) {
        const SystemCounts got = CountSystems(GoepelSystems(group));
        t->Exact("system labels g<=3", got.all_even == want.all_even &&
                                           got.all_odd == want.all_odd &&
                                           got.mixed == want.mixed);
      }
    }
  }
}

// 3. Theta engine against its functional equations and a brute-force sum.
void ThetaEngine(const SuiteOptions& options, Tracker* t) {
  std::mt19937_64 rng = StreamFor(options, 3);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::uniform_int_distribution<int> shift(-2, 2);
  const double tol = options.theta_tol;
  for (int sample = 0; sample < 100; ++sample) {
    const int g = 1 + sample % 3;
    const CMatrix tau = RandomSiegel(&rng, g);
    Eigen::MatrixXd y = tau.imag();
    CVector z(g);
    Eigen::VectorXd s(g);
    for (int i = 0; i < g; ++i) s(i) = u(rng);
    const Eigen::VectorXd ys = y * s;
    for (int i = 0; i < g; ++i) z(i) = Complex(u(rng), ys(i));

    // Level-6 characteristic for the periodicity checks.
    std::uniform_int_distribution<int> digit(0, 5);
    std::vector<long long> top(g), bottom(g);
    std::vector<double> a(g), b(g);
    for (int i = 0; i < g; ++i) {
      top[i] = digit(rng);
      bottom[i] = digit(rng);
      a[i] = top[i] / 6.0;
      b[i] = bottom[i] / 6.0;
    }
    const Complex base = ThetaRational(top, bottom, 6, z, tau, tol);
    const double unit = std::max(1.0, std::abs(base));

    // Integer shift: theta(z + m) = exp(2 pi i a.m) theta(z).
    CVector zm = z;
    double am = 0;
    for (int i = 0; i < g; ++i) {
      const int m = shift(rng);
      zm(i) += m;
      am += a[i] * m;
    }
    const Complex lhs_m = ThetaRational(top, bottom, 6, zm, tau, tol);
    t->Upper("quasi-periodicity / tol",
             std::abs(lhs_m - std::exp(2.0 * kPi * kI * am) * base) / unit / tol,
             2.0);

    // Lattice shift: theta(z + tau n) = exp(-pi i n.tau.n - 2 pi i n.(z + b))
    // theta(z). Each evaluation is accurate to tol in absolute terms, so the
    // shifted one contributes tol times the size of the multiplier.
    Eigen::VectorXd n(g);
    for (int i = 0; i < g; ++i) n(i) = shift(rng);
    if (n.isZero()) n(0) = 1;
    const CVector nc = n.cast<Complex>();
    const CVector zn = z + tau * nc;
    Complex expo = kPi * kI * (nc.transpose() * tau * nc)(0, 0);
    for (int i = 0; i < g; ++i) expo += 2.0 * kPi * kI * n(i) * (z(i) + b[i]);
    const Complex multiplier = std::exp(expo);
    const Complex lhs_n = ThetaRational(top, bottom, 6, zn, tau, tol) * multiplier;
    t->Upper("quasi-periodicity / tol",
             std::abs(lhs_n - base) / std::max(1.0, std::abs(multiplier)) /
                 unit / tol,
             2.0);

    // Parity of a half characteristic.
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << (2 * g)) - 1);
    const Characteristic c = Characteristic::FromMask(g, mask(rng));
    const Complex plus = ThetaChar(c, z, tau, tol);
    const Complex minus = ThetaChar(c, -z, tau, tol);
    t->Upper("parity / tol",
             std::abs(minus - static_cast<double>(ParitySign(c)) * plus) /
                 std::max(1.0, std::abs(plus)) / tol,
             2.0);

    // Brute-force oracle.
    const Complex brute = BruteForceTheta(a, b, z, tau, 20);
    t->Upper("vs radius-20 lattice sum",
             std::abs(base - brute) / std::max(1.0, std::abs(brute)), 1e-10);
  }
}

std::vector<std::array<Complex, 3>> Genus2Sample(const SuiteOptions& options,
                                                 int count) {
  // Shared by the genus-2 criteria so they see the same curves.
  std::mt19937_64 rng = StreamFor(options, 4);
  std::vector<std::array<Complex, 3>> out;
  for (int i = 0; i < count; ++i) {
    const std::vector<Complex> p = RandomBranchPoints(&rng, 3, 0.1);
    out.push_back({p[0], p[1], p[2]});
  }
  return out;
}

// 4. Genus-2 round trip and identities.
void Genus2RoundTrip(const SuiteOptions& options, Tracker* t) {
  std::mt19937_64 rng = StreamFor(options, 40);
  std::normal_distribution<double> normal(0.0, 0.3);
  const std::vector<Characteristic> all = AllHalfCharacteristics(2);
  for (const auto& l : Genus2Sample(options, 20)) {
    const HyperellipticCurve curve = HyperellipticCurve::Genus2(l[0], l[1], l[2]);
    const PeriodData periods = PeriodMatrix(curve, options.quad_tol);
    const Genus2Thetas th = Genus2Thetas::FromTau(periods.tau);

    const std::array<Complex, 3> rec = PicardBranchPoints(th);
    for (int k = 0; k < 3; ++k) {
      t->Upper("Picard recovery", RelError(rec[k], l[k]), 1e-8);
    }
    for (double r : FundamentalIdentityResiduals(th)) {
      t->Upper("fundamental identities", r, 1e-9);
    }
    for (const Characteristic& a : all) {
      if (!IsEven(a)) continue;
      for (const Characteristic& h : all) {
        if (h.Mask() == 0) continue;
        const QuarticResult p = QuarticIdentityResiduals(periods.tau, a, h, 1e-14);
        t->Upper("quartic identity 1", p.residual1 / p.scale, 1e-9);
        t->Upper("quartic identity 2", p.residual2 / p.scale, 1e-9);
      }
    }
    for (int trial = 0; trial < 3; ++trial) {
      std::array<Characteristic, 4> b;
      std::array<CVector, 4> z;
      b[3] = Characteristic::Zero(2);
      z[3] = CVector::Zero(2);
      for (int i = 0; i < 3; ++i) {
        b[i] = all[rng() % all.size()];
        b[3] = Compose(b[3], b[i]);
        z[i] = CVector(2);
        for (int k = 0; k < 2; ++k) z[i](k) = Complex(normal(rng), normal(rng));
        z[3] -= z[i];
      }
      t->Upper("Frobenius", FrobeniusResidual(curve, periods.tau, b, z), 1e-8);
    }
    for (double r : Genus2ThomaeRatioResiduals(l[0], l[1], l[2], th)) {
      t->Upper("Thomae ratios", r, 1e-7);
    }
    // The rows with the misprinted factors, for reference only.
    const auto printed = Genus2ThomaeProductsAsPrinted(l[0], l[1], l[2]);
    const Complex t1 = std::pow(th(1), 8);
    for (int i = 3; i <= 5; ++i) {
      const Complex want = std::pow(printed[i - 1] / printed[0], 2);
      t->InfoMin("printed rows 3-5 residual",
                 std::abs(std::pow(th(i), 8) / t1 - want) / std::abs(want));
    }
  }
}

// 5. alpha quadratic.
void AlphaCriterion(const SuiteOptions& options, Tracker* t) {
  for (const auto& l : Genus2Sample(options, 20)) {
    const Genus2Thetas th = Genus2Thetas::FromTau(
        PeriodMatrix(HyperellipticCurve::Genus2(l[0], l[1], l[2]),
                     options.quad_tol)
            .tau);
    t->Upper("alpha^2 - c alpha + 1", AlphaQuadraticResidual(th), 1e-9);
    t->InfoMin("alpha^2 + c alpha + 1", AlphaQuadraticPlusSignResidual(th));
  }
  // Curves with a3 = a1 a2, where (a1, a2, a3) = (nu, mu, lambda).
  std::mt19937_64 rng = StreamFor(options, 5);
  for (int trial = 0; trial < 5; ++trial) {
    while (true) {
      const std::vector<Complex> p = RandomBranchPoints(&rng, 2, 0.2);
      const Complex a1 = p[0], a2 = p[1], a3 = a1 * a2;
      if (MinSeparation({a1, a2, a3, 0.0, 1.0}) < 0.1) continue;
      // The roots are double here, so c is needed to about 1e-17.
      const PrecisionScope extended(Precision::kExtended);
      const AlphaQuadratic q = CurveAlphaQuadratic(
          HyperellipticCurve::Genus2(a3, a2, a1), kExtendedQuadTol);
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& root : q.roots) {
        best = std::min({best, std::abs(root - 1.0), std::abs(root + 1.0)});
      }
      t->Upper("a3=a1a2 root to +-1", best, 1e-8);
      break;
    }
  }
}

// 6. Exact locus equivalence.
Rational RandomRational(std::mt19937_64* rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  return Rational(num(*rng), den(*rng));
}

bool DistinctRosenhain(const Rational& a1, const Rational& a2,
                       const Rational& a3) {
  const std::array<Rational, 5> p = {a1, a2, a3, Rational(0), Rational(1)};
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (p[i] == p[j]) return false;
    }
  }
  return true;
}

struct LocusSides {
  bool invariant_zero;
  bool factor_zero;
  std::array<Rational, 15> factors;
};

LocusSides EvaluateSides(const Rational& a1, const Rational& a2,
                         const Rational& a3) {
  LocusSides s;
  const IgusaInvariants j = IgusaFromSextic(RosenhainSextic(a1, a2, a3));
  s.invariant_zero = EvaluateLocus(L2Locus(), j) == 0;
  s.factors = CrossRatioFactors(a1, a2, a3);
  s.factor_zero = std::any_of(s.factors.begin(), s.factors.end(),
                              [](const Rational& f) { return f == 0; });
  return s;
}

void LocusEquivalence(const SuiteOptions& options, Tracker* t) {
  std::mt19937_64 rng = StreamFor(options, 6);
  int random_on_locus = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Rational a1, a2, a3;
    do {
      a1 = RandomRational(&rng);
      a2 = RandomRational(&rng);
      a3 = RandomRational(&rng);
    } while (!DistinctRosenhain(a1, a2, a3));
    const LocusSides s = EvaluateSides(a1, a2, a3);
    t->Exact("random triples", s.invariant_zero == s.factor_zero);
    random_on_locus += s.factor_zero ? 1 : 0;
  }
  t->InfoMax("random triples on the locus", random_on_locus);
  // Each factor is affine in a3, so f(a3) = f(0) + a3 (f(1) - f(0)).
  for (int k = 0; k < 15; ++k) {
    while (true) {
      const Rational a1 = RandomRational(&rng), a2 = RandomRational(&rng);
      const Rational f0 = CrossRatioFactors(a1, a2, Rational(0))[k];
      const Rational f1 = CrossRatioFactors(a1, a2, Rational(1))[k];
      if (f1 == f0) continue;
      const Rational a3 = -f0 / (f1 - f0);
      if (!DistinctRosenhain(a1, a2, a3)) continue;
      const LocusSides s = EvaluateSides(a1, a2, a3);
      t->Exact("constructed triples", s.factors[k] == 0 && s.invariant_zero &&
                                          s.factor_zero);
      break;
    }
  }
}

// 7. Cross-ratio theta rows.
void Table1(const SuiteOptions& options, Tracker* t) {
  std::mt19937_64 rng = StreamFor(options, 7);
  auto thetas = [&](const Complex& a1, const Complex& a2, const Complex& a3) {
    return Genus2Thetas::FromTau(
        PeriodMatrix(HyperellipticCurve::Genus2(a3, a2, a1), options.quad_tol)
            .tau);
  };
  const std::vector<Complex> g = RandomBranchPoints(&rng, 3, 0.2);
  const auto generic = Table1Rows(g[0], g[1], g[2], thetas(g[0], g[1], g[2]));
  for (const Table1Row& row : generic) {
    t->Lower("generic curve", row.theta_normalized, 1e-4);
  }
  for (int k = 0; k < 15; ++k) {
    while (true) {
      const std::vector<Complex> p = RandomBranchPoints(&rng, 2, 0.2);
      const Complex f0 = CrossRatioFactors<Complex>(p[0], p[1], 0.0)[k];
      const Complex f1 = CrossRatioFactors<Complex>(p[0], p[1], 1.0)[k];
      if (std::abs(f1 - f0) < 1e-3) continue;
      const Complex a3 = -f0 / (f1 - f0);
      if (MinSeparation({p[0], p[1], a3, 0.0, 1.0}) < 0.1 || std::abs(a3) > 10) {
        continue;
      }
      const auto rows = Table1Rows(p[0], p[1], a3, thetas(p[0], p[1], a3));
      t->Upper("on-locus row", rows[k].theta_normalized, 1e-8);
      break;
    }
  }
}

// 8. Automorphism classifier.
void Classifier(const SuiteOptions&, Tracker* t) {
  auto check = [&](const std::string& name, const Classification& c,
                   AutLabel want) {
    t->Exact(name, c.label == want && c.exact);
  };
  check("(2,3,5) -> Z2", ClassifyRosenhain(2, 3, 5), AutLabel::kZ2);
  check("(2,3,6) -> V4", ClassifyRosenhain(2, 3, 6), AutLabel::kV4);
  auto sextic = [](std::vector<long long> c) {
    return std::vector<Rational>(c.begin(), c.end());
  };
  check("x^5+x^3+2x -> D8", ClassifyAut(sextic({0, 1, 0, 1, 0, 2, 0})),
        AutLabel::kD8);
  check("x^6+x^3+2 -> D12", ClassifyAut(sextic({1, 0, 0, 1, 0, 0, 2})),
        AutLabel::kD12);
  check("x^6+x^3+3 -> D12", ClassifyAut(sextic({1, 0, 0, 1, 0, 0, 3})),
        AutLabel::kD12);
}

// 9. Genus-3 hyperelliptic.
void Genus3(const SuiteOptions& options, Tracker* t) {
  std::mt19937_64 rng = StreamFor(options, 9);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<Complex> p = RandomBranchPoints(&rng, 5, 0.2);
    const std::array<Complex, 5> a = {p[0], p[1], p[2], p[3], p[4]};
    const HyperellipticCurve curve = HyperellipticCurve::Genus3(a);
    const Genus3Thetas th =
        Genus3Thetas::FromTau(PeriodMatrix(curve, options.quad_tol).tau);
    double largest = 0;
    for (int i = 1; i <= 36; ++i) largest = std::max(largest, std::abs(th(i)));
    for (int i = 1; i <= 36; ++i) {
      const double v = std::abs(th(i)) / largest;
      if (i == kGenus3VanishingIndex) {
        t->Upper("|theta_12|", v, 1e-9);
      } else {
        t->Lower("other even thetanulls", v, 1e-4);
      }
    }
    for (double r : Thomae36RatioResiduals(curve, th)) {
      t->Upper("Thomae ratios", r, 1e-6);
    }
    const std::array<Complex, 5> rec = BranchFromThetasG3(th);
    for (int k = 0; k < 5; ++k) {
      t->Upper("branch recovery", RelError(rec[k], a[k]), 1e-7);
    }
    t->Upper("ratio alternatives spread", PossibleRatiosSpread(th), 1e-7);
  }
}

// 10. Trigonal curves.
void Trigonal(const SuiteOptions& options, Tracker* t) {
  const CalibrationResult cal =
      CalibrateTrigonal(TrigonalCurve(2.0, 3.0), options.quad_tol);
  t->Exact("calibration on (2,3) is the frozen rule",
           cal.best == TrigonalCalibration::Frozen());
  t->InfoMax("calibration candidates", static_cast<double>(cal.candidates.size()));

  std::mt19937_64 rng = StreamFor(options, 10);
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<Complex> p = RandomBranchPoints(&rng, 2, 0.3);
    const TrigonalCurve curve(p[0], p[1]);
    const TrigonalPeriodData d =
        TrigonalPeriodMatrix(curve, options.quad_tol, cal.best);
    const Level6Thetas th = Level6ThetasFromTau(d.periods.tau);
    const auto [s, tt] = BranchFromTrigonal(th);
    t->Upper("round trip", std::max(RelError(s, curve.s), RelError(tt, curve.t)),
             1e-6);
    t->Lower("C6 relation off the family", C6RelationResidual(th), 1e-3);
  }
  const TrigonalPeriodData ref =
      TrigonalPeriodMatrix(TrigonalCurve(2.0, 3.0), options.quad_tol, cal.best);
  t->Lower("C6 relation off the family",
           C6RelationResidual(Level6ThetasFromTau(ref.periods.tau)), 1e-3);
  for (const Complex& x : {Complex(0.2), Complex(0.3), Complex(0.4, 0.1)}) {
    const TrigonalPeriodData d =
        TrigonalPeriodMatrix(TrigonalCurve(1.0 - x, x), options.quad_tol, cal.best);
    t->Upper("C6 relation on s=1-t",
             C6RelationResidual(Level6ThetasFromTau(d.periods.tau)), 1e-6);
  }
}

// 11. J10 from thetas against the branch points.
void J10Consistency(const SuiteOptions& options, Tracker* t) {
  std::vector<std::array<Complex, 2>> ratios;
  for (const auto& l : Genus2Sample(options, 5)) {
    const Genus2Thetas th = Genus2Thetas::FromTau(
        PeriodMatrix(HyperellipticCurve::Genus2(l[0], l[1], l[2]),
                     options.quad_tol)
            .tau);
    const J10Check c =
        J10ThetaChecks(th, IgusaFromSextic(RosenhainSextic<Complex>(l[0], l[1], l[2])));
    ratios.push_back(c.ratio);
    const Genus2Thetas unit = th.Normalized();
    for (int i : {1, 3, 5, 6, 7, 8, 9}) {
      t->Lower("min |theta_i| normalized, i in {1,3,5..9}", std::abs(unit(i)),
               1e-6);
    }
    t->InfoMax("theta formulas disagreement", c.formula_agreement);
  }
  for (int k = 0; k < 2; ++k) {
    for (const auto& r : ratios) {
      t->Upper("ratio spread across curves", RelError(r[k], ratios[0][k]), 1e-6);
    }
  }
}

struct Criterion {
  const char* title;
  std::function<void(const SuiteOptions&, Tracker*)> run;
};

const std::array<Criterion, kNumCriteria>& Criteria() {
  static const std::array<Criterion, kNumCriteria> kCriteria = {{
      {"parity counts", ParityCounts},
      {"Goepel counting", GoepelCounting},
      {"theta engine", ThetaEngine},
      {"genus-2 round trip", Genus2RoundTrip},
      {"alpha quadratic", AlphaCriterion},
      {"L2 locus equivalence (exact)", LocusEquivalence},
      {"cross-ratio theta rows", Table1},
      {"automorphism classifier", Classifier},
      {"genus-3 hyperelliptic", Genus3},
      {"trigonal round trip and C6 relation", Trigonal},
      {"J10 consistency", J10Consistency},
  }};
  return kCriteria;
}

}  // namespace

CriterionResult RunCriterion(int id, const SuiteOptions& options) {
  THETANULL_CHECK(id >= 1 && id <= kNumCriteria, "criterion id out of range");
  const Criterion& c = Criteria()[id - 1];
  CriterionResult result;
  result.id = id;
  result.title = c.title;
  const auto start = std::chrono::steady_clock::now();
  Tracker tracker;
  try {
    c.run(options, &tracker);
  } catch (const std::exception& e) {
    tracker.Fail(e.what());
  }
  tracker.Finish(&result);
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

std::vector<CriterionResult> RunSuite(const SuiteOptions& options) {
  std::vector<int> ids = options.only;
  if (ids.empty()) {
    for (int i = 1; i <= kNumCriteria; ++i) ids.push_back(i);
  }
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(RunCriterion(id, options));
  return out;
}

std::string FormatResult(const CriterionResult& result) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << " "
     << result.title << " (" << result.seconds << " s): " << result.summary;
  return os.str();
}

}  // namespace acceptance
}  // namespace thetanull
