#include "thetanull/cyclic3.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "thetanull/cyclic_periods.h"
#include "thetanull/multiprecision.h"
#include "thetanull/symplectic.h"
#include "thetanull/theta_eval_t.h"

namespace thetanull {
namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr int kGenus = 3;
constexpr int kDim = 6;

// Targets in (bottom; top) coordinates: q0 and wp mod 3, the half part mod 2.
IVector TargetP0() { return (IVector(kDim) << 0, 2, 0, 0, 2, 0).finished(); }
IVector TargetW() { return (IVector(kDim) << 1, 0, 1, 0, 0, 0).finished(); }
IVector TargetHalf() { return (IVector(kDim) << 0, 1, 0, 0, 1, 0).finished(); }

struct Blocks {
  IMatrix a, b, c, d;
};

Blocks SplitBlocks(const IMatrix& m) {
  const int g = static_cast<int>(m.rows() / 2);
  return {m.topLeftCorner(g, g), m.topRightCorner(g, g),
          m.bottomLeftCorner(g, g), m.bottomRightCorner(g, g)};
}

// Transformation of tau induced by the change of cycle coordinates U.
IMatrix MatrixOfFrameChange(const IMatrix& u) {
  const IMatrix r = SymplecticInverse(u).transpose();
  const int g = static_cast<int>(u.rows() / 2);
  IMatrix m(2 * g, 2 * g);
  m << r.bottomRightCorner(g, g), r.bottomLeftCorner(g, g),
      r.topRightCorner(g, g), r.topLeftCorner(g, g);
  return m;
}

IMatrix WordMatrix(const std::vector<TransvectionStep>& word) {
  IMatrix u = IMatrix::Identity(kDim, kDim);
  for (const auto& st : word) u = Transvection(st.v, st.power) * u;
  return u;
}

// Half part of the image of the half characteristic x (bottom; top mod 2)
// under the frame change U, as (bottom; top) mod 2.
IVector HalfImage(const IMatrix& u, const IVector& x) {
  const IMatrix m = MatrixOfFrameChange(u);
  std::vector<long long> top(kGenus), bottom(kGenus);
  for (int i = 0; i < kGenus; ++i) {
    bottom[i] = x(i);
    top[i] = x(kGenus + i);
  }
  const auto [nt, nb] = CharacteristicAction(m, top, bottom, 2);
  // Numerators are over 4; the half part is numerator / 2 mod 2.
  IVector out(kDim);
  for (int i = 0; i < kGenus; ++i) {
    THETANULL_CHECK(PosMod(nb[i], 2) == 0 && PosMod(nt[i], 2) == 0,
                    "half characteristic left the half lattice");
    out(i) = PosMod(nb[i] / 2, 2);
    out(kGenus + i) = PosMod(nt[i] / 2, 2);
  }
  return out;
}

std::vector<IVector> NonzeroMod2() {
  std::vector<IVector> all;
  for (int mask = 1; mask < (1 << kDim); ++mask) {
    IVector v(kDim);
    for (int i = 0; i < kDim; ++i) v(i) = (mask >> i) & 1;
    all.push_back(v);
  }
  return all;
}

// Abel-Jacobi images of the finite branch points with base at infinity, as
// numerators mod 3 of (bottom; top) coordinates of the raw basis.
template <typename Real>
std::array<IVector, 4> AbelJacobiMod3(const CyclicPeriods<Real>& d) {
  const int n = static_cast<int>(d.points.size());
  const IMatrix binv = IntegerInverse(d.basis);
  std::vector<IVector> rel(n);
  std::vector<bool> known(n, false);
  rel[0] = IVector::Zero(kDim);
  known[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : d.tree) {
      // Twice the sheet-0 lift plus the sheet-1 lift is three times the
      // path from a to b.
      const IVector x = (2 * binv.row(d.CycleIndex(a, b, 0)) +
                         binv.row(d.CycleIndex(a, b, 1)))
                            .transpose();
      if (known[a] && !known[b]) {
        rel[b] = ModVector(rel[a] + x, 3);
        known[b] = changed = true;
      } else if (known[b] && !known[a]) {
        rel[a] = ModVector(rel[b] - x, 3);
        known[a] = changed = true;
      }
    }
  }
  IVector root = IVector::Zero(kDim);
  for (const auto& r : rel) root -= r;
  std::array<IVector, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = ModVector(rel[k] + root, 3);
  return out;
}

// Level-6 characteristic with half part h (mod 2) and third part p (mod 3),
// both in (bottom; top) coordinates.
Characteristic SixthCharacteristic(const IVector& h, const IVector& p) {
  std::vector<int> top(kGenus), bottom(kGenus);
  for (int i = 0; i < kGenus; ++i) {
    bottom[i] = static_cast<int>(PosMod(3 * h(i) + 2 * p(i), 6));
    top[i] = static_cast<int>(PosMod(3 * h(kGenus + i) + 2 * p(kGenus + i), 6));
  }
  return Characteristic(6, top, bottom);
}

// Half characteristic whose shifts by the sums of two branch-point images
// all give vanishing thetanulls.
IVector RiemannConstant(const CMatrix& tau, const std::array<IVector, 4>& aj,
                        double* vanishing) {
  std::vector<IVector> pts(aj.begin(), aj.end());
  pts.push_back(IVector::Zero(kDim));
  std::vector<IVector> sums;
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i; j < pts.size(); ++j) sums.push_back(ModVector(pts[i] + pts[j], 3));
  }
  std::vector<Characteristic> chars;
  std::vector<IVector> halves;
  for (int mask = 0; mask < (1 << kDim); ++mask) {
    IVector h(kDim);
    for (int i = 0; i < kDim; ++i) h(i) = (mask >> i) & 1;
    halves.push_back(h);
    for (const auto& p : sums) chars.push_back(SixthCharacteristic(h, p));
  }
  const std::vector<Complex> vals = Thetanulls(chars, tau, 1e-10);
  double best = 0, second = 0;
  int best_k = -1;
  for (size_t k = 0; k < halves.size(); ++k) {
    double mx = 0;
    for (size_t q = 0; q < sums.size(); ++q) {
      mx = std::max(mx, std::abs(vals[k * sums.size() + q]));
    }
    if (best_k < 0 || mx < best) {
      second = best_k < 0 ? mx : best;
      best = mx;
      best_k = static_cast<int>(k);
    } else if (mx < second) {
      second = mx;
    }
  }
  if (!(best < 1e-6 && second > 1e3 * best)) {
    throw NumericalError("Riemann constant search is inconclusive");
  }
  *vanishing = best;
  return halves[best_k];
}

IVector WordVector(const std::array<int, 4>& word,
                   const std::array<IVector, 4>& aj) {
  IVector v = IVector::Zero(kDim);
  for (int k = 0; k < 4; ++k) v += word[k] * aj[k];
  return ModVector(v, 3);
}

std::array<int, 4> CanonicalWord(std::array<int, 4> w) {
  std::array<int, 4> best = w;
  for (int shift = 1; shift < 3; ++shift) {
    std::array<int, 4> c;
    for (int k = 0; k < 4; ++k) c[k] = (w[k] + shift) % 3;
    best = std::min(best, c);
  }
  return best;
}

double FrameConditioning(const IMatrix& u, const CMatrix& raw_tau) {
  const Blocks bl = SplitBlocks(MatrixOfFrameChange(u));
  const CMatrix a = bl.a.cast<double>().cast<Complex>();
  const CMatrix b = bl.b.cast<double>().cast<Complex>();
  const CMatrix c = bl.c.cast<double>().cast<Complex>();
  const CMatrix d = bl.d.cast<double>().cast<Complex>();
  const CMatrix t = (a * raw_tau + b) * (c * raw_tau + d).inverse();
  const Eigen::MatrixXd y = 0.5 * (t.imag() + t.imag().transpose());
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(y).eigenvalues().minCoeff();
}

// Single transvection steps over F_3 taking x to y and fixing `fixed`, each
// with both integer powers that are trivial mod 2. Falls back to the first
// two-step route.
std::vector<std::vector<TransvectionStep>> StepsMod3(
    const IVector& x, const IVector& y, const std::vector<IVector>& fixed) {
  const IVector xm = ModVector(x, 3), ym = ModVector(y, 3);
  if (xm == ym) return {{}};
  const IMatrix j = StandardSymplecticForm(kGenus);
  auto lifts = [](int lambda) {
    return lambda == 1 ? std::vector<long long>{-2, 4}
                       : std::vector<long long>{2, -4};
  };
  std::vector<std::vector<TransvectionStep>> out;
  for (int code = 1; code < 729; ++code) {
    IVector v(kDim);
    int c = code, lead = 0;
    for (int i = 0; i < kDim; ++i) {
      v(i) = c % 3;
      c /= 3;
      if (lead == 0 && v(i) != 0) lead = static_cast<int>(v(i));
    }
    if (lead != 1) continue;  // v and -v give the same transvection
    bool ok = true;
    for (const auto& f : fixed) ok = ok && PosMod(f.dot(j * v), 3) == 0;
    if (!ok) continue;
    const long long pair = xm.dot(j * v);
    for (int lambda = 1; lambda <= 2; ++lambda) {
      if (ModVector(xm + lambda * pair * v, 3) != ym) continue;
      for (long long k : lifts(lambda)) out.push_back({{v, k}});
    }
  }
  if (!out.empty()) return out;
  std::vector<TransvectionStep> route;
  for (const auto& st : RouteMod3(xm, ym, fixed)) {
    route.push_back({st.v, st.lambda == 1 ? -2 : 2});
  }
  return {route};
}

struct Partial {
  std::vector<TransvectionStep> word;
  IMatrix u;
  double score = 0;
};

void Extend(std::vector<Partial>* beam, const Partial& base,
            const std::vector<TransvectionStep>& steps, const CMatrix& raw_tau) {
  Partial p = base;
  for (const auto& st : steps) {
    p.word.push_back(st);
    p.u = Transvection(st.v, st.power) * p.u;
  }
  p.score = FrameConditioning(p.u, raw_tau);
  beam->push_back(std::move(p));
}

void Prune(std::vector<Partial>* beam, size_t width) {
  std::stable_sort(beam->begin(), beam->end(),
                   [](const Partial& x, const Partial& y) { return x.score > y.score; });
  if (beam->size() > width) beam->resize(width);
}

// Transvection word taking p0 to q0, w to wp (mod 3) and the Riemann
// constant to the target half characteristic (mod 2). The mod-3 steps use
// powers trivial mod 2 and the mod-2 steps powers trivial mod 3. Among the
// candidate words the one whose frame has the best conditioned Im(tau) is
// kept.
std::vector<TransvectionStep> RouteFrame(const IVector& p0, const IVector& w,
                                         const IVector& half,
                                         const CMatrix& raw_tau) {
  if (PosMod(p0.dot(StandardSymplecticForm(kGenus) * w), 3) != 0) {
    throw NumericalError("frame classes are not isotropic");
  }
  constexpr size_t kWidth = 12;
  Partial start;
  start.u = IMatrix::Identity(kDim, kDim);
  std::vector<Partial> beam;
  for (const auto& steps : StepsMod3(p0, TargetP0(), {})) {
    Extend(&beam, start, steps, raw_tau);
  }
  Prune(&beam, kWidth);
  std::vector<Partial> next;
  for (const Partial& p : beam) {
    const IVector w1 = ModVector(p.u * w, 3);
    for (const auto& steps : StepsMod3(w1, TargetW(), {TargetP0()})) {
      Extend(&next, p, steps, raw_tau);
    }
  }
  Prune(&next, kWidth);
  beam.swap(next);
  next.clear();
  const std::vector<IVector> all = NonzeroMod2();
  for (const Partial& p : beam) {
    if (HalfImage(p.u, half) == TargetHalf()) next.push_back(p);
    for (const auto& v : all) {
      if (HalfImage(Transvection(v, 3) * p.u, half) != TargetHalf()) continue;
      for (long long k : {3LL, -3LL}) Extend(&next, p, {{v, k}}, raw_tau);
    }
  }
  if (next.empty()) {
    for (const Partial& p : beam) {
      for (const auto& v1 : all) {
        const IMatrix u1 = Transvection(v1, 3) * p.u;
        for (const auto& v2 : all) {
          if (HalfImage(Transvection(v2, 3) * u1, half) == TargetHalf()) {
            Extend(&next, p, {{v1, 3}, {v2, 3}}, raw_tau);
          }
        }
      }
    }
  }
  if (next.empty()) {
    throw NumericalError("no transvection route for the half characteristic");
  }
  Prune(&next, 1);
  return next.front().word;
}

template <typename Real>
struct RawTrigonal {
  CyclicPeriods<Real> d;
  CMatrix tau;
  std::array<IVector, 4> aj;
  IVector half;
  double vanishing = 0;
};

template <typename Real>
RawTrigonal<Real> ComputeRaw(const TrigonalCurve& curve, double quad_tol,
                             int sheet_shift) {
  curve.Validate();
  RawTrigonal<Real> raw;
  raw.d = ComputeCyclicPeriods<Real>(curve.BranchPoints(), 3,
                                     {{0, 1}, {0, 2}, {1, 2}}, quad_tol,
                                     sheet_shift);
  if (raw.d.genus() != kGenus) throw NumericalError("unexpected genus");
  CMatrixT<Real> a, b;
  HolomorphicPeriods<Real>(raw.d, raw.d.basis, &a, &b);
  raw.tau = MatrixToDouble<Real>(NormalizedTau<Real>(a, b));
  raw.aj = AbelJacobiMod3(raw.d);
  raw.half = RiemannConstant(raw.tau, raw.aj, &raw.vanishing);
  return raw;
}

template <typename Real>
TrigonalPeriodData Calibrate(const RawTrigonal<Real>& raw,
                             const TrigonalCalibration& cal) {
  TrigonalPeriodData out;
  out.raw_basis = raw.d.basis;
  out.raw_tau = raw.tau;
  out.abel_jacobi = raw.aj;
  out.riemann_vanishing = raw.vanishing;
  out.calibration = cal;
  std::vector<int> top(kGenus), bottom(kGenus);
  for (int i = 0; i < kGenus; ++i) {
    bottom[i] = static_cast<int>(raw.half(i));
    top[i] = static_cast<int>(raw.half(kGenus + i));
  }
  out.riemann_constant = Characteristic(2, top, bottom);
  out.word = RouteFrame(WordVector(cal.p0_word, raw.aj),
                        WordVector(cal.w_word, raw.aj), raw.half, raw.tau);
  const IMatrix u = WordMatrix(out.word);
  out.basis = SymplecticInverse(u).transpose() * raw.d.basis;

  CMatrixT<Real> a, b;
  HolomorphicPeriods<Real>(raw.d, out.basis, &a, &b);
  PeriodData& p = out.periods;
  const CMatrix ah = MatrixToDouble<Real>(a);
  const CMatrix bh = MatrixToDouble<Real>(b);
  p.a_periods = ah.transpose();
  p.b_periods = bh.transpose();
  p.tau = MatrixToDouble<Real>(NormalizedTau<Real>(a, b, &p.symmetry_defect));
  p.quadrature_error = raw.d.quadrature_error;
  p.intersection_defect = raw.d.intersection_defect;
  const CMatrixT<Real> bil = a.transpose() * b - b.transpose() * a;
  p.bilinear_residual = MatrixToDouble<Real>(bil).norm() / (ah.norm() * bh.norm());
  if (!IsSiegel(p.tau, 1e-6)) {
    throw NumericalError("computed period matrix is not in the Siegel space");
  }
  return out;
}

template <typename Real>
TrigonalPeriodData PeriodMatrixT(const TrigonalCurve& curve, double quad_tol,
                                 const TrigonalCalibration& cal,
                                 int sheet_shift) {
  return Calibrate(ComputeRaw<Real>(curve, quad_tol, sheet_shift), cal);
}

// Rules whose calibrated thetas reproduce (s, t) of the curve, with the
// relative error.
std::vector<std::pair<TrigonalCalibration, double>> MatchingRules(
    const TrigonalCurve& curve, double quad_tol, double match_tol) {
  const RawTrigonal<double> raw = ComputeRaw<double>(curve, quad_tol, 0);
  std::vector<std::pair<std::array<int, 4>, IVector>> words;
  for (int code = 0; code < 81; ++code) {
    std::array<int, 4> w{code / 27, (code / 9) % 3, (code / 3) % 3, code % 3};
    if (CanonicalWord(w) != w) continue;
    words.push_back({w, WordVector(w, raw.aj)});
  }
  // Modulus screen in the raw frame, where the cube ratios already have the
  // right absolute values.
  std::vector<Characteristic> chars;
  for (const auto& [w, p] : words) chars.push_back(SixthCharacteristic(raw.half, p));
  const std::vector<Complex> vals = Thetanulls(chars, raw.tau);
  auto index_of = [&](const IVector& p) {
    for (size_t k = 0; k < words.size(); ++k) {
      if (words[k].second == p) return static_cast<int>(k);
    }
    return -1;
  };
  const double as = std::abs(curve.s), at = std::abs(curve.t);
  std::vector<std::pair<TrigonalCalibration, double>> out;
  for (const auto& [wp, p0] : words) {
    for (const auto& [ww, w] : words) {
      if (w.isZero()) continue;
      const int i1 = index_of(ModVector(p0 + 2 * w, 3));
      const int i2 = index_of(ModVector(p0 + w, 3));
      const int i3 = index_of(p0);
      if (i1 < 0 || i2 < 0 || i3 < 0 || std::abs(vals[i1]) == 0) continue;
      const double ms = std::pow(std::abs(vals[i2] / vals[i1]), 3);
      const double mt = std::pow(std::abs(vals[i3] / vals[i1]), 3);
      if (std::abs(ms - as) > 1e-4 * as || std::abs(mt - at) > 1e-4 * at) continue;
      TrigonalCalibration cal;
      cal.p0_word = wp;
      cal.w_word = ww;
      TrigonalPeriodData data;
      try {
        data = Calibrate(raw, cal);
      } catch (const NumericalError&) {
        continue;
      }
      const auto [s, t] = BranchFromTrigonal(Level6ThetasFromTau(data.periods.tau));
      const double err = std::max(std::abs(s - curve.s) / as,
                                  std::abs(t - curve.t) / at);
      if (err < match_tol) out.push_back({cal, err});
    }
  }
  return out;
}

Rational Frac(long long num, long long den) { return Rational(num) / den; }

double Reduce01(const Rational& x) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(x);
  const cpp_int den = boost::multiprecision::denominator(x);
  cpp_int r = num % den;
  if (r < 0) r += den;
  return static_cast<double>(Rational(r, den));
}

}  // namespace

TrigonalCurve::TrigonalCurve(Complex s_in, Complex t_in) : s(s_in), t(t_in) {
  Validate();
}

std::vector<Complex> TrigonalCurve::BranchPoints() const {
  return {0.0, 1.0, s, t};
}

void TrigonalCurve::Validate() const {
  const std::vector<Complex> p = {0.0, 1.0, s, t};
  double scale = 1.0;
  for (const Complex& z : p) {
    THETANULL_CHECK(std::isfinite(z.real()) && std::isfinite(z.imag()),
                    "s and t must be finite");
    scale = std::max(scale, std::abs(z));
  }
  for (size_t i = 0; i < p.size(); ++i) {
    for (size_t j = i + 1; j < p.size(); ++j) {
      THETANULL_CHECK(std::abs(p[i] - p[j]) >= 1e-10 * scale,
                      "0, 1, s, t must be pairwise distinct");
    }
  }
}

TrigonalCalibration TrigonalCalibration::Frozen() {
  TrigonalCalibration c;
  c.p0_word = {0, 1, 2, 0};
  c.w_word = {0, 1, 1, 1};
  return c;
}

std::string TrigonalCalibration::ToString() const {
  std::ostringstream os;
  os << "p0=(" << p0_word[0] << "," << p0_word[1] << "," << p0_word[2] << ","
     << p0_word[3] << ") w=(" << w_word[0] << "," << w_word[1] << ","
     << w_word[2] << "," << w_word[3] << ")";
  return os.str();
}

TrigonalPeriodData TrigonalPeriodMatrix(const TrigonalCurve& curve,
                                        double quad_tol,
                                        const TrigonalCalibration& calibration,
                                        int sheet_shift) {
  if (GetPrecision() == Precision::kExtended) {
    return PeriodMatrixT<Float113>(curve, quad_tol, calibration, sheet_shift);
  }
  return PeriodMatrixT<double>(curve, quad_tol, calibration, sheet_shift);
}

IMatrix CalibrationTransform(const TrigonalPeriodData& data) {
  return MatrixOfFrameChange(WordMatrix(data.word));
}

std::array<Characteristic, 3> RawFrameCharacteristics(
    const TrigonalPeriodData& data) {
  IVector half(kDim);
  for (int i = 0; i < kGenus; ++i) {
    half(i) = data.riemann_constant.bottom[i];
    half(kGenus + i) = data.riemann_constant.top[i];
  }
  const IVector p0 = WordVector(data.calibration.p0_word, data.abel_jacobi);
  const IVector w = WordVector(data.calibration.w_word, data.abel_jacobi);
  std::array<Characteristic, 3> out;
  for (int k = 0; k < 3; ++k) {
    out[k] = SixthCharacteristic(half, ModVector(p0 + (2 - k) * w, 3));
  }
  return out;
}

CalibrationResult CalibrateTrigonal(const TrigonalCurve& reference,
                                    double quad_tol, double match_tol) {
  // A rule must also reproduce the reference with s and t exchanged; the
  // reference alone admits coincidental matches.
  const auto direct = MatchingRules(reference, quad_tol, match_tol);
  const auto swapped =
      MatchingRules(TrigonalCurve(reference.t, reference.s), quad_tol, match_tol);
  CalibrationResult result;
  for (const auto& [cal, err] : direct) {
    const auto it = std::find_if(swapped.begin(), swapped.end(),
                                 [&](const auto& x) { return x.first == cal; });
    if (it == swapped.end()) {
      result.rejected.push_back(cal);
      continue;
    }
    result.candidates.push_back(cal);
    if (result.candidates.size() == 1 ||
        std::tie(cal.p0_word, cal.w_word) <
            std::tie(result.best.p0_word, result.best.w_word)) {
      result.best = cal;
      result.best_error = std::max(err, it->second);
    }
  }
  if (result.candidates.empty()) {
    throw NumericalError("calibration found no frame reproducing the reference");
  }
  return result;
}

std::array<Characteristic, 3> Level6Characteristics() {
  return {Characteristic(6, {0, 1, 0}, {4, 1, 4}),
          Characteristic(6, {0, 1, 0}, {2, 1, 2}),
          Characteristic(6, {0, 1, 0}, {0, 1, 0})};
}

Level6Thetas Level6ThetasFromTau(const CMatrix& tau, double tol) {
  THETANULL_CHECK(tau.rows() == kGenus && tau.cols() == kGenus,
                  "tau must be 3x3");
  THETANULL_CHECK(IsSiegel(tau), "tau must lie in the Siegel space");
  const auto chars = Level6Characteristics();
  const std::vector<Complex> v =
      Thetanulls(std::vector<Characteristic>(chars.begin(), chars.end()), tau, tol);
  return Level6Thetas{{v[0], v[1], v[2]}};
}

std::pair<Complex, Complex> BranchFromTrigonal(const Level6Thetas& th) {
  if (th(1) == Complex(0.0)) throw ValidationError("theta_1 vanishes");
  const Complex r2 = th(2) / th(1), r3 = th(3) / th(1);
  return {r2 * r2 * r2, r3 * r3 * r3};
}

double C6RelationResidual(const Level6Thetas& th) {
  const Complex c1 = th(1) * th(1) * th(1);
  const Complex c2 = th(2) * th(2) * th(2);
  const Complex c3 = th(3) * th(3) * th(3);
  return std::abs(c2 - c1 + c3) / std::max(std::abs(c1), 1e-300);
}

CMatrix SymplecticActionOnTau(const IMatrix& m, const CMatrix& tau) {
  const int g = static_cast<int>(tau.rows());
  THETANULL_CHECK(m.rows() == 2 * g && m.cols() == 2 * g, "size mismatch");
  THETANULL_CHECK(IsSymplectic(m), "matrix is not symplectic");
  const Blocks bl = SplitBlocks(m);
  const CMatrix a = bl.a.cast<double>().cast<Complex>();
  const CMatrix b = bl.b.cast<double>().cast<Complex>();
  const CMatrix c = bl.c.cast<double>().cast<Complex>();
  const CMatrix d = bl.d.cast<double>().cast<Complex>();
  return Symmetrize((a * tau + b) * (c * tau + d).inverse());
}

std::pair<std::vector<long long>, std::vector<long long>> CharacteristicAction(
    const IMatrix& m, const std::vector<long long>& top,
    const std::vector<long long>& bottom, int level) {
  const int g = static_cast<int>(top.size());
  THETANULL_CHECK(m.rows() == 2 * g && m.cols() == 2 * g, "size mismatch");
  THETANULL_CHECK(static_cast<int>(bottom.size()) == g, "size mismatch");
  THETANULL_CHECK(level >= 1, "level must be positive");
  const Blocks bl = SplitBlocks(m);
  IVector a(g), b(g);
  for (int i = 0; i < g; ++i) {
    a(i) = top[i];
    b(i) = bottom[i];
  }
  const IVector na = bl.d * a - bl.c * b;
  const IVector nb = -bl.b * a + bl.a * b;
  std::vector<long long> ot(g), ob(g);
  for (int i = 0; i < g; ++i) {
    const long long dcd = bl.c.row(i).dot(bl.d.row(i));
    const long long dab = bl.a.row(i).dot(bl.b.row(i));
    ot[i] = 2 * na(i) + level * dcd;
    ob[i] = 2 * nb(i) + level * dab;
  }
  return {ot, ob};
}

double ThetaTransformPhase(const IMatrix& m, const std::vector<long long>& top,
                           const std::vector<long long>& bottom, int level) {
  const int g = static_cast<int>(top.size());
  THETANULL_CHECK(m.rows() == 2 * g && m.cols() == 2 * g, "size mismatch");
  const Blocks bl = SplitBlocks(m);
  std::vector<Rational> a(g), b(g);
  for (int i = 0; i < g; ++i) {
    a[i] = Frac(top[i], level);
    b[i] = Frac(bottom[i], level);
  }
  auto quad = [&](const IMatrix& x, const std::vector<Rational>& u,
                  const std::vector<Rational>& v) {
    Rational s = 0;
    for (int i = 0; i < g; ++i) {
      for (int j = 0; j < g; ++j) s += u[i] * Rational(x(i, j)) * v[j];
    }
    return s;
  };
  const IMatrix btd = bl.b.transpose() * bl.d;
  const IMatrix btc = bl.b.transpose() * bl.c;
  const IMatrix atc = bl.a.transpose() * bl.c;
  Rational phi = -Rational(1, 2) * (quad(btd, a, a) - 2 * quad(btc, a, b) +
                                    quad(atc, b, b));
  for (int i = 0; i < g; ++i) {
    Rational lin = 0;
    for (int k = 0; k < g; ++k) {
      lin += Rational(bl.d(i, k)) * a[k] - Rational(bl.c(i, k)) * b[k];
    }
    phi += Rational(1, 2) * lin * Rational(bl.a.row(i).dot(bl.b.row(i)));
  }
  return Reduce01(phi);
}

DeckCheck TrigonalDeckCheck(const TrigonalCurve& curve, int sheet_shift,
                            double quad_tol) {
  const TrigonalPeriodData p0 = TrigonalPeriodMatrix(curve, quad_tol);
  const TrigonalPeriodData p1 =
      TrigonalPeriodMatrix(curve, quad_tol, TrigonalCalibration::Frozen(), sheet_shift);
  // Realified period rows (cycles x 2g), [A; B] stacked.
  auto realify = [](const PeriodData& p) {
    const CMatrix pi = (CMatrix(2 * kGenus, kGenus) << p.a_periods.transpose(),
                        p.b_periods.transpose())
                           .finished();
    Eigen::MatrixXd r(2 * kGenus, 2 * kGenus);
    r << pi.real(), pi.imag();
    return r;
  };
  const Eigen::MatrixXd r0 = realify(p0.periods), r1 = realify(p1.periods);
  const Eigen::MatrixXd nd = r1 * r0.inverse();
  DeckCheck out;
  out.n = nd.array().round().cast<long long>().matrix();
  out.integrality_defect = (nd - out.n.cast<double>()).cwiseAbs().maxCoeff();
  out.symplectic = IsSymplectic(out.n);
  if (out.symplectic) {
    // Rows [A; B] transform by N; tau = B A^{-1} transforms by the swapped
    // blocks.
    const Blocks bl = SplitBlocks(out.n);
    IMatrix m(2 * kGenus, 2 * kGenus);
    m << bl.d, bl.c, bl.b, bl.a;
    const CMatrix mapped = SymplecticActionOnTau(m, p0.periods.tau);
    out.tau_residual = (mapped - p1.periods.tau).norm() / p1.periods.tau.norm();
  } else {
    out.tau_residual = 1e300;
  }
  return out;
}

}  // namespace thetanull
