// Command-line front end. Every command prints one JSON object on stdout
// and diagnostics on stderr. Exit codes: 0 success, 2 bad input or usage,
// 3 numerical failure or failed verification.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance_suite.h"
#include "json_io.h"
#include "thetanull/characteristics.h"
#include "thetanull/cyclic3.h"
#include "thetanull/genus2.h"
#include "thetanull/genus3_hyper.h"
#include "thetanull/hyperelliptic.h"
#include "thetanull/igusa.h"
#include "thetanull/numerics.h"
#include "thetanull/theta_eval.h"

namespace thetanull {
namespace cli {
namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct GlobalOptions {
  double tol = kDefaultThetaTol;
  double quad_tol = 1e-14;
  std::string precision = "double";
  bool exact = false;
  std::uint64_t seed = acceptance::SuiteOptions().seed;
  std::string plot;
};

double MaxOf(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

template <size_t N>
std::vector<double> ToVector(const std::array<double, N>& a) {
  return std::vector<double>(a.begin(), a.end());
}

// Branch points (nu, mu, lambda) of a curve in Rosenhain form.
std::array<Complex, 3> RosenhainTriple(const HyperellipticCurve& c) {
  THETANULL_CHECK(c.genus == 2 && c.ordering == BranchOrdering::kRosenhainGenus2 &&
                      c.branch_points[3] == 1.0 && c.branch_points[4] == 0.0,
                  "command needs a genus-2 curve in Rosenhain form "
                  "(ordering rosenhain-g2 ending in 1, 0)");
  return {c.branch_points[0], c.branch_points[1], c.branch_points[2]};
}

// Coefficients x^6..x^0 of the product of (x - r) over the roots; a quintic
// gets a zero leading coefficient.
template <typename F>
std::vector<F> SexticFromRoots(const std::vector<F>& roots) {
  THETANULL_CHECK(roots.size() == 5 || roots.size() == 6,
                  "a genus-2 curve needs 5 or 6 finite branch points");
  std::vector<F> poly = {F(1)};  // highest degree first
  for (const F& r : roots) {
    std::vector<F> next(poly.size() + 1, F(0));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= r * poly[i];
    }
    poly = next;
  }
  while (poly.size() < 7) poly.insert(poly.begin(), F(0));
  return poly;
}

std::vector<Rational> ExactSextic(const CurveSpec& spec) {
  const Json& s = spec.source;
  std::vector<Rational> roots;
  if (spec.kind == CurveSpec::Kind::kSextic) {
    std::vector<Rational> c;
    for (const Json& x : spec.sextic) c.push_back(RationalFromJson(x));
    return c;
  }
  if (s.contains("a")) {
    THETANULL_CHECK(s.at("a").size() == 3, "exact classification needs genus 2");
    for (const Json& x : s.at("a")) roots.push_back(RationalFromJson(x));
    roots.push_back(Rational(0));
    roots.push_back(Rational(1));
  } else if (s.contains("lambda")) {
    for (const char* k : {"lambda", "mu", "nu"}) roots.push_back(RationalFromJson(s.at(k)));
    roots.push_back(Rational(0));
    roots.push_back(Rational(1));
  } else if (s.contains("branchPoints")) {
    for (const Json& x : s.at("branchPoints")) roots.push_back(RationalFromJson(x));
  } else {
    throw ValidationError("exact classification needs a rational curve");
  }
  return SexticFromRoots(roots);
}

Json LocusJson(const LocusResiduals& r) {
  return Json{{"l2", r.l2}, {"d8", r.d8}, {"d12", {r.d12[0], r.d12[1]}}};
}

Json RunTheta(const GlobalOptions& g, const std::string& action,
              const std::string& tau_arg, const std::string& char_arg,
              const std::string& z_arg) {
  const CMatrix tau = MatrixFromJson(LoadJsonArgument(tau_arg));
  const int genus = static_cast<int>(tau.rows());
  const double lambda = MinEigenImag(tau);
  Json out{{"genus", genus}};
  Json res{{"tau_symmetry_defect", SymmetryDefect(tau)},
           {"min_eig_im_tau", lambda},
           {"truncation_tol", g.tol}};
  if (action == "nulls") {
    Json list = Json::array();
    double odd_max = 0;
    const auto chars = AllHalfCharacteristics(genus);
    const auto values = Thetanulls(chars, tau, g.tol);
    for (size_t i = 0; i < chars.size(); ++i) {
      list.push_back(Json{{"mask", chars[i].Mask()},
                          {"char", ToJson(chars[i])},
                          {"parity", IsEven(chars[i]) ? "even" : "odd"},
                          {"value", ToJson(values[i])}});
      if (!IsEven(chars[i])) odd_max = std::max(odd_max, std::abs(values[i]));
    }
    out["thetanulls"] = list;
    res["odd_thetanull_max"] = odd_max;
  } else {
    const Characteristic c = char_arg.empty()
                                 ? Characteristic::Zero(genus)
                                 : CharacteristicFromJson(LoadJsonArgument(char_arg), genus);
    const CVector z = z_arg.empty() ? CVector(CVector::Zero(genus))
                                    : VectorFromJson(LoadJsonArgument(z_arg));
    THETANULL_CHECK(z.size() == genus, "z length does not match the genus");
    const Complex value = ThetaChar(c, z, tau, g.tol);
    out["char"] = ToJson(c);
    out["z"] = ToJson(z);
    out["value"] = ToJson(value);
    if (c.IsHalf()) {
      const Complex minus = ThetaChar(c, -z, tau, g.tol);
      res["parity"] = std::abs(minus - static_cast<double>(ParitySign(c)) * value);
    }
  }
  out["residuals"] = res;
  return out;
}

Json PeriodResiduals(const PeriodData& p) {
  return Json{{"quadrature_error", p.quadrature_error},
              {"symmetry_defect", p.symmetry_defect},
              {"bilinear_residual", p.bilinear_residual},
              {"intersection_defect", p.intersection_defect}};
}

Json RunPeriods(const GlobalOptions& g, const std::string& curve_arg) {
  const CurveSpec spec = CurveFromJson(LoadJsonArgument(curve_arg));
  Json out;
  if (spec.kind == CurveSpec::Kind::kTrigonal) {
    const TrigonalPeriodData d = TrigonalPeriodMatrix(spec.trigonal, g.quad_tol);
    out["curve"] = Json{{"s", ToJson(spec.trigonal.s)}, {"t", ToJson(spec.trigonal.t)}};
    out["tau"] = ToJson(d.periods.tau);
    out["a_periods"] = ToJson(d.periods.a_periods);
    out["b_periods"] = ToJson(d.periods.b_periods);
    out["calibration"] = d.calibration.ToString();
    out["residuals"] = PeriodResiduals(d.periods);
    out["residuals"]["riemann_vanishing"] = d.riemann_vanishing;
    return out;
  }
  THETANULL_CHECK(spec.kind == CurveSpec::Kind::kHyperelliptic,
                  "periods needs a hyperelliptic or trigonal curve");
  const PeriodData p = PeriodMatrix(spec.hyperelliptic, g.quad_tol);
  out["curve"] = ToJson(spec.hyperelliptic);
  out["tau"] = ToJson(p.tau);
  out["a_periods"] = ToJson(p.a_periods);
  out["b_periods"] = ToJson(p.b_periods);
  out["residuals"] = PeriodResiduals(p);
  return out;
}

Json RunRecover(const GlobalOptions& g, const std::string& tau_arg, int genus) {
  const CMatrix tau = MatrixFromJson(LoadJsonArgument(tau_arg));
  THETANULL_CHECK(tau.rows() == genus, "tau size does not match --genus");
  MinEigenImag(tau);
  Json out;
  if (genus == 2) {
    const Genus2Thetas t = Genus2Thetas::FromTau(tau, g.tol);
    const auto l = PicardBranchPoints(t);
    Json th = Json::array();
    for (const Complex& v : t.values) th.push_back(ToJson(v));
    out = Json{{"lambda", ToJson(l[0])}, {"mu", ToJson(l[1])}, {"nu", ToJson(l[2])},
               {"thetanulls", th}};
    out["residuals"] = Json{
        {"fundamental_identities", ToVector(FundamentalIdentityResiduals(t))},
        {"alpha_quadratic", AlphaQuadraticResidual(t)}};
    return out;
  }
  THETANULL_CHECK(genus == 3, "--genus must be 2 or 3");
  const Genus3Thetas t = Genus3Thetas::FromTau(tau, g.tol);
  const auto a = BranchFromThetasG3(t);
  Json av = Json::array();
  for (const Complex& v : a) av.push_back(ToJson(v));
  double largest = 0;
  for (const Complex& v : t.values) largest = std::max(largest, std::abs(v));
  out = Json{{"a", av}};
  out["residuals"] = Json{
      {"theta12_normalized", std::abs(t(kGenus3VanishingIndex)) / largest},
      {"ratio_alternatives_spread", PossibleRatiosSpread(t)}};
  return out;
}

Json RunClassify(const GlobalOptions& g, const std::string& curve_arg) {
  const CurveSpec spec = CurveFromJson(LoadJsonArgument(curve_arg));
  THETANULL_CHECK(spec.kind != CurveSpec::Kind::kTrigonal,
                  "classify needs a genus-2 curve");
  Classification c;
  IgusaInvariantsC jc;
  Json extra;
  if (g.exact) {
    const std::vector<Rational> sextic = ExactSextic(spec);
    c = ClassifyAut(sextic);
    const IgusaInvariants j = IgusaFromSextic(sextic);
    jc = ToComplex(j);
    const ExactLocus e = LocusTestsExact(j);
    extra = Json{{"l2", e.l2}, {"d8", e.d8}, {"d12", e.d12}};
  } else {
    std::vector<Complex> sextic;
    if (spec.kind == CurveSpec::Kind::kSextic) {
      for (const Json& x : spec.sextic) sextic.push_back(ComplexFromJson(x));
    } else {
      THETANULL_CHECK(spec.hyperelliptic.genus == 2, "classify needs a genus-2 curve");
      sextic = SexticFromRoots(spec.hyperelliptic.branch_points);
    }
    c = ClassifyAut(sextic);
    jc = IgusaFromSextic(sextic);
  }
  Json out{{"group", AutLabelName(c.label)}, {"exact", c.exact}};
  if (!c.special.empty()) out["special"] = c.special;
  out["invariants"] = Json{{"J2", ToJson(jc.j2)}, {"J4", ToJson(jc.j4)},
                           {"J6", ToJson(jc.j6)}, {"J10", ToJson(jc.j10)}};
  out["residuals"] = LocusJson(LocusTests(jc));
  if (g.exact) out["exact_vanishing"] = extra;
  return out;
}

Json RunTable1(const GlobalOptions& g, const std::string& curve_arg) {
  const CurveSpec spec = CurveFromJson(LoadJsonArgument(curve_arg));
  const auto a = RosenhainTriple(spec.hyperelliptic);
  const Genus2Thetas t =
      Genus2Thetas::FromTau(PeriodMatrix(spec.hyperelliptic, g.quad_tol).tau, g.tol);
  const auto rows = Table1Rows(a[0], a[1], a[2], t);
  Json list = Json::array();
  std::vector<double> thetas;
  for (int k = 0; k < 15; ++k) {
    list.push_back(Json{{"row", k + 1},
                        {"factor", ToJson(rows[k].factor)},
                        {"factor_normalized", rows[k].factor_normalized},
                        {"theta_expression", ToJson(rows[k].theta_value)},
                        {"theta_normalized", rows[k].theta_normalized}});
    thetas.push_back(rows[k].theta_normalized);
  }
  Json out{{"a1", ToJson(a[0])}, {"a2", ToJson(a[1])}, {"a3", ToJson(a[2])}, {"rows", list}};
  out["v4"] = V4ThetaTest(t);
  out["residuals"] = Json{{"theta_normalized", thetas},
                          {"v4_product", V4ThetaProduct(t)}};
  return out;
}

Json RunThomae(const GlobalOptions& g, const std::string& curve_arg, int genus) {
  const CurveSpec spec = CurveFromJson(LoadJsonArgument(curve_arg));
  THETANULL_CHECK(spec.kind == CurveSpec::Kind::kHyperelliptic,
                  "thomae needs a hyperelliptic curve");
  const HyperellipticCurve& curve = spec.hyperelliptic;
  THETANULL_CHECK(genus == 0 || genus == curve.genus, "--genus does not match the curve");
  const CMatrix tau = PeriodMatrix(curve, g.quad_tol).tau;
  std::vector<double> ratios;
  if (curve.genus == 2) {
    const auto a = RosenhainTriple(curve);
    ratios = ToVector(Genus2ThomaeRatioResiduals(a[2], a[1], a[0],
                                                 Genus2Thetas::FromTau(tau, g.tol)));
  } else {
    THETANULL_CHECK(curve.genus == 3 && curve.ordering == BranchOrdering::kRosenhainGenus3,
                    "thomae needs a genus-2 or genus-3 curve in the standard form");
    ratios = Thomae36RatioResiduals(curve, Genus3Thetas::FromTau(tau, g.tol));
  }
  Json out{{"genus", curve.genus}, {"reference_theta", 1}};
  out["residuals"] = Json{{"ratios", ratios}, {"max", MaxOf(ratios)}};
  return out;
}

Json RunGoepel(int genus, int rank, bool count_only) {
  THETANULL_CHECK(genus >= 1 && genus <= 4, "--genus must be between 1 and 4");
  THETANULL_CHECK(rank >= 0 && rank <= genus, "--rank must be between 0 and the genus");
  const auto groups = EnumerateGoepelGroups(genus, rank);
  const long long count = static_cast<long long>(groups.size());
  const long long formula = GoepelGroupCountFormula(genus, rank);
  Json out{{"count", count}, {"formula", formula}};
  Json res{{"count_minus_formula", count - formula}};
  if (!count_only) {
    const SystemCounts want = GoepelSystemCountFormula(genus, rank);
    Json list = Json::array();
    long long mismatched = 0;
    for (const GoepelGroup& group : groups) {
      Json elements = Json::array();
      for (const Characteristic& c : group.elements) elements.push_back(c.ToString());
      const SystemCounts s = CountSystems(GoepelSystems(group));
      mismatched += (s.all_even != want.all_even || s.all_odd != want.all_odd ||
                     s.mixed != want.mixed);
      list.push_back(Json{{"elements", elements},
                          {"systems", {{"all_even", s.all_even},
                                       {"all_odd", s.all_odd},
                                       {"mixed", s.mixed}}}});
    }
    out["groups"] = list;
    out["system_formula"] = Json{
        {"all_even", want.all_even}, {"all_odd", want.all_odd}, {"mixed", want.mixed}};
    res["groups_with_mismatched_systems"] = mismatched;
  }
  out["residuals"] = res;
  return out;
}

Json CalibrationJson(const TrigonalCalibration& c) {
  return Json{{"rule", c.ToString()}, {"p0", c.p0_word}, {"w", c.w_word}};
}

Json RunTrigonal(const GlobalOptions& g, const std::string& s_arg,
                 const std::string& t_arg, bool recover, bool calibrate) {
  const TrigonalCurve curve(ComplexFromJson(LoadJsonArgument(s_arg)),
                            ComplexFromJson(LoadJsonArgument(t_arg)));
  Json out{{"s", ToJson(curve.s)}, {"t", ToJson(curve.t)}};
  if (calibrate) {
    const CalibrationResult r = CalibrateTrigonal(curve, g.quad_tol);
    out["calibration"] = CalibrationJson(r.best);
    Json cands = Json::array(), rejected = Json::array();
    for (const auto& c : r.candidates) cands.push_back(CalibrationJson(c));
    for (const auto& c : r.rejected) rejected.push_back(CalibrationJson(c));
    out["candidates"] = cands;
    out["rejected"] = rejected;
    out["matches_frozen"] = r.best == TrigonalCalibration::Frozen();
    out["residuals"] = Json{{"best_error", r.best_error}};
    return out;
  }
  const TrigonalPeriodData d = TrigonalPeriodMatrix(curve, g.quad_tol);
  const Level6Thetas th = Level6ThetasFromTau(d.periods.tau, g.tol);
  Json thetas = Json::array();
  for (const Complex& v : th.theta) thetas.push_back(ToJson(v));
  Json chars = Json::array();
  for (const Characteristic& c : Level6Characteristics()) chars.push_back(ToJson(c));
  Json word = Json::array();
  for (const TransvectionStep& step : d.word) {
    word.push_back(Json{{"v", std::vector<long long>(step.v.data(), step.v.data() + step.v.size())},
                        {"power", step.power}});
  }
  out["tau"] = ToJson(d.periods.tau);
  out["thetanulls"] = thetas;
  out["characteristics"] = chars;
  out["calibration"] = CalibrationJson(d.calibration);
  out["word"] = word;
  out["frame_change"] = ToJson(CalibrationTransform(d));
  Json res{{"c6_relation", C6RelationResidual(th)},
           {"quadrature_error", d.periods.quadrature_error},
           {"bilinear_residual", d.periods.bilinear_residual},
           {"riemann_vanishing", d.riemann_vanishing}};
  if (recover) {
    const auto [s, t] = BranchFromTrigonal(th);
    out["recovered"] = Json{{"s", ToJson(s)}, {"t", ToJson(t)}};
    res["round_trip"] = Json{{"s", std::abs(s - curve.s) / std::abs(curve.s)},
                             {"t", std::abs(t - curve.t) / std::abs(curve.t)}};
  }
  out["residuals"] = res;
  return out;
}

Json RunVerifyAll(const GlobalOptions& g, const std::vector<int>& only,
                  bool* all_passed) {
  acceptance::SuiteOptions options;
  options.seed = g.seed;
  options.theta_tol = g.tol;
  options.quad_tol = g.quad_tol;
  options.only = only;
  Json list = Json::array();
  Json res = Json::object();
  int failed = 0;
  for (const auto& r : acceptance::RunSuite(options)) {
    std::cerr << acceptance::FormatResult(r) << std::endl;
    Json metrics = Json::object();
    for (const auto& [name, value] : r.metrics) metrics[name] = value;
    list.push_back(Json{{"id", r.id},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"summary", r.summary},
                        {"seconds", r.seconds},
                        {"metrics", metrics}});
    res[std::to_string(r.id)] = metrics;
    failed += r.passed ? 0 : 1;
  }
  *all_passed = failed == 0;
  return Json{{"seed", g.seed},
              {"criteria", list},
              {"failed", failed},
              {"residuals", res}};
}

int Main(int argc, char** argv) {
  CLI::App app{"Theta functions, thetanulls and branch points of genus 2 and 3 curves"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--tol", g.tol, "theta truncation tolerance")->check(CLI::PositiveNumber);
  app.add_option("--quad-tol", g.quad_tol, "period quadrature tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", g.precision, "working precision")
      ->check(CLI::IsMember({"double", "extended"}));
  app.add_flag("--exact", g.exact, "exact rational arithmetic where supported");
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--plot", g.plot, "write the residuals as CSV to this file");

  std::string action = "eval", tau_arg, char_arg, z_arg, curve_arg, s_arg, t_arg;
  int genus = 0, rank = 0;
  bool count_only = false, recover = false, calibrate = false;
  std::vector<int> only;

  auto* theta = app.add_subcommand("theta", "evaluate theta with characteristic");
  theta->add_option("action", action, "eval (default) or nulls")
      ->check(CLI::IsMember({"eval", "nulls"}));
  theta->add_option("--tau", tau_arg, "period matrix (JSON or file)")->required();
  theta->add_option("--char", char_arg, "characteristic (JSON or file)");
  theta->add_option("--z", z_arg, "argument vector (JSON or file)");

  auto* periods = app.add_subcommand("periods", "period matrix of a curve");
  periods->add_option("--curve", curve_arg, "curve (JSON or file)")->required();

  auto* recover_cmd = app.add_subcommand("recover", "branch points from a period matrix");
  recover_cmd->add_option("--tau", tau_arg, "period matrix (JSON or file)")->required();
  recover_cmd->add_option("--genus", genus, "2 or 3")->required()->check(CLI::IsMember({2, 3}));

  auto* classify = app.add_subcommand("classify", "automorphism group of a genus-2 curve");
  classify->add_option("--curve", curve_arg, "curve (JSON or file)")->required();

  auto* table1 = app.add_subcommand("table1", "cross-ratio factors and theta expressions");
  table1->add_option("--curve", curve_arg, "curve (JSON or file)")->required();

  auto* thomae = app.add_subcommand("thomae", "Thomae ratio residuals");
  thomae->add_option("--curve", curve_arg, "curve (JSON or file)")->required();
  thomae->add_option("--genus", genus, "2 or 3")->check(CLI::IsMember({2, 3}));

  auto* goepel = app.add_subcommand("goepel", "Goepel groups and systems");
  goepel->add_option("--genus", genus, "genus")->required();
  goepel->add_option("--rank", rank, "rank")->required();
  goepel->add_flag("--count", count_only, "only count the groups");

  auto* trigonal = app.add_subcommand("trigonal", "y^3 = x(x-1)(x-s)(x-t)");
  trigonal->add_option("--s", s_arg, "s (number or [re, im])")->required();
  trigonal->add_option("--t", t_arg, "t (number or [re, im])")->required();
  trigonal->add_flag("--recover", recover, "recover (s, t) from the thetanulls");
  trigonal->add_flag("--calibrate", calibrate, "run the frame calibration on this curve");

  auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
  verify->add_option("--criterion", only, "criteria to run (default all)")
      ->check(CLI::Range(1, acceptance::kNumCriteria));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    SetPrecision(ParsePrecision(g.precision));
    Json out;
    bool passed = true;
    if (theta->parsed()) {
      out = RunTheta(g, action, tau_arg, char_arg, z_arg);
    } else if (periods->parsed()) {
      out = RunPeriods(g, curve_arg);
    } else if (recover_cmd->parsed()) {
      out = RunRecover(g, tau_arg, genus);
    } else if (classify->parsed()) {
      out = RunClassify(g, curve_arg);
    } else if (table1->parsed()) {
      out = RunTable1(g, curve_arg);
    } else if (thomae->parsed()) {
      out = RunThomae(g, curve_arg, genus);
    } else if (goepel->parsed()) {
      out = RunGoepel(genus, rank, count_only);
    } else if (trigonal->parsed()) {
      out = RunTrigonal(g, s_arg, t_arg, recover, calibrate);
    } else if (verify->parsed()) {
      out = RunVerifyAll(g, only, &passed);
    }
    if (!g.plot.empty()) {
      std::ofstream csv(g.plot);
      if (!csv) throw ValidationError("cannot write " + g.plot);
      WriteResidualCsv(out.value("residuals", Json::object()), csv);
    }
    std::cout << out.dump(2) << std::endl;
    return passed ? EXIT_SUCCESS : kExitNumerical;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitValidation;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << std::endl;
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << std::endl;
    return kExitNumerical;
  }
}

}  // namespace
}  // namespace cli
}  // namespace thetanull

int main(int argc, char** argv) { return thetanull::cli::Main(argc, argv); }
