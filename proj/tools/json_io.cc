#include "json_io.h"

#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace thetanull {
namespace cli {

Json LoadJsonArgument(const std::string& arg) {
  THETANULL_CHECK(!arg.empty(), "empty JSON argument");
  const char first = arg[arg.find_first_not_of(" \t\n")];
  try {
    if (first == '{' || first == '[' || first == '-' ||
        std::isdigit(static_cast<unsigned char>(first))) {
      return Json::parse(arg);
    }
    std::ifstream in(arg);
    if (!in) throw ValidationError("cannot open JSON file: " + arg);
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

Complex ComplexFromJson(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw ValidationError("expected a number or [re, im], got " + j.dump());
}

Json ToJson(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json ToJson(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(ToJson(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Json ToJson(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(ToJson(v(i)));
  return out;
}

Json ToJson(const IMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(row);
  }
  return out;
}

Json ToJson(const Characteristic& c) {
  return Json{{"level", c.level}, {"top", c.top}, {"bottom", c.bottom}};
}

CMatrix MatrixFromJson(const Json& j) {
  if (j.is_object()) {
    THETANULL_CHECK(j.contains("tau"), "matrix object needs a \"tau\" member");
    return MatrixFromJson(j.at("tau"));
  }
  THETANULL_CHECK(j.is_array() && !j.empty(), "matrix must be an array of rows");
  const Eigen::Index n = static_cast<Eigen::Index>(j.size());
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[i];
    THETANULL_CHECK(row.is_array() && static_cast<Eigen::Index>(row.size()) == n,
                    "matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = ComplexFromJson(row[k]);
  }
  return m;
}

CVector VectorFromJson(const Json& j) {
  THETANULL_CHECK(j.is_array(), "vector must be an array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(i) = ComplexFromJson(j[i]);
  return v;
}

Characteristic CharacteristicFromJson(const Json& j, int genus) {
  if (j.is_number_integer()) {
    const long long mask = j.get<long long>();
    THETANULL_CHECK(mask >= 0 && mask < (1LL << (2 * genus)),
                    "characteristic mask out of range");
    return Characteristic::FromMask(genus, static_cast<std::uint32_t>(mask));
  }
  THETANULL_CHECK(j.is_object(), "characteristic must be an object or a mask");
  if (j.contains("mask")) return CharacteristicFromJson(j.at("mask"), genus);
  const int level = j.value("level", 2);
  const auto top = j.at("top").get<std::vector<int>>();
  const auto bottom = j.at("bottom").get<std::vector<int>>();
  THETANULL_CHECK(static_cast<int>(top.size()) == genus &&
                      static_cast<int>(bottom.size()) == genus,
                  "characteristic length does not match the genus");
  return Characteristic(level, top, bottom);
}

Rational RationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) {
    const double x = j.get<double>();
    THETANULL_CHECK(std::floor(x) == x && std::abs(x) < 9e15,
                    "exact mode needs integers or \"p/q\" strings");
    return Rational(static_cast<long long>(x));
  }
  if (j.is_string()) {
    try {
      const Rational q(j.get<std::string>());
      return q;
    } catch (const std::exception&) {
      throw ValidationError("not a rational number: " + j.dump());
    }
  }
  throw ValidationError("exact mode needs integers or \"p/q\" strings");
}

CurveSpec CurveFromJson(const Json& j) {
  THETANULL_CHECK(j.is_object(), "curve must be a JSON object");
  CurveSpec spec;
  spec.source = j;
  if (j.contains("s") || j.contains("t")) {
    spec.kind = CurveSpec::Kind::kTrigonal;
    spec.trigonal = TrigonalCurve(ComplexFromJson(j.at("s")), ComplexFromJson(j.at("t")));
    return spec;
  }
  if (j.contains("sextic")) {
    spec.kind = CurveSpec::Kind::kSextic;
    THETANULL_CHECK(j.at("sextic").is_array() && j.at("sextic").size() == 7,
                    "sextic needs seven coefficients x^6..x^0");
    for (const Json& c : j.at("sextic")) spec.sextic.push_back(c);
    return spec;
  }
  if (j.contains("a")) {
    const Json& a = j.at("a");
    THETANULL_CHECK(a.is_array(), "\"a\" must be an array");
    if (a.size() == 3) {
      // (a1, a2, a3) = (nu, mu, lambda).
      spec.hyperelliptic = HyperellipticCurve::Genus2(
          ComplexFromJson(a[2]), ComplexFromJson(a[1]), ComplexFromJson(a[0]));
    } else if (a.size() == 5) {
      std::array<Complex, 5> v;
      for (int i = 0; i < 5; ++i) v[i] = ComplexFromJson(a[i]);
      spec.hyperelliptic = HyperellipticCurve::Genus3(v);
    } else {
      throw ValidationError("\"a\" needs 3 (genus 2) or 5 (genus 3) entries");
    }
  } else if (j.contains("lambda")) {
    spec.hyperelliptic = HyperellipticCurve::Genus2(
        ComplexFromJson(j.at("lambda")), ComplexFromJson(j.at("mu")),
        ComplexFromJson(j.at("nu")));
  } else if (j.contains("branchPoints")) {
    HyperellipticCurve c;
    c.genus = j.at("genus").get<int>();
    for (const Json& p : j.at("branchPoints")) c.branch_points.push_back(ComplexFromJson(p));
    const std::string fallback =
        c.genus == 1 ? "genus1" : (c.genus == 3 ? "rosenhain-g3" : "rosenhain-g2");
    c.ordering = ParseOrdering(j.value("ordering", fallback));
    spec.hyperelliptic = c;
  } else {
    throw ValidationError("unrecognized curve: " + j.dump());
  }
  spec.hyperelliptic.Validate();
  return spec;
}

Json ToJson(const HyperellipticCurve& curve) {
  Json pts = Json::array();
  for (const Complex& p : curve.branch_points) pts.push_back(ToJson(p));
  return Json{{"genus", curve.genus},
              {"branchPoints", pts},
              {"ordering", OrderingName(curve.ordering)}};
}

void WriteResidualCsv(const Json& residuals, std::ostream& os) {
  os << "name,value\n";
  std::function<void(const std::string&, const Json&)> walk =
      [&](const std::string& name, const Json& v) {
        if (v.is_object()) {
          for (auto it = v.begin(); it != v.end(); ++it) {
            walk(name.empty() ? it.key() : name + "." + it.key(), it.value());
          }
        } else if (v.is_array()) {
          for (size_t i = 0; i < v.size(); ++i) {
            walk(name + "[" + std::to_string(i) + "]", v[i]);
          }
        } else if (v.is_number() || v.is_boolean()) {
          os << name << "," << v.dump() << "\n";
        }
      };
  walk("", residuals);
}

}  // namespace cli
}  // namespace thetanull
