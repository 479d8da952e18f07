#ifndef THETANULL_TOOLS_JSON_IO_H_
#define THETANULL_TOOLS_JSON_IO_H_

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetanull/characteristics.h"
#include "thetanull/cyclic3.h"
#include "thetanull/hyperelliptic.h"
#include "thetanull/igusa.h"
#include "thetanull/numerics.h"

namespace thetanull {
namespace cli {

using Json = nlohmann::json;

// Parses `arg` as inline JSON when it starts with '{', '[' or a digit, and
// otherwise as the path of a JSON file.
Json LoadJsonArgument(const std::string& arg);

// Complex numbers are a number or [re, im].
Complex ComplexFromJson(const Json& j);
Json ToJson(const Complex& z);
Json ToJson(const CMatrix& m);
Json ToJson(const CVector& v);
Json ToJson(const IMatrix& m);
Json ToJson(const Characteristic& c);

// A matrix is an array of rows; an object with a "tau" member is unwrapped.
CMatrix MatrixFromJson(const Json& j);
CVector VectorFromJson(const Json& j);

// {"level": n, "top": [...], "bottom": [...]}, {"mask": m} or a bare mask.
Characteristic CharacteristicFromJson(const Json& j, int genus);

// Integer, "p/q" string, or a number with no fractional part.
Rational RationalFromJson(const Json& j);

// Accepted curve forms:
//   {"genus": g, "branchPoints": [...], "ordering": name}
//   {"a": [a1, a2, a3]} for Y^2 = X(X-1)(X-a1)(X-a2)(X-a3)
//   {"a": [a1, ..., a5]} for the genus-3 analogue
//   {"lambda": l, "mu": m, "nu": n}
//   {"s": s, "t": t} for y^3 = x(x-1)(x-s)(x-t)
//   {"sextic": [c6, ..., c0]}, only for classification
struct CurveSpec {
  enum class Kind { kHyperelliptic, kTrigonal, kSextic };
  Kind kind = Kind::kHyperelliptic;
  HyperellipticCurve hyperelliptic;
  TrigonalCurve trigonal;
  std::vector<Json> sextic;
  Json source;
};
CurveSpec CurveFromJson(const Json& j);
Json ToJson(const HyperellipticCurve& curve);

// Flattens a residuals object into "name,value" lines with array entries
// named name[i].
void WriteResidualCsv(const Json& residuals, std::ostream& os);

}  // namespace cli
}  // namespace thetanull

#endif  // THETANULL_TOOLS_JSON_IO_H_
