#include <doctest.h>

#include <sstream>

#include "json_io.h"

namespace thetanull {
namespace cli {
namespace {

TEST_SUITE("json_io") {
  TEST_CASE("complex numbers") {
    CHECK(ComplexFromJson(Json::parse("2.5")) == Complex(2.5, 0));
    CHECK(ComplexFromJson(Json::parse("[1, -2]")) == Complex(1, -2));
    CHECK_THROWS_AS(ComplexFromJson(Json::parse("[1, 2, 3]")), ValidationError);
    CHECK_THROWS_AS(ComplexFromJson(Json::parse("\"x\"")), ValidationError);
    CHECK(ToJson(Complex(1, 2)) == Json::parse("[1.0, 2.0]"));
  }

  TEST_CASE("matrices round trip") {
    const Json j = Json::parse(R"({"tau": [[[0,1],[0.5,0]],[[0.5,0],[0,2]]]})");
    const CMatrix m = MatrixFromJson(j);
    CHECK(m(0, 0) == Complex(0, 1));
    CHECK(m(1, 0) == Complex(0.5, 0));
    CHECK(MatrixFromJson(ToJson(m)) == m);
    CHECK_THROWS_AS(MatrixFromJson(Json::parse("[[1,2],[3]]")), ValidationError);
  }

  TEST_CASE("characteristics") {
    const Characteristic c = CharacteristicFromJson(Json::parse(R"({"top":[1,0],"bottom":[1,1]})"), 2);
    CHECK(c.level == 2);
    CHECK(CharacteristicFromJson(Json(c.Mask()), 2) == c);
    CHECK(CharacteristicFromJson(ToJson(c), 2) == c);
    CHECK_THROWS_AS(CharacteristicFromJson(Json(16), 2), ValidationError);
    CHECK_THROWS_AS(CharacteristicFromJson(Json::parse(R"({"top":[1],"bottom":[1]})"), 2),
                    ValidationError);
  }

  TEST_CASE("rationals") {
    CHECK(RationalFromJson(Json(3)) == 3);
    CHECK(RationalFromJson(Json("3/4")) == Rational(3, 4));
    CHECK(RationalFromJson(Json(6.0)) == 6);
    CHECK_THROWS_AS(RationalFromJson(Json(0.5)), ValidationError);
    CHECK_THROWS_AS(RationalFromJson(Json("abc")), ValidationError);
  }

  TEST_CASE("curve forms") {
    const CurveSpec a = CurveFromJson(Json::parse(R"({"a":[2,3,5]})"));
    CHECK(a.kind == CurveSpec::Kind::kHyperelliptic);
    CHECK(a.hyperelliptic.genus == 2);
    // Stored as (nu, mu, lambda, 1, 0) with (a1, a2, a3) = (nu, mu, lambda).
    CHECK(a.hyperelliptic.branch_points[0] == Complex(2));
    CHECK(a.hyperelliptic.branch_points[2] == Complex(5));
    const CurveSpec l = CurveFromJson(Json::parse(R"({"lambda":5,"mu":3,"nu":2})"));
    CHECK(l.hyperelliptic.branch_points == a.hyperelliptic.branch_points);
    const CurveSpec r = CurveFromJson(ToJson(a.hyperelliptic));
    CHECK(r.hyperelliptic.branch_points == a.hyperelliptic.branch_points);
    CHECK(r.hyperelliptic.ordering == a.hyperelliptic.ordering);
    CHECK(CurveFromJson(Json::parse(R"({"a":[2,3,5,7,11]})")).hyperelliptic.genus == 3);
    const CurveSpec t = CurveFromJson(Json::parse(R"({"s":2,"t":[3,1]})"));
    CHECK(t.kind == CurveSpec::Kind::kTrigonal);
    CHECK(t.trigonal.t == Complex(3, 1));
    CHECK(CurveFromJson(Json::parse(R"({"sextic":[0,1,0,0,0,-1,0]})")).kind ==
          CurveSpec::Kind::kSextic);
    CHECK_THROWS_AS(CurveFromJson(Json::parse(R"({"a":[2,2,5]})")), ValidationError);
    CHECK_THROWS_AS(CurveFromJson(Json::parse(R"({"a":[2,3]})")), ValidationError);
    CHECK_THROWS_AS(CurveFromJson(Json::parse(R"({"b":1})")), ValidationError);
  }

  TEST_CASE("inline arguments and residual CSV") {
    CHECK(LoadJsonArgument("[1,2]").size() == 2);
    CHECK_THROWS_AS(LoadJsonArgument("{bad"), ValidationError);
    CHECK_THROWS_AS(LoadJsonArgument("/nonexistent/file.json"), ValidationError);
    std::ostringstream os;
    WriteResidualCsv(Json::parse(R"({"a":1e-3,"b":{"c":[1,2]}})"), os);
    CHECK(os.str() == "name,value\na,0.001\nb.c[0],1\nb.c[1],2\n");
  }
}

}  // namespace
}  // namespace cli
}  // namespace thetanull
