#include <doctest.h>

#include <algorithm>

#include "thetanull/genus2.h"
#include "thetanull/hyperelliptic.h"
#include "thetanull/igusa.h"

namespace thetanull {
namespace {

Genus2Thetas ThetasOf(Complex lambda, Complex mu, Complex nu) {
  return Genus2Thetas::FromTau(PeriodMatrix(HyperellipticCurve::Genus2(lambda, mu, nu)).tau);
}

TEST_SUITE("genus2") {
  TEST_CASE("character table parities") {
    const auto& t = Genus2CharTable();
    REQUIRE(t.size() == 16);
    for (int i = 0; i < 16; ++i) CHECK(IsEven(t[i]) == (i < 10));
  }

  TEST_CASE("Picard round trip and identities") {
    const Complex l(0.3, 0.4), m(-2, 1), n(1.5, -0.7);
    const Genus2Thetas t = ThetasOf(l, m, n);
    const auto r = PicardBranchPoints(t);
    CHECK(std::abs(r[0] - l) < 1e-11);
    CHECK(std::abs(r[1] - m) < 1e-11);
    CHECK(std::abs(r[2] - n) < 1e-11);
    for (double x : FundamentalIdentityResiduals(t)) CHECK(x < 1e-12);
    CHECK(AlphaQuadraticResidual(t) < 1e-12);
    CHECK(AlphaQuadraticPlusSignResidual(t) > 1e-3);
  }

  TEST_CASE("Thomae products against the partition products") {
    const Complex l(0.3, 0.4), m(-2, 1), n(1.5, -0.7);
    const Genus2Thetas t = ThetasOf(l, m, n);
    for (double x : Genus2ThomaeRatioResiduals(l, m, n, t)) CHECK(x < 1e-12);
    // The printed rows 3, 4, 5 differ from the partition products.
    const auto fixed = Genus2ThomaeProducts(l, m, n);
    const auto printed = Genus2ThomaeProductsAsPrinted(l, m, n);
    for (int i = 0; i < 10; ++i) {
      const bool differs = std::abs(fixed[i] - printed[i]) > 1e-9 * std::abs(fixed[i]);
      CHECK(differs == (i >= 2 && i <= 4));
    }
  }

  TEST_CASE("alpha root at +-1 on the a3 = a1 a2 family") {
    const Complex a1(2.3, 0.7), a2(-1.1, 0.4);
    const auto curve = HyperellipticCurve::Genus2(a1 * a2, a2, a1);
    SetPrecision(Precision::kExtended);
    const AlphaQuadratic q = CurveAlphaQuadratic(curve, 1e-28);
    SetPrecision(Precision::kDouble);
    double best = 1;
    for (const Complex& r : q.roots) best = std::min({best, std::abs(r - 1.0), std::abs(r + 1.0)});
    CHECK(best < 1e-12);
  }

  TEST_CASE("Table 1 rows vanish on their factor") {
    const std::vector<std::pair<Complex, Complex>> seeds = {
        {Complex(2.3, 0.2), Complex(3.7, 0.4)},
        {Complex(-1.4, 0.9), Complex(0.6, -1.3)},
        {Complex(1.8, -2.1), Complex(-2.5, 0.3)}};
    for (int k = 0; k < 15; ++k) {
      bool tested = false;
      for (const auto& [a1, a2] : seeds) {
        const Complex f0 = CrossRatioFactors<Complex>(a1, a2, 0.0)[k];
        const Complex f1 = CrossRatioFactors<Complex>(a1, a2, 1.0)[k];
        if (std::abs(f1 - f0) < 1e-3) continue;
        const Complex a3 = -f0 / (f1 - f0);
        const std::vector<Complex> pts = {a1, a2, a3, 0.0, 1.0};
        bool separated = std::abs(a3) < 10;
        for (size_t i = 0; i < pts.size(); ++i) {
          for (size_t j = i + 1; j < pts.size(); ++j) {
            separated = separated && std::abs(pts[i] - pts[j]) > 0.1;
          }
        }
        if (!separated) continue;
        const auto rows = Table1Rows(a1, a2, a3, ThetasOf(a3, a2, a1));
        CHECK(rows[k].factor_normalized < 1e-12);
        CHECK(rows[k].theta_normalized < 1e-9);
        tested = true;
        break;
      }
      CHECK(tested);
    }
  }

  TEST_CASE("V4 tests") {
    const Genus2Thetas on = ThetasOf(6.0, 3.0, 2.0);
    const Genus2Thetas off = ThetasOf(5.0, 3.0, 2.0);
    CHECK(V4ThetaTest(on));
    CHECK_FALSE(V4ThetaTest(off));
  }

  TEST_CASE("exact classification") {
    auto sextic = [](std::vector<long long> c) { return std::vector<Rational>(c.begin(), c.end()); };
    CHECK(ClassifyRosenhain(2, 3, 5).label == AutLabel::kZ2);
    CHECK(ClassifyRosenhain(2, 3, 6).label == AutLabel::kV4);
    CHECK(ClassifyAut(sextic({0, 1, 0, 1, 0, 2, 0})).label == AutLabel::kD8);
    CHECK(ClassifyAut(sextic({1, 0, 0, 1, 0, 0, 2})).label == AutLabel::kD12);
    const Classification s = ClassifyAut(sextic({0, 1, 0, 0, 0, -1, 0}));
    CHECK(s.label == AutLabel::kSpecialPoint);
    CHECK(s.special == "y^2=x^5-x");
  }

  TEST_CASE("floating classification agrees away from the tolerance band") {
    std::vector<Complex> c = {0.0, 1.0, 0.0, 1.0, 0.0, 2.0, 0.0};
    CHECK(ClassifyAut(c).label == AutLabel::kD8);
    c = {1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 3.0};
    CHECK(ClassifyAut(c).label == AutLabel::kD12);
  }

  TEST_CASE("J10 theta formulas agree with each other") {
    const Complex l(2), m(3), n(5);
    const J10Check c = J10ThetaChecks(ThetasOf(l, m, n), IgusaFromSextic(RosenhainSextic<Complex>(l, m, n)));
    CHECK(c.formula_agreement < 1e-10);
    CHECK(c.min_nonzero_theta > 1e-3);
  }
}

}  // namespace
}  // namespace thetanull
