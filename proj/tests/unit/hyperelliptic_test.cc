#include <doctest.h>

#include <cmath>

#include "thetanull/characteristics.h"
#include "thetanull/hyperelliptic.h"
#include "thetanull/theta_eval.h"

namespace thetanull {
namespace {

double Agm(double a, double b) {
  while (std::abs(a - b) > 1e-16 * a) {
    const double m = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = m;
  }
  return a;
}

TEST_SUITE("hyperelliptic") {
  TEST_CASE("genus-1 period ratio matches the AGM") {
    // y^2 = x (x - 1)(x - 4): tau = i K(k') / K(k) with k^2 = 1/4.
    const PeriodData p = PeriodMatrix(HyperellipticCurve::Genus1(0.0, 1.0, 4.0));
    const double k = 0.5, kp = std::sqrt(1 - k * k);
    const double want = Agm(1, kp) / Agm(1, k);
    CHECK(std::abs(p.tau(0, 0) - Complex(0, want)) < 1e-12);
    CHECK(want == doctest::Approx(1.27926).epsilon(1e-5));
  }

  TEST_CASE("genus-2 period matrix quality") {
    const auto curve = HyperellipticCurve::Genus2(2.0, 3.0, 5.0);
    const PeriodData p = PeriodMatrix(curve);
    CHECK(IsSiegel(p.tau));
    CHECK(p.symmetry_defect < 1e-12);
    CHECK(p.bilinear_residual < 1e-12);
    CHECK(p.intersection_defect < 1e-9);
    // Odd thetanulls vanish identically; the even ones do not in genus 2.
    for (const auto& c : AllHalfCharacteristics(2)) {
      const double v = std::abs(Thetanull(c, p.tau));
      if (IsEven(c)) {
        CHECK(v > 1e-3);
      } else {
        CHECK(v < 1e-13);
      }
    }
  }

  TEST_CASE("eps map and the vanishing pattern") {
    CHECK(VanishingPattern(2).empty());
    REQUIRE(VanishingPattern(3).size() == 1);
    // eps of all 2g + 2 branch points sums to zero.
    for (int g = 1; g <= 3; ++g) {
      std::vector<int> all;
      for (int k = 0; k <= 2 * g + 1; ++k) all.push_back(k);
      CHECK(CharOfSubset(all, g).Mask() == 0);
    }
    CHECK_THROWS_AS(EpsMap(6, 2), ValidationError);
  }

  TEST_CASE("genus-3 vanishing thetanull is the predicted one") {
    const auto curve = HyperellipticCurve::Genus3({2.0, 3.0, 5.0, 7.0, 11.0});
    const PeriodData p = PeriodMatrix(curve);
    const Characteristic v = VanishingPattern(3)[0];
    for (const auto& c : AllHalfCharacteristics(3)) {
      if (!IsEven(c)) continue;
      const double val = std::abs(Thetanull(c, p.tau));
      if (c == v) {
        CHECK(val < 1e-12);
      } else {
        CHECK(val > 1e-4);
      }
    }
  }

  TEST_CASE("Thomae ratios for partitions") {
    const auto curve = HyperellipticCurve::Genus2(Complex(0.3, 0.4), Complex(-2, 1),
                                                  Complex(1.5, -0.7));
    const PeriodData p = PeriodMatrix(curve);
    CHECK(ThomaeRatioCheck(curve, p.tau, {1, 3, 5}, {2, 4, 5}) < 1e-11);
    CHECK(ThomaeRatioCheck(curve, p.tau, {1, 2, 3}, {2, 4, 6}) < 1e-11);
  }

  TEST_CASE("Frobenius identity") {
    const auto curve = HyperellipticCurve::Genus2(2.0, 3.0, 5.0);
    const PeriodData p = PeriodMatrix(curve);
    const auto all = AllHalfCharacteristics(2);
    std::array<Characteristic, 4> b = {all[3], all[6], all[9], Characteristic::Zero(2)};
    b[3] = Compose(Compose(b[0], b[1]), b[2]);
    std::array<CVector, 4> z;
    for (int i = 0; i < 3; ++i) {
      z[i] = CVector(2);
      z[i] << Complex(0.1 * i, 0.05), Complex(-0.2, 0.1 * i);
    }
    z[3] = -(z[0] + z[1] + z[2]);
    CHECK(FrobeniusResidual(curve, p.tau, b, z) < 1e-12);
  }

  TEST_CASE("invalid curves are rejected") {
    CHECK_THROWS_AS(HyperellipticCurve::Genus2(2.0, 2.0, 5.0).Validate(), ValidationError);
    CHECK_THROWS_AS(PeriodMatrix(HyperellipticCurve::Genus2(1.0, 3.0, 5.0)), ValidationError);
    CHECK_THROWS_AS(ParseOrdering("sorted"), ValidationError);
  }
}

}  // namespace
}  // namespace thetanull
