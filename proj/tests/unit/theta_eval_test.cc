#include <doctest.h>

#include <cmath>
#include <random>

#include "thetanull/characteristics.h"
#include "thetanull/numerics.h"
#include "thetanull/theta_eval.h"

namespace thetanull {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Plain cube sum of the defining series.
Complex CubeSum(const Characteristic& c, const CVector& z, const CMatrix& tau,
                int radius) {
  const int g = c.genus;
  Complex sum = 0;
  std::vector<int> u(g, -radius);
  while (true) {
    Complex q = 0;
    for (int i = 0; i < g; ++i) {
      const double vi = u[i] + c.TopValue(i);
      for (int j = 0; j < g; ++j) q += vi * tau(i, j) * (u[j] + c.TopValue(j));
      q += 2.0 * vi * (z(i) + c.BottomValue(i));
    }
    sum += std::exp(Complex(0, kPi) * q);
    int k = 0;
    while (k < g && u[k] == radius) u[k++] = -radius;
    if (k == g) break;
    ++u[k];
  }
  return sum;
}

CMatrix SampleTau(int g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> d(-0.4, 0.4);
  Eigen::MatrixXd b(g, g), x(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) b(i, j) = d(rng);
    for (int j = 0; j <= i; ++j) x(i, j) = x(j, i) = d(rng);
  }
  const Eigen::MatrixXd y = 0.8 * Eigen::MatrixXd::Identity(g, g) + b * b.transpose();
  CMatrix tau(g, g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) tau(i, j) = Complex(x(i, j), y(i, j));
  }
  return tau;
}

TEST_SUITE("theta_eval") {
  TEST_CASE("agreement with a plain cube sum") {
    for (int g = 1; g <= 3; ++g) {
      const CMatrix tau = SampleTau(g, 10 + g);
      CVector z(g);
      for (int i = 0; i < g; ++i) z(i) = Complex(0.1 * (i + 1), -0.05 * i);
      for (std::uint32_t m = 0; m < (1u << (2 * g)); m += 3) {
        const Characteristic c = Characteristic::FromMask(g, m);
        const Complex want = CubeSum(c, z, tau, g == 3 ? 8 : 15);
        CHECK(std::abs(ThetaChar(c, z, tau) - want) < 1e-11);
      }
    }
  }

  TEST_CASE("Jacobi quartic identity in genus 1") {
    CMatrix tau(1, 1);
    tau(0, 0) = Complex(0.3, 0.9);
    const Complex t00 = Thetanull(Characteristic::FromMask(1, 0), tau);
    const Complex t01 = Thetanull(Characteristic::FromMask(1, 2), tau);
    const Complex t10 = Thetanull(Characteristic::FromMask(1, 1), tau);
    CHECK(std::abs(std::pow(t00, 4) - std::pow(t01, 4) - std::pow(t10, 4)) < 1e-12);
    CHECK(std::abs(Thetanull(Characteristic::FromMask(1, 3), tau)) < 1e-14);
  }

  TEST_CASE("rational characteristics follow the bottom shift phase") {
    const CMatrix tau = SampleTau(2, 4);
    CVector z(2);
    z << Complex(0.2, 0.1), Complex(-0.1, 0.05);
    const Complex base = ThetaRational({1, 2}, {5, 0}, 6, z, tau);
    // b -> b + e_1 multiplies by exp(2 pi i a_1).
    const Complex shifted = ThetaRational({1, 2}, {11, 0}, 6, z, tau);
    CHECK(std::abs(shifted - std::exp(Complex(0, 2 * kPi / 6)) * base) < 1e-12);
  }

  TEST_CASE("extended precision agrees with double") {
    const CMatrix tau = SampleTau(3, 8);
    const Characteristic c = Characteristic::FromMask(3, 9);
    const Complex d = Thetanull(c, tau);
    SetPrecision(Precision::kExtended);
    const Complex e = Thetanull(c, tau, 1e-25);
    SetPrecision(Precision::kDouble);
    CHECK(std::abs(d - e) < 1e-12);
  }

  TEST_CASE("truncation radius grows with the tolerance demand") {
    CHECK(TruncationRadius(2, 1.0, 0.0, 1e-16) > TruncationRadius(2, 1.0, 0.0, 1e-8));
    CHECK(EllipsoidRadius(3, 0.5, 0.0, 1e-20) > EllipsoidRadius(3, 0.5, 0.0, 1e-10));
  }

  TEST_CASE("quartic identities hold on arbitrary period matrices") {
    for (int g = 2; g <= 3; ++g) {
      const CMatrix tau = SampleTau(g, 20 + g);
      const auto all = AllHalfCharacteristics(g);
      for (const auto& a : all) {
        if (!IsEven(a)) continue;
        for (std::uint32_t hm = 1; hm < all.size(); hm += (g == 2 ? 1 : 7)) {
          const QuarticResult r = QuarticIdentityResiduals(tau, a, all[hm]);
          CHECK(r.candidates == QuarticCandidateCountFormula(g));
          CHECK(r.residual1 / r.scale < 1e-12);
          CHECK(r.residual2 / r.scale < 1e-12);
        }
      }
    }
  }

  TEST_CASE("candidate count closed form") {
    CHECK(QuarticCandidateCountFormula(2) == 6);
    CHECK(QuarticCandidateCountFormula(3) == 20);
  }

  TEST_CASE("invalid input is rejected") {
    CMatrix tau(2, 2);
    tau << Complex(0, 1), 0.0, 0.0, Complex(0, -1);
    CHECK_THROWS_AS(Thetanull(Characteristic::Zero(2), tau), ValidationError);
  }
}

}  // namespace
}  // namespace thetanull
