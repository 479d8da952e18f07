#include <doctest.h>

#include "thetanull/numerics.h"
#include "thetanull/symplectic.h"

namespace thetanull {
namespace {

TEST_SUITE("numerics") {
  TEST_CASE("PosMod returns the least nonnegative residue") {
    CHECK(PosMod(7, 3) == 1);
    CHECK(PosMod(-7, 3) == 2);
    CHECK(PosMod(-6, 3) == 0);
  }

  TEST_CASE("Siegel checks") {
    CMatrix tau(2, 2);
    tau << Complex(0.1, 1.0), Complex(0.2, 0.3), Complex(0.2, 0.3), Complex(0, 2.0);
    CHECK(IsSiegel(tau));
    CHECK(MinEigenImag(tau) == doctest::Approx(0.9169048).epsilon(1e-6));
    tau(1, 1) = Complex(0, -1.0);
    CHECK_FALSE(IsSiegel(tau));
    CHECK_THROWS_AS(MinEigenImag(tau), ValidationError);
    tau(1, 1) = Complex(0, 2.0);
    tau(0, 1) = Complex(0.25, 0.3);
    CHECK_FALSE(IsSiegel(tau, 1e-3));
    CHECK(SymmetryDefect(tau) == doctest::Approx(0.05));
    CHECK(SymmetryDefect(Symmetrize(tau)) == 0.0);
  }

  TEST_CASE("integer inverse and rounding") {
    IMatrix m(2, 2);
    m << 2, 1, 1, 1;
    const IMatrix inv = IntegerInverse(m);
    CHECK((m * inv == IMatrix::Identity(2, 2)));
    Eigen::MatrixXd x(1, 2);
    x << 1.0000001, -2.9999999;
    CHECK(RoundToInteger(x)(0, 1) == -3);
    x(0, 0) = 1.3;
    CHECK_THROWS_AS(RoundToInteger(x), NumericalError);
  }

  TEST_CASE("precision names round trip") {
    for (Precision p : {Precision::kDouble, Precision::kExtended}) {
      CHECK(ParsePrecision(PrecisionName(p)) == p);
    }
    CHECK_THROWS_AS(ParsePrecision("quad"), ValidationError);
  }

  TEST_CASE("standard symplectic form") {
    const IMatrix j = StandardSymplecticForm(3);
    CHECK((j.transpose() == -j));
    CHECK((j * j == -IMatrix::Identity(6, 6)));
    CHECK(IsSymplectic(IMatrix::Identity(6, 6)));
  }
}

}  // namespace
}  // namespace thetanull
