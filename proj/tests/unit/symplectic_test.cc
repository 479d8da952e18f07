#include <doctest.h>

#include <random>

#include "thetanull/numerics.h"
#include "thetanull/symplectic.h"

namespace thetanull {
namespace {

IMatrix RandomSymplectic(std::mt19937* rng, int g, int steps) {
  std::uniform_int_distribution<int> d(-1, 1);
  IMatrix m = IMatrix::Identity(2 * g, 2 * g);
  for (int s = 0; s < steps; ++s) {
    IVector v(2 * g);
    for (int i = 0; i < 2 * g; ++i) v(i) = d(*rng);
    if (v.isZero()) continue;
    m = m * Transvection(v, d(*rng) >= 0 ? 1 : -1);
  }
  return m;
}

TEST_SUITE("symplectic") {
  TEST_CASE("transvections are symplectic and invert") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const IMatrix m = RandomSymplectic(&rng, 3, 6);
      CHECK(IsSymplectic(m));
      CHECK((m * SymplecticInverse(m) == IMatrix::Identity(6, 6)));
    }
  }

  TEST_CASE("symplectic reduction of a unimodular form") {
    std::mt19937 rng(11);
    const IMatrix j = StandardSymplecticForm(2);
    for (int trial = 0; trial < 10; ++trial) {
      // Disguise J by a unimodular change of basis.
      const IMatrix p = RandomSymplectic(&rng, 2, 4);
      IMatrix q = IMatrix::Identity(4, 4);
      q(0, 3) = trial % 3;
      q(2, 1) = -1;
      const IMatrix c = p * q;
      const IMatrix form = c * j * c.transpose();
      const IMatrix basis = SymplecticReduce(form);
      CHECK((basis * form * basis.transpose() == j));
    }
  }

  TEST_CASE("mod-2 decomposition reproduces the map") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const IMatrix l = ModMatrix(RandomSymplectic(&rng, 2, 5), 2);
      IMatrix prod = IMatrix::Identity(4, 4);
      for (const IVector& v : DecomposeMod2(l)) prod = prod * Transvection(v, 1);
      CHECK((ModMatrix(prod, 2) == l));
    }
  }

  TEST_CASE("solving a linear map mod 2") {
    IMatrix x(2, 2), y(2, 2);
    x << 1, 1, 0, 1;
    y << 0, 1, 1, 1;
    const IMatrix l = SolveMapMod2(x, y);
    CHECK((ModMatrix(l * x, 2) == y));
  }

  TEST_CASE("mod-3 routing fixes the requested vectors") {
    IVector x(4), y(4), f(4);
    x << 1, 0, 0, 0;
    y << 1, 2, 0, 1;
    f << 0, 0, 1, 0;
    const auto steps = RouteMod3(x, y, {f});
    IMatrix m = IMatrix::Identity(4, 4);
    for (const F3Step& s : steps) m = Transvection(s.v, s.lambda) * m;
    CHECK((ModVector(m * x, 3) == ModVector(y, 3)));
    CHECK((ModVector(m * f, 3) == f));
  }
}

}  // namespace
}  // namespace thetanull
