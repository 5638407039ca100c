#include <doctest.h>

#include <random>

#include "plasmodium/rng.hpp"

using namespace plasmodium;

TEST_CASE("engine is the standard mt19937_64") {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  std::mt19937_64 reference;
  reference.discard(9999);
  CHECK(reference() == 9981545732273789042ULL);

  Rng a(5489);
  std::mt19937_64 b(5489);
  const double u = a.unit();
  CHECK(u == static_cast<double>(b() >> 11) * 0x1.0p-53);
}

TEST_CASE("derived draws stay in range and count one draw each") {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const auto k = rng.uniform_int(1, 20);
    REQUIRE(k >= 1);
    REQUIRE(k <= 20);
    const double a = rng.angle();
    REQUIRE(a >= 0.0);
    REQUIRE(a < 360.0);
    (void)rng.coin();
  }
  CHECK(rng.draw_count() == 30000);
}

TEST_CASE("uniform_int covers its range roughly evenly") {
  Rng rng(11);
  int hist[20] = {};
  for (int i = 0; i < 200000; ++i) ++hist[rng.uniform_int(1, 20) - 1];
  for (int h : hist) CHECK(std::abs(h - 10000) < 500);
}

TEST_CASE("same seed, same sequence") {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) REQUIRE(a.below(1000003) == b.below(1000003));
  CHECK(a == b);
  Rng c(43);
  CHECK_FALSE(a.below(1ULL << 40) == c.below(1ULL << 40));
}
