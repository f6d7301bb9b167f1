#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "permsum/analysis.hpp"
#include "permsum/ring.hpp"

using namespace permsum;

TEST_CASE("make_ring computes primality") {
  CHECK(make_ring(7).prime);
  CHECK_FALSE(make_ring(9).prime);
  CHECK(make_ring(2).prime);
  CHECK(make_ring(3).prime);
  CHECK_FALSE(make_ring(4).prime);
  CHECK(make_ring(104729).prime);
  CHECK_FALSE(make_ring(104730).prime);
}

TEST_CASE("make_ring rejects bad moduli") {
  CHECK_THROWS_AS(make_ring(0), UsageError);
  CHECK_THROWS_AS(make_ring(1), UsageError);
  CHECK_THROWS_AS(make_ring(0x80000000u), UsageError);
}

TEST_CASE("primality matches trial division on a range") {
  for (std::uint32_t n = 2; n < 500; ++n) {
    bool naive = true;
    for (std::uint32_t d = 2; d < n; ++d) {
      if (n % d == 0) {
        naive = false;
        break;
      }
    }
    CHECK(make_ring(n).prime == naive);
  }
}

TEST_CASE("affine_apply evaluates alpha*z + beta") {
  CHECK(affine_apply(make_ring(7), Affine{2, 1}, 3) == 0);
  CHECK(affine_apply(make_ring(11), Affine{1, 0}, 5) == 5);
  CHECK(affine_apply(make_ring(11), Affine{10, 1}, 4) == 8);
}

TEST_CASE("affine maps with unit slope are bijections") {
  SplitMix64 rng(2024);
  for (std::uint32_t n : {5u, 7u, 12u, 31u}) {
    Ring ring = make_ring(n);
    for (int it = 0; it < 20; ++it) {
      Residue alpha = static_cast<Residue>(rng.below(n));
      if (!ring.is_unit(alpha)) continue;
      Affine f{alpha, static_cast<Residue>(rng.below(n))};
      std::vector<bool> hit(n, false);
      for (Residue z = 0; z < n; ++z) hit[affine_apply(ring, f, z)] = true;
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  }
}

TEST_CASE("affine composition closure") {
  SplitMix64 rng(7);
  Ring ring = make_ring(13);
  for (int it = 0; it < 50; ++it) {
    Affine f{static_cast<Residue>(1 + rng.below(12)),
             static_cast<Residue>(rng.below(13))};
    Affine g{static_cast<Residue>(1 + rng.below(12)),
             static_cast<Residue>(rng.below(13))};
    Affine fg = affine_compose(ring, f, g);
    for (Residue z = 0; z < 13; ++z) {
      CHECK(affine_apply(ring, fg, z) ==
            affine_apply(ring, g, affine_apply(ring, f, z)));
    }
  }
}

TEST_CASE("affine inverse undoes the map") {
  Ring ring = make_ring(11);
  Affine f{10, 1};
  Affine fi = affine_inverse(ring, f);
  for (Residue z = 0; z < 11; ++z) {
    CHECK(affine_apply(ring, fi, affine_apply(ring, f, z)) == z);
  }
}

TEST_CASE("affine_apply rejects non-unit slopes") {
  Ring ring = make_ring(9);
  CHECK_THROWS_AS(affine_apply(ring, Affine{3, 0}, 1), UsageError);
  CHECK_THROWS_AS(ring.inv(3), UsageError);
}

TEST_CASE("roots of z^2 - z + 1 by scan") {
  CHECK(roots_z2_minus_z_plus_1(make_ring(13)) == std::vector<Residue>{4, 10});
  CHECK(roots_z2_minus_z_plus_1(make_ring(7)) == std::vector<Residue>{3, 5});
  CHECK(roots_z2_minus_z_plus_1(make_ring(5)).empty());
  // p = 3 is the unique prime with a double root.
  CHECK(roots_z2_minus_z_plus_1(make_ring(3)) == std::vector<Residue>{2});
}

TEST_CASE("a prime modulus has at most two roots") {
  for (std::uint32_t n = 2; n < 300; ++n) {
    Ring ring = make_ring(n);
    if (!ring.prime) continue;
    auto roots = roots_z2_minus_z_plus_1(ring);
    CHECK(roots.size() <= 2);
    for (Residue z : roots) {
      CHECK(ring.reduce(std::int64_t(z) * z - z + 1) == 0);
    }
  }
}
