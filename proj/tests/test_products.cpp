#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permsum/analysis.hpp"
#include "permsum/products.hpp"
#include "support/brute.hpp"
#include "support/gen.hpp"

using namespace permsum;
using namespace permsum::testing;

TEST_CASE("triple_product_formula on examples") {
  Ring r11 = make_ring(11);
  CHECK(triple_product_formula(r11, 2, 3) == GSet(r11, {1, 2, 3, 5, 6, 7}));

  Ring r13 = make_ring(13);
  CHECK(triple_product_formula(r13, 4, 10) == GSet(r13, {1, 2, 4, 10}));

  Ring r7 = make_ring(7);
  CHECK(triple_product_formula(r7, 3, 5) == GSet(r7, {1, 2, 3, 5}));

  CHECK_THROWS_AS(triple_product_formula(r7, 0, 3), UsageError);
  CHECK_THROWS_AS(triple_product_formula(r7, 3, 1), UsageError);
}

TEST_CASE("formula agrees with matching enumeration on normalized blocks") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    Ring ring = make_ring(p);
    for (Residue x = 2; x < p; ++x) {
      for (Residue y = 2; y < p; ++y) {
        Sequence u(ring), v(ring);
        u.add(0);
        u.add(1);
        u.add(x);
        v.add(0);
        v.add(1);
        v.add(y);
        CHECK(block_product(u, v).set == triple_product_formula(ring, x, y));
      }
    }
  }
}

TEST_CASE("block_product on examples") {
  Ring r5 = make_ring(5);
  WitnessedSet two = block_product(parse_sequence(r5, "0,1"), parse_sequence(r5, "0,1"));
  CHECK(two.set == GSet(r5, {0, 1}));
  CHECK(two.witness.size() == 2);

  Ring r11 = make_ring(11);
  WitnessedSet three =
      block_product(parse_sequence(r11, "0,1,2"), parse_sequence(r11, "0,1,3"));
  CHECK(three.set == GSet(r11, {1, 2, 3, 5, 6, 7}));
  CHECK(three.witness.size() == 6);

  Ring r7 = make_ring(7);
  Sequence four = parse_sequence(r7, "0,1,2,3");
  WitnessedSet ws = block_product(four, four);
  CHECK(ws.set.size() >= 4);
  CHECK(ws.set == brute_product_set(four, four));
}

TEST_CASE("block_product validates its inputs") {
  Ring r7 = make_ring(7);
  CHECK_THROWS_AS(
      block_product(parse_sequence(r7, "0^2,1"), parse_sequence(r7, "0,1,2")),
      UsageError);
  CHECK_THROWS_AS(
      block_product(parse_sequence(r7, "0,1"), parse_sequence(r7, "0,1,2")),
      UsageError);
  CHECK_THROWS_AS(
      block_product(parse_sequence(r7, "0,1,2,3,4"), parse_sequence(r7, "0,1,2,3,4")),
      UsageError);
}

TEST_CASE("oracle_product_set on examples") {
  Ring r3 = make_ring(3);
  WitnessedSet a =
      oracle_product_set(parse_sequence(r3, "0^2,1"), parse_sequence(r3, "0,1,2"));
  CHECK(a.set == GSet(r3, {0, 1, 2}));

  Ring r7 = make_ring(7);
  Sequence fam2 = parse_sequence(r7, "0^3,1^3,4");
  CHECK_FALSE(oracle_product_set(fam2, fam2).set.contains(0));

  // 0^3 1^2 against itself shows the multiplicity bound is tight at p = 5:
  // the product reaches only the possible 1*1 pair counts {0, 1, 2}.
  Ring r5 = make_ring(5);
  Sequence tight = parse_sequence(r5, "0^3,1^2");
  WitnessedSet tp = oracle_product_set(tight, tight);
  CHECK(tp.set == GSet(r5, {0, 1, 2}));
  CHECK(tp.set == brute_product_set(tight, tight));
  CHECK(tp.set.size() < 5);
}

TEST_CASE("oracle matches brute force on random equal-length instances") {
  SplitMix64 rng(101);
  for (int it = 0; it < 120; ++it) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(5));  // 3..7
    Ring ring = make_ring(n);
    std::uint32_t len = 1 + static_cast<std::uint32_t>(rng.below(6));
    Sequence s = random_sequence(ring, len, rng);
    Sequence t = random_sequence(ring, len, rng);
    WitnessedSet ws = oracle_product_set(s, t);
    CHECK(ws.set == brute_product_set(s, t));
    ws.verify(s, t);
  }
}

TEST_CASE("oracle handles unequal lengths via the min-length definition") {
  SplitMix64 rng(55);
  for (int it = 0; it < 60; ++it) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(4));  // 3..6
    Ring ring = make_ring(n);
    std::uint32_t ls = 1 + static_cast<std::uint32_t>(rng.below(5));
    std::uint32_t lt = 1 + static_cast<std::uint32_t>(rng.below(5));
    Sequence s = random_sequence(ring, ls, rng);
    Sequence t = random_sequence(ring, lt, rng);
    WitnessedSet ws = oracle_product_set(s, t);
    CHECK(ws.set == brute_product_set(s, t));
    ws.verify(s, t);
    for (const auto& [value, m] : ws.witness) {
      CHECK(m.pairs.size() == std::min(ls, lt));
    }
  }
}

TEST_CASE("oracle is symmetric in its arguments") {
  SplitMix64 rng(77);
  Ring ring = make_ring(7);
  for (int it = 0; it < 40; ++it) {
    Sequence s = random_sequence(ring, 5, rng);
    Sequence t = random_sequence(ring, 5, rng);
    CHECK(oracle_product_set(s, t).set == oracle_product_set(t, s).set);
  }
}

TEST_CASE("oracle witnesses use distinct positions") {
  SplitMix64 rng(123);
  Ring ring = make_ring(7);
  for (int it = 0; it < 30; ++it) {
    Sequence s = random_sequence(ring, 6, rng);
    Sequence t = random_sequence(ring, 6, rng);
    WitnessedSet ws = oracle_product_set(s, t);
    for (const auto& [value, m] : ws.witness) {
      std::vector<bool> left(s.size(), false), right(t.size(), false);
      for (auto [i, j] : m.pairs) {
        CHECK_FALSE(left[i]);
        CHECK_FALSE(right[j]);
        left[i] = true;
        right[j] = true;
      }
    }
  }
}

TEST_CASE("square-free triple products never drop below four elements") {
  // Exhaustive over all triple pairs at p <= 7, sampled above.
  for (std::uint32_t p : {5u, 7u}) {
    Ring ring = make_ring(p);
    std::vector<Sequence> triples;
    for (Residue a = 0; a < p; ++a) {
      for (Residue b = a + 1; b < p; ++b) {
        for (Residue c = b + 1; c < p; ++c) {
          Sequence u(ring);
          u.add(a);
          u.add(b);
          u.add(c);
          triples.push_back(std::move(u));
        }
      }
    }
    for (const Sequence& u : triples) {
      for (const Sequence& v : triples) {
        CHECK(block_product(u, v).set.size() >= 4);
      }
    }
  }
  SplitMix64 rng(500);
  for (std::uint32_t p : {11u, 13u, 17u, 19u}) {
    Ring ring = make_ring(p);
    for (int it = 0; it < 100; ++it) {
      Sequence u = random_square_free(ring, 3, rng);
      Sequence v = random_square_free(ring, 3, rng);
      CHECK(block_product(u, v).set.size() >= 4);
    }
  }
}

TEST_CASE("oracle reports budget exhaustion") {
  Ring ring = make_ring(13);
  Sequence s(ring);
  for (Residue g = 0; g < 13; ++g) s.add(g);
  CHECK_THROWS_AS(oracle_product_set(s, s, 64), BudgetError);
}

TEST_CASE("empty sequences produce the empty-sum singleton") {
  Ring ring = make_ring(5);
  WitnessedSet ws = oracle_product_set(Sequence(ring), parse_sequence(ring, "1,2"));
  CHECK(ws.set == GSet(ring, {0}));
}
