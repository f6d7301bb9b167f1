#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "permsum/analysis.hpp"
#include "permsum/solver.hpp"

using namespace permsum;

namespace {

void check_permutation_witness(const SolveReport& report, const Sequence& s1,
                               const Sequence& s2, Residue target) {
  const std::uint32_t p = s1.ring().n;
  REQUIRE(report.witness.pairs.size() == p);
  std::vector<bool> left(p, false), right(p, false);
  for (auto [i, j] : report.witness.pairs) {
    CHECK_FALSE(left[i]);
    CHECK_FALSE(right[j]);
    left[i] = true;
    right[j] = true;
  }
  CHECK(report.witness.value(s1, s2) == target);
}

}  // namespace

TEST_CASE("solve finds witnesses on examples") {
  Ring r11 = make_ring(11);
  Sequence s11 = parse_sequence(r11, "0^4,1^4,2^3");
  SolveReport a = solve(s11, s11, 0);
  check_permutation_witness(a, s11, s11, 0);
  CHECK(a.prefix_sizes.back() == 11);

  Ring r7 = make_ring(7);
  Sequence s7 = parse_sequence(r7, "0^2,1^2,2^2,3");
  SolveReport b = solve(s7, s7, 5);
  check_permutation_witness(b, s7, s7, 5);
  // p = 7 uses the dedicated [4, 3] block layout.
  CHECK(b.factorization_1.sizes == std::vector<std::uint32_t>{4, 3});

  Ring r5 = make_ring(5);
  Sequence s5 = parse_sequence(r5, "0^2,1^2,2");
  SolveReport c = solve(s5, s5, 4);
  check_permutation_witness(c, s5, s5, 4);
  CHECK(c.factorization_1.sizes == std::vector<std::uint32_t>{3, 2});
}

TEST_CASE("solve rejects hypothesis violations") {
  Ring r5 = make_ring(5);
  Sequence tight = parse_sequence(r5, "0^3,1^2");
  CHECK_THROWS_AS(solve(tight, tight, 0), HypothesisError);

  Ring r11 = make_ring(11);
  Sequence fam3 = parse_sequence(r11, "0^5,1^5,2");
  CHECK_THROWS_AS(solve(fam3, fam3, 0), HypothesisError);
}

TEST_CASE("solve validates shape") {
  Ring r9 = make_ring(9);
  Sequence s9(r9);
  for (Residue g = 0; g < 9; ++g) s9.add(g);
  CHECK_THROWS_AS(solve(s9, s9, 0), UsageError);  // composite modulus

  Ring r7 = make_ring(7);
  Sequence short7 = parse_sequence(r7, "0,1,2");
  CHECK_THROWS_AS(solve(short7, short7, 0), UsageError);  // |S| != p

  Ring r3 = make_ring(3);
  Sequence s3 = parse_sequence(r3, "0,1,2");
  CHECK_THROWS_AS(solve(s3, s3, 0), UsageError);  // p < 5 unsupported

  Sequence s7 = parse_sequence(r7, "0^2,1^2,2^2,3");
  CHECK_THROWS_AS(solve(s7, s7, 7), UsageError);  // target out of range
}

TEST_CASE("solve succeeds for every target under the hypothesis") {
  SplitMix64 rng(9001);
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    Ring ring = make_ring(p);
    std::uint32_t bound = (p == 5 || p == 7) ? 2 : (2 * p + 1) / 5;
    for (int inst = 0; inst < 20; ++inst) {
      Sequence s1 = sample_bounded_sequence(ring, p, bound, rng);
      Sequence s2 = sample_bounded_sequence(ring, p, bound, rng);
      for (Residue g = 0; g < p; ++g) {
        SolveReport report = solve(s1, s2, g);
        check_permutation_witness(report, s1, s2, g);
      }
    }
  }
}

TEST_CASE("solver and oracle agree where the oracle is feasible") {
  SplitMix64 rng(424242);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    Ring ring = make_ring(p);
    std::uint32_t bound = (p == 5 || p == 7) ? 2 : (2 * p + 1) / 5;
    for (int inst = 0; inst < 10; ++inst) {
      Sequence s1 = sample_bounded_sequence(ring, p, bound, rng);
      Sequence s2 = sample_bounded_sequence(ring, p, bound, rng);
      WitnessedSet product = oracle_product_set(s1, s2);
      CHECK(product.set.size() == p);  // covers the group
      for (Residue g = 0; g < p; ++g) {
        CHECK(solve(s1, s2, g).witness.value(s1, s2) == g);
      }
    }
  }
}

TEST_CASE("bound_chain on the worked example") {
  Ring r11 = make_ring(11);
  Sequence s = parse_sequence(r11, "0^4,1^4,2^3");
  BoundChainReport report = bound_chain(s, s);
  CHECK(report.h == 4);
  CHECK(report.chain_sizes == std::vector<std::uint32_t>{2, 3, 3, 3});
  CHECK(report.prefix_sizes.size() == 4);
  CHECK(report.prefix_sizes.back() == 11);
  CHECK(report.saturated);
  REQUIRE(report.bounds.size() == 3);
  // h = 4: bounds 3h-p+1 = 2, 3p-5h-3 = 10, min(p, 3p-5h+1) = 11.
  CHECK(report.bounds[0].bound == 2);
  CHECK(report.bounds[1].bound == 10);
  CHECK(report.bounds[2].bound == 11);
  CHECK(report.all_satisfied());
}

TEST_CASE("bound_chain on a seeded pair at p = 13") {
  Ring r13 = make_ring(13);
  SplitMix64 rng(42);
  Sequence s1 = sample_bounded_sequence(r13, 13, 5, rng);
  Sequence s2 = sample_bounded_sequence(r13, 13, 5, rng);
  BoundChainReport report = bound_chain(s1, s2);
  CHECK(report.prefix_sizes.back() == 13);
  CHECK(report.all_satisfied());
}

TEST_CASE("bound_chain rejects bad inputs") {
  Ring r11 = make_ring(11);
  Sequence fam3 = parse_sequence(r11, "0^5,1^5,2");
  CHECK_THROWS_AS(bound_chain(fam3, fam3), HypothesisError);

  Ring r7 = make_ring(7);
  Sequence s7 = parse_sequence(r7, "0^2,1^2,2^2,3");
  CHECK_THROWS_AS(bound_chain(s7, s7), UsageError);  // needs p > 7
}

TEST_CASE("bound_chain holds over seeded hypothesis pairs") {
  SplitMix64 rng(777);
  for (std::uint32_t p : {11u, 13u}) {
    Ring ring = make_ring(p);
    std::uint32_t bound = (2 * p + 1) / 5;
    for (int it = 0; it < 30; ++it) {
      Sequence s1 = sample_bounded_sequence(ring, p, bound, rng);
      Sequence s2 = sample_bounded_sequence(ring, p, bound, rng);
      CHECK(bound_chain(s1, s2).all_satisfied());
    }
  }
}

TEST_CASE("reported block sets are the pairwise block products") {
  Ring r11 = make_ring(11);
  Sequence s = parse_sequence(r11, "0^4,1^4,2^3");
  SolveReport report = solve(s, s, 3);
  REQUIRE(report.block_sets.size() == report.factorization_1.blocks.size());
  for (std::size_t i = 0; i < report.block_sets.size(); ++i) {
    WitnessedSet direct = block_product(report.factorization_1.blocks[i],
                                        report.factorization_2.blocks[i]);
    CHECK(direct.set == report.block_sets[i].set);
  }
}
