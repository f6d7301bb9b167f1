#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permsum/products.hpp"
#include "permsum/sequence.hpp"

namespace permsum {

// Everything the witness construction produced, kept for inspection: the two
// block factorizations, the per-block product sets A_i with their matchings,
// the iterated prefix-sumset cardinalities, and the assembled permutation.
struct SolveReport {
  BlockFactorization factorization_1;
  BlockFactorization factorization_2;
  std::vector<WitnessedSet> block_sets;     // A_i = U_i * V_i
  std::vector<std::uint32_t> prefix_sizes;  // |A_1|, |A_1+A_2|, ...
  Matching witness;
  Residue target = 0;
};

// Multiplicity hypothesis for the witness construction: both sequences have
// length p, and max(h(S1), h(S2)) <= (2p+1)/5, tightened to 2 for p in {5, 7}.
// Throws UsageError when the shape (prime p >= 5, lengths p) is wrong.
bool multiplicity_hypothesis_holds(const Sequence& s1, const Sequence& s2);

// Constructive witness: a permutation matching of S1 against S2 whose sum of
// products is `target`. Throws HypothesisError when the multiplicity bound
// fails and IncompleteError if the prefix sumsets do not cover the group
// even after the fallback factorization order (not expected to happen; such
// an instance would be a counterexample and is reported with full state).
SolveReport solve(const Sequence& s1, const Sequence& s2, Residue target);

struct BoundCheck {
  std::string name;            // "chain-2blocks", "chain-through-A2", "chain-full"
  std::uint32_t prefix_index;  // 1-based position in the chain
  std::uint32_t bound;         // lower bound, capped at p
  std::uint32_t cardinality;
  bool satisfied;
};

struct BoundChainReport {
  std::uint32_t h;
  std::vector<std::uint32_t> chain_sizes;    // block sizes in chain order (2s first)
  std::vector<std::uint32_t> prefix_sizes;   // |A_h|, |A_h+A_{h-1}|, ...
  std::vector<BoundCheck> bounds;
  bool saturated;                            // final prefix covers all of Z/pZ

  bool all_satisfied() const {
    for (const auto& b : bounds) {
      if (!b.satisfied) return false;
    }
    return saturated;
  }
};

// Diagnostic reproduction of the inequality chain behind the witness
// construction, for p > 7: prefix sumsets of the A_i taken size-2 blocks
// first, each reported cardinality checked against the lower bounds
// 3h-p+1, 3p-5h-3 and 3p-5h+1 (capped at p).
BoundChainReport bound_chain(const Sequence& s1, const Sequence& s2);

}  // namespace permsum
