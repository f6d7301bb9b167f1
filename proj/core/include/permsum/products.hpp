#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permsum/gset.hpp"
#include "permsum/sequence.hpp"

namespace permsum {

// Pairing between positions of two sequences, positions taken in canonical
// term order (increasing residue, repeats adjacent). Covers min(|S|, |T|)
// positions of each side, each at most once.
struct Matching {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  // Sum over pairs of term_S * term_T, mod n.
  Residue value(const Sequence& s, const Sequence& t) const;

  // "(i,j),(k,l),..."
  std::string to_text() const;

  bool operator==(const Matching&) const = default;
};

// A product set together with one checkable matching per member.
struct WitnessedSet {
  GSet set;
  std::map<Residue, Matching> witness;

  explicit WitnessedSet(const Ring& ring) : set(ring) {}

  // Recomputes every witness; throws ViolationError on any mismatch.
  void verify(const Sequence& s, const Sequence& t) const;
};

// Product set of the normalized square-free triples {0,1,x} and {0,1,y}:
// exactly {1, x, y, xy, x+y, xy+1} as a set. Requires x, y outside {0,1}.
GSet triple_product_formula(const Ring& ring, Residue x, Residue y);

// Product set of two square-free blocks of equal length 2, 3 or 4 by full
// matching enumeration; the witness kept per value is the first one found in
// lexicographic enumeration order.
WitnessedSet block_product(const Sequence& u, const Sequence& v);

// Default cap on the oracle's DP storage, counted in 64-bit words.
inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 28;

// Exact product set S*T over all permutation pairs, with one witness per
// member. The DP groups one side by distinct values with multiplicities
// (m_1, ..., m_k) and tracks, per step, the achievable partial sums for each
// consumption state; state count is prod(m_j + 1), so repeated values
// compress the search. The side with the cheaper state space is grouped
// (the set is symmetric either way, witnesses are reported in the caller's
// orientation). Exceeding `budget_words` throws BudgetError.
WitnessedSet oracle_product_set(const Sequence& s, const Sequence& t,
                                std::uint64_t budget_words = kDefaultOracleBudget);

}  // namespace permsum
