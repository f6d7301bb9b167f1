#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permsum/ring.hpp"

namespace permsum {

// Multiset over Z/nZ, stored as a dense multiplicity vector so that the
// multiplicity of g is an O(1) lookup. n stays at desk scale, so density
// costs nothing.
class Sequence {
 public:
  explicit Sequence(const Ring& ring)
      : ring_(ring), mult_(ring.n, 0), length_(0) {}
  Sequence(const Ring& ring, std::vector<std::uint32_t> mult);

  const Ring& ring() const { return ring_; }
  std::uint32_t size() const { return length_; }
  bool empty() const { return length_ == 0; }
  std::uint32_t multiplicity(Residue g) const { return mult_[g]; }
  const std::vector<std::uint32_t>& multiplicities() const { return mult_; }

  void add(Residue g, std::uint32_t count = 1);
  void remove(Residue g, std::uint32_t count = 1);

  // Largest multiplicity over all residues; 0 for the empty sequence.
  std::uint32_t max_multiplicity() const;
  // Sum of all terms, reduced mod n.
  Residue term_sum() const;
  bool square_free() const { return max_multiplicity() <= 1; }

  // Terms in canonical order: increasing residue, repeats adjacent.
  std::vector<Residue> terms() const;

  bool operator==(const Sequence&) const = default;

 private:
  Ring ring_;
  std::vector<std::uint32_t> mult_;
  std::uint32_t length_;
};

struct SequenceStats {
  std::uint32_t length;
  std::uint32_t max_multiplicity;
  Residue term_sum;

  bool operator==(const SequenceStats&) const = default;
};

SequenceStats stats(const Sequence& s);

// T is a subsequence of S when every multiplicity of T is bounded by S's.
bool is_subsequence(const Sequence& t, const Sequence& s);

// Grammar:  seq := item ("," item)*   item := residue | residue "^" mult
// residue in [0, n) decimal, mult >= 1 decimal, no whitespace. Repeated
// residues accumulate. Canonical form: increasing residues, "^1" omitted.
Sequence parse_sequence(const Ring& ring, std::string_view text);
std::string format_sequence(const Sequence& s);

// Ordered partition of a sequence into square-free blocks of the given sizes.
struct BlockFactorization {
  std::vector<Sequence> blocks;
  std::vector<std::uint32_t> sizes;
};

// Deterministic greedy factorization (most-frequent residue first, ties to
// the smallest residue, blocks filled in the order given), with exhaustive
// backtracking as a completeness fallback. Sizes of 2, 3 and 4 are accepted.
BlockFactorization factorize(const Sequence& s, std::uint32_t num_blocks,
                             const std::vector<std::uint32_t>& sizes);

struct Layout {
  std::uint32_t num_blocks;
  std::vector<std::uint32_t> sizes;
};

// Block layout for a prime p > 7: h = floor((2p+1)/5) blocks, sizes
// [3 x (p-2h), 2 x (3h-p)]. Primes 5 and 7 use dedicated layouts elsewhere.
Layout theorem_layout(const Ring& ring);

}  // namespace permsum
