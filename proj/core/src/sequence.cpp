#include "permsum/sequence.hpp"

#include <algorithm>
#include <numeric>

namespace permsum {

Sequence::Sequence(const Ring& ring, std::vector<std::uint32_t> mult)
    : ring_(ring), mult_(std::move(mult)) {
  if (mult_.size() != ring_.n) {
    throw UsageError("multiplicity vector length must equal the modulus");
  }
  length_ = std::accumulate(mult_.begin(), mult_.end(), std::uint32_t{0});
}

void Sequence::add(Residue g, std::uint32_t count) {
  assert(g < ring_.n);
  mult_[g] += count;
  length_ += count;
}

void Sequence::remove(Residue g, std::uint32_t count) {
  assert(g < ring_.n);
  assert(mult_[g] >= count);
  mult_[g] -= count;
  length_ -= count;
}

std::uint32_t Sequence::max_multiplicity() const {
  std::uint32_t h = 0;
  for (std::uint32_t m : mult_) h = std::max(h, m);
  return h;
}

Residue Sequence::term_sum() const {
  std::uint64_t acc = 0;
  for (Residue g = 0; g < ring_.n; ++g) {
    acc = (acc + std::uint64_t(g) * (mult_[g] % ring_.n)) % ring_.n;
  }
  return static_cast<Residue>(acc);
}

std::vector<Residue> Sequence::terms() const {
  std::vector<Residue> out;
  out.reserve(length_);
  for (Residue g = 0; g < ring_.n; ++g) {
    for (std::uint32_t k = 0; k < mult_[g]; ++k) out.push_back(g);
  }
  return out;
}

SequenceStats stats(const Sequence& s) {
  return SequenceStats{s.size(), s.max_multiplicity(), s.term_sum()};
}

bool is_subsequence(const Sequence& t, const Sequence& s) {
  if (t.ring() != s.ring()) {
    throw UsageError("subsequence test requires a common modulus");
  }
  for (Residue g = 0; g < s.ring().n; ++g) {
    if (t.multiplicity(g) > s.multiplicity(g)) return false;
  }
  return true;
}

namespace {

std::uint64_t parse_number(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  std::uint64_t value = 0;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    value = value * 10 + (text[pos] - '0');
    if (value > 0xFFFFFFFFull) {
      throw UsageError("number out of range in sequence text");
    }
    ++pos;
  }
  if (pos == start) {
    throw UsageError("expected a number at offset " + std::to_string(pos) +
                     " in sequence text");
  }
  return value;
}

}  // namespace

Sequence parse_sequence(const Ring& ring, std::string_view text) {
  Sequence s(ring);
  std::size_t pos = 0;
  while (true) {
    std::uint64_t residue = parse_number(text, pos);
    if (residue >= ring.n) {
      throw UsageError("residue " + std::to_string(residue) +
                       " out of range for modulus " + std::to_string(ring.n));
    }
    std::uint64_t mult = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      mult = parse_number(text, pos);
      if (mult == 0) {
        throw UsageError("declared multiplicity must be at least 1");
      }
    }
    s.add(static_cast<Residue>(residue), static_cast<std::uint32_t>(mult));
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw UsageError("unexpected character '" + std::string(1, text[pos]) +
                       "' at offset " + std::to_string(pos) + " in sequence text");
    }
    ++pos;
  }
  return s;
}

std::string format_sequence(const Sequence& s) {
  std::string out;
  for (Residue g = 0; g < s.ring().n; ++g) {
    std::uint32_t m = s.multiplicity(g);
    if (m == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(g);
    if (m > 1) {
      out += '^';
      out += std::to_string(m);
    }
  }
  return out;
}

namespace {

// Greedy pick: highest remaining multiplicity, ties to the smallest residue,
// excluding residues already placed in the open block.
bool greedy_fill(Sequence& remaining, std::vector<bool>& used,
                 std::uint32_t want, Sequence& block) {
  for (std::uint32_t k = 0; k < want; ++k) {
    std::uint32_t best_mult = 0;
    Residue best = 0;
    for (Residue g = 0; g < remaining.ring().n; ++g) {
      if (used[g]) continue;
      if (remaining.multiplicity(g) > best_mult) {
        best_mult = remaining.multiplicity(g);
        best = g;
      }
    }
    if (best_mult == 0) return false;
    used[best] = true;
    remaining.remove(best);
    block.add(best);
  }
  return true;
}

// Exhaustive fallback: depth-first over residue choices. Picks within a block
// are forced into increasing residue order so every block content is explored
// exactly once; candidates are still preferred by remaining multiplicity.
bool backtrack_blocks(Sequence& remaining, const std::vector<std::uint32_t>& sizes,
                      std::size_t block_idx, Residue min_next,
                      std::vector<Sequence>& blocks) {
  if (block_idx == sizes.size()) return remaining.empty();
  Sequence& block = blocks[block_idx];
  if (block.size() == sizes[block_idx]) {
    return backtrack_blocks(remaining, sizes, block_idx + 1, 0, blocks);
  }
  std::vector<Residue> cand;
  for (Residue g = min_next; g < remaining.ring().n; ++g) {
    if (remaining.multiplicity(g) > 0) cand.push_back(g);
  }
  std::stable_sort(cand.begin(), cand.end(), [&](Residue a, Residue b) {
    return remaining.multiplicity(a) > remaining.multiplicity(b);
  });
  for (Residue g : cand) {
    remaining.remove(g);
    block.add(g);
    if (backtrack_blocks(remaining, sizes, block_idx, g + 1, blocks)) return true;
    block.remove(g);
    remaining.add(g);
  }
  return false;
}

}  // namespace

BlockFactorization factorize(const Sequence& s, std::uint32_t num_blocks,
                             const std::vector<std::uint32_t>& sizes) {
  if (sizes.size() != num_blocks) {
    throw UsageError("factorize: size list length must equal the block count");
  }
  std::uint64_t total = 0;
  for (std::uint32_t sz : sizes) {
    if (sz < 2 || sz > 4) {
      throw UsageError("factorize: block sizes must be 2, 3 or 4");
    }
    total += sz;
  }
  if (total != s.size()) {
    throw UsageError("factorize: sizes sum to " + std::to_string(total) +
                     " but the sequence has length " + std::to_string(s.size()));
  }
  if (s.max_multiplicity() > num_blocks) {
    throw UsageError("factorize: infeasible, max multiplicity " +
                     std::to_string(s.max_multiplicity()) + " exceeds " +
                     std::to_string(num_blocks) + " blocks");
  }

  // Greedy pass.
  {
    Sequence remaining = s;
    std::vector<Sequence> blocks;
    bool ok = true;
    for (std::uint32_t sz : sizes) {
      std::vector<bool> used(s.ring().n, false);
      Sequence block(s.ring());
      if (!greedy_fill(remaining, used, sz, block)) {
        ok = false;
        break;
      }
      blocks.push_back(std::move(block));
    }
    if (ok) return BlockFactorization{std::move(blocks), sizes};
  }

  // Backtracking pass.
  Sequence remaining = s;
  std::vector<Sequence> blocks(sizes.size(), Sequence(s.ring()));
  if (backtrack_blocks(remaining, sizes, 0, 0, blocks)) {
    return BlockFactorization{std::move(blocks), sizes};
  }
  throw UsageError("factorize: infeasible, no square-free block partition exists");
}

Layout theorem_layout(const Ring& ring) {
  if (!ring.prime || ring.n <= 7) {
    throw UsageError("theorem layout requires a prime modulus above 7");
  }
  std::uint32_t p = ring.n;
  std::uint32_t h = (2 * p + 1) / 5;
  std::vector<std::uint32_t> sizes;
  sizes.insert(sizes.end(), p - 2 * h, 3);
  sizes.insert(sizes.end(), 3 * h - p, 2);
  return Layout{h, std::move(sizes)};
}

}  // namespace permsum
