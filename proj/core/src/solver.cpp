#include "permsum/solver.hpp"

#include <algorithm>

#include "permsum/gset.hpp"

namespace permsum {

namespace {

void check_shape(const Sequence& s1, const Sequence& s2) {
  if (s1.ring() != s2.ring()) {
    throw UsageError("solve requires a common modulus");
  }
  const Ring& ring = s1.ring();
  if (!ring.prime || ring.n < 5) {
    throw UsageError("solve requires a prime modulus of at least 5");
  }
  if (s1.size() != ring.n || s2.size() != ring.n) {
    throw UsageError("solve requires |S1| = |S2| = p");
  }
}

Layout solve_layout(const Ring& ring) {
  if (ring.n == 5) return Layout{2, {3, 2}};
  if (ring.n == 7) return Layout{2, {4, 3}};
  return theorem_layout(ring);
}

// Canonical global positions (in increasing-residue term order) for each
// block: block i's terms, listed ascending, get the next unused copy of each
// residue.
std::vector<std::vector<std::uint32_t>> block_positions(
    const Sequence& whole, const std::vector<Sequence>& blocks) {
  const Ring& ring = whole.ring();
  std::vector<std::uint32_t> offset(ring.n, 0), taken(ring.n, 0);
  std::uint32_t pos = 0;
  for (Residue g = 0; g < ring.n; ++g) {
    offset[g] = pos;
    pos += whole.multiplicity(g);
  }
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(blocks.size());
  for (const Sequence& block : blocks) {
    std::vector<std::uint32_t> positions;
    for (Residue g : block.terms()) {
      positions.push_back(offset[g] + taken[g]++);
    }
    out.push_back(std::move(positions));
  }
  return out;
}

struct Attempt {
  BlockFactorization f1, f2;
  std::vector<WitnessedSet> block_sets;
  std::vector<GSet> prefixes;  // prefixes[i] = A_1 + ... + A_{i+1}
  std::vector<std::uint32_t> prefix_sizes;
  bool covers_group = false;
};

Attempt run_attempt(const Sequence& s1, const Sequence& s2,
                    std::uint32_t num_blocks,
                    const std::vector<std::uint32_t>& sizes) {
  const Ring& ring = s1.ring();
  Attempt a{BlockFactorization{}, BlockFactorization{}, {}, {}, {}, false};
  a.f1 = factorize(s1, num_blocks, sizes);
  a.f2 = factorize(s2, num_blocks, sizes);

  GSet prefix(ring);
  prefix.insert(0);
  for (std::uint32_t i = 0; i < num_blocks; ++i) {
    a.block_sets.push_back(block_product(a.f1.blocks[i], a.f2.blocks[i]));
    prefix = sumset(prefix, a.block_sets.back().set);
    a.prefixes.push_back(prefix);
    a.prefix_sizes.push_back(prefix.size());
  }
  a.covers_group = prefix.size() == ring.n;
  return a;
}

}  // namespace

bool multiplicity_hypothesis_holds(const Sequence& s1, const Sequence& s2) {
  check_shape(s1, s2);
  const std::uint32_t p = s1.ring().n;
  const std::uint32_t h = std::max(s1.max_multiplicity(), s2.max_multiplicity());
  if (p == 5 || p == 7) return h <= 2;
  return 5 * std::uint64_t(h) <= 2 * std::uint64_t(p) + 1;
}

SolveReport solve(const Sequence& s1, const Sequence& s2, Residue target) {
  check_shape(s1, s2);
  const Ring& ring = s1.ring();
  if (target >= ring.n) {
    throw UsageError("target residue out of range");
  }
  if (!multiplicity_hypothesis_holds(s1, s2)) {
    throw HypothesisError(
        "multiplicity hypothesis fails: max(h(S1), h(S2)) = " +
        std::to_string(std::max(s1.max_multiplicity(), s2.max_multiplicity())) +
        " exceeds the bound for p = " + std::to_string(ring.n));
  }

  const Layout layout = solve_layout(ring);
  std::vector<std::uint32_t> fallback(layout.sizes.rbegin(), layout.sizes.rend());

  Attempt attempt = run_attempt(s1, s2, layout.num_blocks, layout.sizes);
  if (!attempt.covers_group) {
    attempt = run_attempt(s1, s2, layout.num_blocks, fallback);
  }
  if (!attempt.covers_group) {
    std::string diag = "prefix sumsets stop short of the whole group; sizes:";
    for (std::uint32_t c : attempt.prefix_sizes) diag += ' ' + std::to_string(c);
    diag += "; S1=" + format_sequence(s1) + " S2=" + format_sequence(s2);
    throw IncompleteError(diag);
  }

  // Back-walk the prefix chain, picking the smallest block element that keeps
  // the remainder reachable.
  const std::uint32_t h = layout.num_blocks;
  std::vector<Residue> chosen(h, 0);
  Residue v = target;
  for (std::uint32_t i = h; i-- > 0;) {
    bool picked = false;
    for (Residue a : attempt.block_sets[i].set.members()) {
      Residue rest = ring.sub(v, a);
      bool reachable = i == 0 ? (rest == 0) : attempt.prefixes[i - 1].contains(rest);
      if (reachable) {
        chosen[i] = a;
        v = rest;
        picked = true;
        break;
      }
    }
    if (!picked) {
      throw IncompleteError("prefix back-walk failed for target " +
                            std::to_string(target));
    }
  }

  // Stitch block-local matchings into one permutation of global positions.
  auto pos1 = block_positions(s1, attempt.f1.blocks);
  auto pos2 = block_positions(s2, attempt.f2.blocks);
  Matching witness;
  for (std::uint32_t i = 0; i < h; ++i) {
    const Matching& local = attempt.block_sets[i].witness.at(chosen[i]);
    for (auto [bi, bj] : local.pairs) {
      witness.pairs.emplace_back(pos1[i][bi], pos2[i][bj]);
    }
  }
  std::sort(witness.pairs.begin(), witness.pairs.end());

  if (witness.value(s1, s2) != target) {
    throw ViolationError("assembled witness recomputes to a different residue");
  }

  return SolveReport{std::move(attempt.f1), std::move(attempt.f2),
                     std::move(attempt.block_sets),
                     std::move(attempt.prefix_sizes), std::move(witness),
                     target};
}

BoundChainReport bound_chain(const Sequence& s1, const Sequence& s2) {
  check_shape(s1, s2);
  const Ring& ring = s1.ring();
  if (ring.n <= 7) {
    throw UsageError("bound chain requires a prime modulus above 7");
  }
  if (!multiplicity_hypothesis_holds(s1, s2)) {
    throw HypothesisError(
        "multiplicity hypothesis fails: max(h(S1), h(S2)) = " +
        std::to_string(std::max(s1.max_multiplicity(), s2.max_multiplicity())) +
        " exceeds the bound for p = " + std::to_string(ring.n));
  }

  const std::uint32_t p = ring.n;
  const Layout layout = theorem_layout(ring);
  const std::uint32_t h = layout.num_blocks;
  BlockFactorization f1 = factorize(s1, h, layout.sizes);
  BlockFactorization f2 = factorize(s2, h, layout.sizes);

  // Chain order: size-2 blocks first, i.e. block indices h-1 down to 0.
  BoundChainReport report;
  report.h = h;
  GSet prefix(ring);
  prefix.insert(0);
  for (std::uint32_t i = h; i-- > 0;) {
    WitnessedSet a = block_product(f1.blocks[i], f2.blocks[i]);
    report.chain_sizes.push_back(layout.sizes[i]);
    prefix = sumset(prefix, a.set);
    report.prefix_sizes.push_back(prefix.size());
  }

  const std::uint32_t two_blocks = 3 * h - p;
  auto capped = [p](std::int64_t b) {
    return static_cast<std::uint32_t>(std::min<std::int64_t>(p, std::max<std::int64_t>(b, 0)));
  };
  auto add_bound = [&](const std::string& name, std::uint32_t idx, std::uint32_t bound) {
    std::uint32_t card = report.prefix_sizes[idx - 1];
    report.bounds.push_back(BoundCheck{name, idx, bound, card, card >= bound});
  };
  add_bound("chain-2blocks", two_blocks, capped(3 * std::int64_t(h) - p + 1));
  add_bound("chain-through-A2", h - 1, capped(3 * std::int64_t(p) - 5 * h - 3));
  add_bound("chain-full", h, capped(3 * std::int64_t(p) - 5 * h + 1));
  report.saturated = report.prefix_sizes.back() == p;
  return report;
}

}  // namespace permsum
