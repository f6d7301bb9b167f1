#include "permsum/products.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace permsum {

Residue Matching::value(const Sequence& s, const Sequence& t) const {
  std::vector<Residue> ts = s.terms();
  std::vector<Residue> tt = t.terms();
  const Ring& ring = s.ring();
  Residue acc = 0;
  for (auto [i, j] : pairs) {
    assert(i < ts.size() && j < tt.size());
    acc = ring.add(acc, ring.mul(ts[i], tt[j]));
  }
  return acc;
}

std::string Matching::to_text() const {
  std::string out;
  for (auto [i, j] : pairs) {
    if (!out.empty()) out += ',';
    out += '(' + std::to_string(i) + ',' + std::to_string(j) + ')';
  }
  return out;
}

void WitnessedSet::verify(const Sequence& s, const Sequence& t) const {
  if (witness.size() != set.size()) {
    throw ViolationError("witness count does not match the set cardinality");
  }
  for (const auto& [member, matching] : witness) {
    if (!set.contains(member)) {
      throw ViolationError("witness present for a non-member residue");
    }
    if (matching.value(s, t) != member) {
      throw ViolationError("witness for " + std::to_string(member) +
                           " recomputes to a different residue");
    }
  }
}

GSet triple_product_formula(const Ring& ring, Residue x, Residue y) {
  if (x < 2 || y < 2) {
    throw UsageError("triple product formula requires x, y outside {0, 1}");
  }
  assert(x < ring.n && y < ring.n);
  GSet out(ring);
  out.insert(1 % ring.n);
  out.insert(x);
  out.insert(y);
  out.insert(ring.mul(x, y));
  out.insert(ring.add(x, y));
  out.insert(ring.add(ring.mul(x, y), 1 % ring.n));
  return out;
}

WitnessedSet block_product(const Sequence& u, const Sequence& v) {
  if (u.ring() != v.ring()) {
    throw UsageError("block product requires a common modulus");
  }
  if (!u.square_free() || !v.square_free()) {
    throw UsageError("block product requires square-free blocks");
  }
  if (u.size() != v.size() || u.size() < 2 || u.size() > 4) {
    throw UsageError("block product requires equal block lengths in {2, 3, 4}");
  }

  const Ring& ring = u.ring();
  std::vector<Residue> ut = u.terms();
  std::vector<Residue> vt = v.terms();
  const std::uint32_t len = u.size();

  std::vector<std::uint32_t> perm(len);
  std::iota(perm.begin(), perm.end(), 0);

  WitnessedSet out(ring);
  do {
    Residue val = 0;
    for (std::uint32_t i = 0; i < len; ++i) {
      val = ring.add(val, ring.mul(ut[i], vt[perm[i]]));
    }
    if (!out.set.contains(val)) {
      out.set.insert(val);
      Matching m;
      for (std::uint32_t i = 0; i < len; ++i) m.pairs.emplace_back(i, perm[i]);
      out.witness.emplace(val, std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  out.verify(u, v);
  return out;
}

namespace {

// Saturating state count for grouping one side by distinct values.
std::uint64_t state_count(const Sequence& seq) {
  std::uint64_t states = 1;
  for (std::uint32_t m : seq.multiplicities()) {
    if (m == 0) continue;
    if (states > std::numeric_limits<std::uint64_t>::max() / (m + 1)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    states *= m + 1;
  }
  return states;
}

struct GroupedSide {
  std::vector<Residue> values;        // distinct values, ascending
  std::vector<std::uint32_t> mult;    // multiplicities, parallel
  std::vector<std::uint32_t> stride;  // mixed-radix strides
  std::vector<std::uint32_t> offset;  // first canonical position per value
  std::uint32_t states = 1;
};

GroupedSide group_side(const Sequence& seq) {
  GroupedSide g;
  std::uint32_t pos = 0;
  for (Residue r = 0; r < seq.ring().n; ++r) {
    std::uint32_t m = seq.multiplicity(r);
    if (m == 0) continue;
    g.values.push_back(r);
    g.mult.push_back(m);
    g.stride.push_back(g.states);
    g.offset.push_back(pos);
    g.states *= m + 1;
    pos += m;
  }
  return g;
}

}  // namespace

WitnessedSet oracle_product_set(const Sequence& s, const Sequence& t,
                                std::uint64_t budget_words) {
  if (s.ring() != t.ring()) {
    throw UsageError("product set requires a common modulus");
  }
  const Ring& ring = s.ring();

  const std::uint32_t r = std::min(s.size(), t.size());
  if (r == 0) {
    // Empty matching: the empty sum.
    WitnessedSet out(ring);
    out.set.insert(0);
    out.witness.emplace(0, Matching{});
    return out;
  }

  // Group the cheaper side; the product set is symmetric.
  const bool swapped = state_count(s) < state_count(t);
  const Sequence& scanned = swapped ? t : s;
  const Sequence& grouped = swapped ? s : t;

  const std::uint64_t states64 = state_count(grouped);
  const std::uint32_t len = scanned.size();
  const std::uint32_t wpn = (ring.n + 63) / 64;
  const std::uint64_t need =
      states64 > (std::numeric_limits<std::uint64_t>::max() / wpn) / (len + 1)
          ? std::numeric_limits<std::uint64_t>::max()
          : states64 * wpn * (len + 1);
  if (need > budget_words) {
    throw BudgetError("product-set DP needs " + std::to_string(need) +
                      " words, budget is " + std::to_string(budget_words));
  }
  if (states64 > (std::uint64_t{1} << 31)) {
    throw BudgetError("product-set DP state space too large: " +
                      std::to_string(states64) + " states");
  }

  const GroupedSide g = group_side(grouped);
  const std::uint32_t states = g.states;
  const std::uint32_t k = static_cast<std::uint32_t>(g.values.size());
  const std::uint32_t max_skips = len - r;

  // Consumed-count per state index.
  std::vector<std::uint32_t> consumed(states, 0);
  for (std::uint32_t st = 0; st < states; ++st) {
    std::uint32_t c = 0;
    for (std::uint32_t j = 0; j < k; ++j) c += (st / g.stride[j]) % (g.mult[j] + 1);
    consumed[st] = c;
  }

  std::vector<std::uint64_t> dp(std::size_t(states) * wpn * (len + 1), 0);
  auto level = [&](std::uint32_t step) { return dp.data() + std::size_t(step) * states * wpn; };
  auto bits = [&](std::uint64_t* lvl, std::uint32_t st) { return lvl + std::size_t(st) * wpn; };
  auto has_bit = [&](const std::uint64_t* w, Residue v) {
    return (w[v >> 6] >> (v & 63)) & 1;
  };

  level(0)[0] = 1;  // state 0, residue 0: the empty partial sum

  const std::vector<Residue> scan_terms = scanned.terms();
  for (std::uint32_t step = 0; step < len; ++step) {
    const Residue gterm = scan_terms[step];
    std::uint64_t* cur = level(step);
    std::uint64_t* nxt = level(step + 1);
    for (std::uint32_t st = 0; st < states; ++st) {
      const std::uint64_t* w = bits(cur, st);
      bool any = false;
      for (std::uint32_t i = 0; i < wpn; ++i) any |= (w[i] != 0);
      if (!any) continue;
      const std::uint32_t c = consumed[st];
      // Skip this scanned term.
      if (step - c < max_skips) {
        std::uint64_t* dw = bits(nxt, st);
        for (std::uint32_t i = 0; i < wpn; ++i) dw[i] |= w[i];
      }
      // Consume one copy of a grouped value.
      if (c < r) {
        for (std::uint32_t j = 0; j < k; ++j) {
          if ((st / g.stride[j]) % (g.mult[j] + 1) == g.mult[j]) continue;
          const Residue shift = ring.mul(gterm, g.values[j]);
          detail::or_rotated_words(bits(nxt, st + g.stride[j]), w, ring.n, shift);
        }
      }
    }
  }

  WitnessedSet out(ring);
  std::uint64_t* last = level(len);
  for (std::uint32_t st = 0; st < states; ++st) {
    if (consumed[st] != r) continue;
    const std::uint64_t* w = bits(last, st);
    for (Residue v = 0; v < ring.n; ++v) {
      if (has_bit(w, v)) out.set.insert(v);
    }
  }

  // Witness reconstruction: walk levels backwards, preferring the smallest
  // feasible grouped value, then a skip.
  for (Residue target : out.set.members()) {
    std::uint32_t st = 0;
    bool found = false;
    for (std::uint32_t cand = 0; cand < states && !found; ++cand) {
      if (consumed[cand] == r && has_bit(bits(last, cand), target)) {
        st = cand;
        found = true;
      }
    }
    assert(found);

    Residue v = target;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> picks;  // (scan pos, value idx)
    for (std::uint32_t step = len; step-- > 0;) {
      const Residue gterm = scan_terms[step];
      std::uint64_t* prev = level(step);
      bool advanced = false;
      for (std::uint32_t j = 0; j < k && !advanced; ++j) {
        if ((st / g.stride[j]) % (g.mult[j] + 1) == 0) continue;
        const std::uint32_t pst = st - g.stride[j];
        const Residue pv = ring.sub(v, ring.mul(gterm, g.values[j]));
        if (has_bit(bits(prev, pst), pv)) {
          picks.emplace_back(step, j);
          st = pst;
          v = pv;
          advanced = true;
        }
      }
      if (!advanced) {
        // Must be a skip.
        assert(has_bit(bits(prev, st), v));
      }
    }
    assert(st == 0 && v == 0);

    // Assign concrete grouped-side positions: ascending scan position gets
    // the next unused copy of its value.
    std::sort(picks.begin(), picks.end());
    std::vector<std::uint32_t> next_copy(k, 0);
    Matching m;
    for (auto [pos, j] : picks) {
      std::uint32_t gpos = g.offset[j] + next_copy[j]++;
      if (swapped) {
        m.pairs.emplace_back(gpos, pos);
      } else {
        m.pairs.emplace_back(pos, gpos);
      }
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    out.witness.emplace(target, std::move(m));
  }

  out.verify(s, t);
  return out;
}

}  // namespace permsum
