#include "permsum/analysis.hpp"

#include <algorithm>
#include <thread>

#include "permsum/gset.hpp"
#include "permsum/solver.hpp"

namespace permsum {

Sequence sample_bounded_sequence(const Ring& ring, std::uint32_t length,
                                 std::uint32_t max_mult, SplitMix64& rng) {
  if (max_mult * std::uint64_t(ring.n) < length) {
    throw UsageError("no sequence of that length fits the multiplicity bound");
  }
  const std::uint32_t slots = length + ring.n - 1;
  const std::uint32_t bars = ring.n - 1;
  while (true) {
    // Selection sampling of `bars` distinct slot indices, ascending.
    std::vector<std::uint32_t> mult(ring.n, 0);
    std::uint32_t need = bars, prev = 0, g = 0;
    for (std::uint32_t s = 0; s < slots && need > 0; ++s) {
      if (rng.below(slots - s) < need) {
        mult[g++] = s - prev;
        prev = s + 1;
        --need;
      }
    }
    mult[g] = slots - prev;
    Sequence out(ring, std::move(mult));
    if (out.max_multiplicity() <= max_mult) return out;
  }
}

CanonicalTriple canonicalize_triple(const Sequence& u) {
  const Ring& ring = u.ring();
  if (!ring.prime) {
    throw UsageError("triple canonicalization requires a prime modulus");
  }
  if (!u.square_free() || u.size() != 3) {
    throw UsageError("triple canonicalization requires a square-free triple");
  }
  std::vector<Residue> t = u.terms();
  Residue best_x = ring.n;
  Affine best_map{1, 0};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      int k = 3 - i - j;
      Residue alpha = ring.inv(ring.sub(t[j], t[i]));
      Affine f{alpha, ring.neg(ring.mul(alpha, t[i]))};
      Residue x = affine_apply(ring, f, t[k]);
      if (x < best_x) {
        best_x = x;
        best_map = f;
      }
    }
  }
  return CanonicalTriple{best_x, best_map};
}

namespace {

bool normalized_triple_is_ap(const Ring& ring, Residue x) {
  GSet u(ring, {0, 1, x});
  return ap_structure(u).is_ap;
}

}  // namespace

LemmaReport check_lemma(const Ring& ring) {
  if (!ring.prime || ring.n <= 3) {
    throw UsageError("lemma check requires a prime modulus above 3");
  }
  const std::uint32_t p = ring.n;
  const std::vector<Residue> roots = roots_z2_minus_z_plus_1(ring);
  auto is_root = [&roots](Residue z) {
    return std::find(roots.begin(), roots.end(), z) != roots.end();
  };

  // AP-ness of {0,1,x} depends only on x; precompute one row.
  std::vector<bool> ap_value(p, false);
  for (Residue x = 2; x < p; ++x) ap_value[x] = normalized_triple_is_ap(ring, x);

  LemmaReport report;
  report.p = p;
  report.min_size = p;
  for (Residue x = 2; x < p; ++x) {
    for (Residue y = 2; y < p; ++y) {
      GSet uv = triple_product_formula(ring, x, y);
      const std::uint32_t size = uv.size();
      ++report.pairs_checked;
      report.min_size = std::min(report.min_size, size);
      if (size < 4) {
        throw LemmaViolationError("normalized triple product has size " +
                                      std::to_string(size) + " < 4",
                                  x, y);
      }
      if (p > 7 && size == 4) {
        EqualityClass cls;
        if (ap_value[x] && ap_value[y]) {
          cls = EqualityClass::BOTH_AP;
        } else if (is_root(x) && is_root(y)) {
          cls = EqualityClass::ROOT_PAIR;
        } else {
          throw LemmaViolationError("unclassified size-4 equality case", x, y);
        }
        if (ap_structure(uv).is_ap) {
          throw LemmaViolationError(
              "size-4 equality case is an arithmetic progression", x, y);
        }
        report.equality_cases.push_back(EqualityCase{x, y, cls});
      }
    }
  }
  return report;
}

FamilyInstance make_family(int family, std::uint32_t n) {
  Ring ring = make_ring(n);
  switch (family) {
    case 1: {
      if (n < 3 || n % 2 == 0) {
        throw UsageError("family 1 requires an odd modulus of at least 3");
      }
      Sequence s1(ring);
      s1.add(0, n - 2);
      s1.add(1);
      s1.add(n - 1);
      Sequence s2(ring);
      for (Residue g = 0; g < n; ++g) s2.add(g);
      return FamilyInstance{1, ring, std::move(s1), std::move(s2),
                            FamilyProperty::ZERO_NOT_IN_PRODUCT};
    }
    case 2: {
      if (n % 4 != 3) {
        throw UsageError("family 2 requires a modulus = 3 mod 4");
      }
      Sequence s(ring);
      s.add(0, (n - 1) / 2);
      s.add(1, (n - 1) / 2);
      s.add((n + 1) / 2);
      Sequence s2 = s;
      return FamilyInstance{2, ring, std::move(s), std::move(s2),
                            FamilyProperty::ZERO_NOT_IN_PRODUCT};
    }
    case 3: {
      if (n <= 7) {
        throw UsageError("family 3 requires a modulus above 7");
      }
      const std::uint32_t x = (2 * n + 2 + 4) / 5;  // ceil((2n+2)/5)
      Sequence s(ring);
      s.add(0, x);
      s.add(1, x);
      s.add(2, n - 2 * x);
      Sequence s2 = s;
      FamilyInstance inst{3,
                          ring,
                          std::move(s),
                          std::move(s2),
                          FamilyProperty::PRODUCT_NOT_FULL,
                          x,
                          3 * n - 5 * x + 1};
      return inst;
    }
    default:
      throw UsageError("family must be 1, 2 or 3");
  }
}

bool verify_family(const FamilyInstance& inst, std::uint64_t budget_words) {
  WitnessedSet product = oracle_product_set(inst.s1, inst.s2, budget_words);
  switch (inst.property) {
    case FamilyProperty::ZERO_NOT_IN_PRODUCT:
      return !product.set.contains(0);
    case FamilyProperty::PRODUCT_NOT_FULL: {
      if (product.set.size() > inst.size_bound) return false;
      // Containment in the integer interval [n-2x, 4(n-2x)+x], reduced.
      const Ring& ring = inst.ring;
      GSet allowed(ring);
      const std::uint64_t lo = ring.n - 2 * inst.x;
      const std::uint64_t hi = 4 * (ring.n - 2 * std::uint64_t(inst.x)) + inst.x;
      for (std::uint64_t v = lo; v <= hi; ++v) {
        allowed.insert(static_cast<Residue>(v % ring.n));
      }
      for (Residue g : product.set.members()) {
        if (!allowed.contains(g)) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

// All multiplicity vectors over Z/pZ with sum = p and max <= bound.
void enumerate_bounded(const Ring& ring, std::uint32_t bound, Residue g,
                       std::uint32_t remaining, Sequence& acc,
                       std::vector<Sequence>& out) {
  if (g == ring.n) {
    if (remaining == 0) out.push_back(acc);
    return;
  }
  // Feasibility cut: the residues left can absorb at most bound each.
  if (std::uint64_t(bound) * (ring.n - g) < remaining) return;
  for (std::uint32_t m = 0; m <= std::min(bound, remaining); ++m) {
    if (m) acc.add(g, m);
    enumerate_bounded(ring, bound, g + 1, remaining - m, acc, out);
    if (m) acc.remove(g, m);
  }
}

std::uint32_t hypothesis_bound(const Ring& ring) {
  if (ring.n == 5 || ring.n == 7) return 2;
  return (2 * ring.n + 1) / 5;
}

void check_instance(const Sequence& s1, const Sequence& s2,
                    std::uint64_t index, std::vector<CampaignFailure>& failures,
                    std::uint64_t& targets) {
  const Ring& ring = s1.ring();
  for (Residue g = 0; g < ring.n; ++g) {
    ++targets;
    try {
      SolveReport report = solve(s1, s2, g);
      if (report.witness.value(s1, s2) != g) {
        failures.push_back(CampaignFailure{index, format_sequence(s1),
                                           format_sequence(s2), g,
                                           "witness recomputation mismatch"});
      }
    } catch (const Error& e) {
      failures.push_back(CampaignFailure{index, format_sequence(s1),
                                         format_sequence(s2), g, e.what()});
    }
  }
}

// Shards [0, total) across `jobs` workers; merge is by concatenation in
// worker order, so the outcome does not depend on scheduling.
template <typename Work>
void run_sharded(std::uint64_t total, unsigned jobs, Work&& work,
                 std::vector<CampaignFailure>& failures,
                 std::uint64_t& targets) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || total < 2 * jobs) {
    work(0, total, failures, targets);
    return;
  }
  std::vector<std::vector<CampaignFailure>> shard_failures(jobs);
  std::vector<std::uint64_t> shard_targets(jobs, 0);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, w, lo, hi] {
      work(lo, hi, shard_failures[w], shard_targets[w]);
    });
  }
  for (auto& t : threads) t.join();
  for (unsigned w = 0; w < jobs; ++w) {
    targets += shard_targets[w];
    failures.insert(failures.end(), shard_failures[w].begin(),
                    shard_failures[w].end());
  }
}

}  // namespace

CampaignReport verify_theorem(const Ring& ring, const CampaignMode& mode) {
  if (!ring.prime || ring.n < 5) {
    throw UsageError("theorem verification requires a prime modulus >= 5");
  }
  CampaignReport report;
  report.p = ring.n;
  report.exhaustive = mode.exhaustive;
  report.algorithm = kSamplingAlgorithm;
  report.seed = mode.seed;

  if (mode.exhaustive) {
    if (ring.n != 5 && ring.n != 7) {
      throw BudgetError("exhaustive verification is budgeted for p in {5, 7} only");
    }
    std::vector<Sequence> all;
    Sequence acc(ring);
    enumerate_bounded(ring, hypothesis_bound(ring), 0, ring.n, acc, all);
    const std::uint64_t m = all.size();
    const std::uint64_t total = m * (m + 1) / 2;  // pairs up to swap
    report.instances_checked = total;

    auto work = [&](std::uint64_t lo, std::uint64_t hi,
                    std::vector<CampaignFailure>& failures,
                    std::uint64_t& targets) {
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        // Unrank the (i <= j) pair.
        std::uint64_t i = 0, base = 0;
        while (base + (m - i) <= idx) {
          base += m - i;
          ++i;
        }
        std::uint64_t j = i + (idx - base);
        check_instance(all[i], all[j], idx, failures, targets);
      }
    };
    run_sharded(total, mode.jobs, work, report.failures,
                report.targets_checked);
  } else {
    report.samples = mode.samples;
    report.instances_checked = mode.samples;
    const std::uint32_t bound = hypothesis_bound(ring);

    auto work = [&](std::uint64_t lo, std::uint64_t hi,
                    std::vector<CampaignFailure>& failures,
                    std::uint64_t& targets) {
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        SplitMix64 rng(mode.seed ^ (0x9E3779B97F4A7C15ull * (idx + 1)));
        Sequence s1 = sample_bounded_sequence(ring, ring.n, bound, rng);
        Sequence s2 = sample_bounded_sequence(ring, ring.n, bound, rng);
        check_instance(s1, s2, idx, failures, targets);
      }
    };
    run_sharded(mode.samples, mode.jobs, work, report.failures,
                report.targets_checked);
  }

  std::sort(report.failures.begin(), report.failures.end(),
            [](const CampaignFailure& a, const CampaignFailure& b) {
              return std::tie(a.instance, a.target) <
                     std::tie(b.instance, b.target);
            });
  return report;
}

}  // namespace permsum
