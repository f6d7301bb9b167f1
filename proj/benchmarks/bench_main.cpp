#include <benchmark/benchmark.h>

#include "permsum/analysis.hpp"
#include "permsum/gset.hpp"
#include "permsum/solver.hpp"

using namespace permsum;

namespace {

GSet random_half_set(const Ring& ring, SplitMix64& rng) {
  GSet out(ring);
  for (Residue g = 0; g < ring.n; ++g) {
    if (rng.next() & 1) out.insert(g);
  }
  return out;
}

void BM_SumsetKernel(benchmark::State& state) {
  Ring ring = make_ring(static_cast<std::uint32_t>(state.range(0)));
  SplitMix64 rng(1);
  GSet a = random_half_set(ring, rng);
  GSet b = random_half_set(ring, rng);
  for (auto _ : state) {
    GSet s = sumset(a, b);
    benchmark::DoNotOptimize(s.words().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SumsetKernel)->Arg(1009)->Arg(10007)->Arg(100003)->Complexity();

void BM_OracleProductSet(benchmark::State& state) {
  // Family-2 shape: two heavy values and one singleton.
  const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
  FamilyInstance inst = make_family(2, n);
  for (auto _ : state) {
    WitnessedSet ws = oracle_product_set(inst.s1, inst.s2);
    benchmark::DoNotOptimize(ws.set.words().data());
  }
}
BENCHMARK(BM_OracleProductSet)->Arg(11)->Arg(19)->Arg(31)->Arg(43);

void BM_Solve(benchmark::State& state) {
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  Ring ring = make_ring(p);
  const std::uint32_t bound = (p == 5 || p == 7) ? 2 : (2 * p + 1) / 5;
  SplitMix64 rng(2);
  Sequence s1 = sample_bounded_sequence(ring, p, bound, rng);
  Sequence s2 = sample_bounded_sequence(ring, p, bound, rng);
  Residue target = 0;
  for (auto _ : state) {
    SolveReport report = solve(s1, s2, target);
    benchmark::DoNotOptimize(report.witness.pairs.data());
    target = (target + 1) % p;
  }
}
BENCHMARK(BM_Solve)->Arg(11)->Arg(101)->Arg(1009);

void BM_Factorize(benchmark::State& state) {
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(0));
  Ring ring = make_ring(p);
  Layout layout = theorem_layout(ring);
  SplitMix64 rng(3);
  Sequence s = sample_bounded_sequence(ring, p, layout.num_blocks, rng);
  for (auto _ : state) {
    BlockFactorization f = factorize(s, layout.num_blocks, layout.sizes);
    benchmark::DoNotOptimize(f.blocks.data());
  }
}
BENCHMARK(BM_Factorize)->Arg(101)->Arg(1009);

void BM_CheckLemma(benchmark::State& state) {
  Ring ring = make_ring(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    LemmaReport report = check_lemma(ring);
    benchmark::DoNotOptimize(report.pairs_checked);
  }
}
BENCHMARK(BM_CheckLemma)->Arg(101)->Arg(499);

}  // namespace

BENCHMARK_MAIN();
