#include <benchmark/benchmark.h>

#include <euclab/census.hpp>
#include <euclab/euclid.hpp>
#include <euclab/factorpat.hpp>
#include <euclab/genlead.hpp>
#include <euclab/rng.hpp>

namespace {

using namespace euclab;

Poly random_monic(const FieldCtx& F, SplitMix64& rng, std::size_t degree) {
  std::vector<FieldElem> c(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) c[i] = FieldElem{rng.below(F.modulus())};
  c[degree] = F.one();
  return Poly(std::move(c));
}

void BM_EuclidTrace(benchmark::State& state) {
  const FieldCtx F(67);
  SplitMix64 rng(1);
  const Poly g = random_monic(F, rng, state.range(0));
  const Poly f = random_monic(F, rng, state.range(0) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(euclid_trace(F, g, f));
}
BENCHMARK(BM_EuclidTrace)->Arg(7)->Arg(17)->Arg(64);

void BM_EuclidStats(benchmark::State& state) {
  const FieldCtx F(67);
  SplitMix64 rng(1);
  const Poly g = random_monic(F, rng, state.range(0));
  const Poly f = random_monic(F, rng, state.range(0) / 2);
  EuclidWorkspace ws;
  for (auto _ : state) benchmark::DoNotOptimize(euclid_stats(F, g.coeffs(), f.coeffs(), ws));
}
BENCHMARK(BM_EuclidStats)->Arg(7)->Arg(17)->Arg(64);

void BM_Census(benchmark::State& state) {
  const FieldCtx F(state.range(0));
  SplitMix64 rng(2);
  const Poly g = random_monic(F, rng, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_distribution(F, g, 3));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
}
BENCHMARK(BM_Census)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_GenericLead(benchmark::State& state) {
  const FieldCtx F(67);
  SplitMix64 rng(3);
  const Poly g = random_monic(F, rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generic_lead(F, g, 3));
}
BENCHMARK(BM_GenericLead)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
  const FieldCtx F(409);
  SplitMix64 rng(4);
  const Poly g = random_monic(F, rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(profile(F, g));
}
BENCHMARK(BM_Profile)->Arg(9)->Arg(17)->Arg(40);

}  // namespace
BENCHMARK_MAIN();
