#include "syz/constructions.hpp"
#include "syz/slope.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_ClosureConstruction1(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  syz::MonomialSet s =
      syz::construction1(syz::default_params(n, syz::min_degree_for_interval(n)));
  for (auto _ : state) benchmark::DoNotOptimize(syz::mu_max_closure(s));
  state.SetLabel("size " + std::to_string(s.size()));
}
BENCHMARK(BM_ClosureConstruction1)->DenseRange(2, 5);

void BM_BruteConstruction1(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  syz::MonomialSet s =
      syz::construction1(syz::default_params(n, syz::min_degree_for_interval(n)));
  for (auto _ : state) benchmark::DoNotOptimize(syz::mu_max_bruteforce(s));
  state.SetLabel("size " + std::to_string(s.size()));
}
BENCHMARK(BM_BruteConstruction1)->DenseRange(2, 4); // size 21 is already ~2^21 subsets

void BM_ClosureE91(benchmark::State& state) {
  syz::MonomialSet s = syz::e91_generators(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(syz::mu_max_closure(s));
}
BENCHMARK(BM_ClosureE91)->Arg(30)->Arg(120)->Arg(1200);

void BM_BruteE91(benchmark::State& state) {
  syz::MonomialSet s = syz::e91_generators(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(syz::mu_max_bruteforce(s));
}
BENCHMARK(BM_BruteE91)->Arg(30)->Arg(120)->Arg(1200);

} // namespace

BENCHMARK_MAIN();
