#include "taquin/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace taquin;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "openmp"); }

std::vector<Partition> shapes_up_to(int n_max) {
  std::vector<Partition> out;
  for (int n = 1; n <= n_max; ++n)
    for (const Partition& p : partitions_of(n)) out.push_back(p);
  return out;
}

void BM_SkewCountTable(benchmark::State& state) {
  const std::vector<Partition> outers = shapes_up_to(9);
  const std::vector<Partition> inners = {Partition{2}, Partition{1, 1}, Partition{3}, Partition{2, 1},
                                         Partition{4}, Partition{2, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(skew_count_table(outers, inners, mode(state)));
  label(state);
}

void BM_InnerShapeHistograms(benchmark::State& state) {
  std::vector<Tableau> tableaux;
  for (const Partition& lambda : partitions_of(7))
    for_each_standard_tableau(lambda, [&](const Tableau& t) { tableaux.push_back(t); });
  for (auto _ : state) benchmark::DoNotOptimize(inner_shape_histograms(tableaux, 3, mode(state)));
  label(state);
}

void BM_RoundTrips(benchmark::State& state) {
  const std::vector<SlideCase> cases = exhaustive_slide_cases(6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_round_trips(cases, mode(state)));
  label(state);
}

void BM_Separation(benchmark::State& state) {
  const std::vector<SeparationCase> cases = exhaustive_separation_cases(6);
  for (auto _ : state) benchmark::DoNotOptimize(check_separation(cases, mode(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_SkewCountTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InnerShapeHistograms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoundTrips)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Separation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
