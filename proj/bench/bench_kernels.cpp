// Serial reference vs OpenMP kernels. Thread count for the omp variants is the
// benchmark argument.

#include <benchmark/benchmark.h>

#include "mpp/generator.hpp"
#include "mpp/kernels.hpp"

namespace {

using namespace mpp;

const std::vector<MonotonePath>& paths_6_2() {
  static const auto paths = collect_monotone_paths(6, 2, default_direction(6));
  return paths;
}

const std::vector<EmbeddedPoint>& cloud_5_2() {
  static const auto cloud = [] {
    const auto c = default_direction(5);
    std::vector<EmbeddedPoint> out;
    std::size_t i = 0;
    for (const auto& p : collect_monotone_paths(5, 2, c)) out.push_back(psi_embed(p, c, i++));
    return out;
  }();
  return cloud;
}

const std::vector<LatticePath>& level_8() {
  static const auto level = generate_coherent(8);
  return level;
}

void BM_CoherenceSerial(benchmark::State& state) {
  const auto c = default_direction(6);
  for (auto _ : state) benchmark::DoNotOptimize(serial::coherence_census(paths_6_2(), c));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(paths_6_2().size()));
}

void BM_CoherenceOmp(benchmark::State& state) {
  const auto c = default_direction(6);
  for (auto _ : state) benchmark::DoNotOptimize(omp::coherence_census(paths_6_2(), c, static_cast<int>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(paths_6_2().size()));
}

void BM_ExtremenessSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::extremeness_census(cloud_5_2()));
}

void BM_ExtremenessOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(omp::extremeness_census(cloud_5_2(), static_cast<int>(state.range(0))));
}

void BM_ExtendSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::extend_level(level_8()));
}

void BM_ExtendOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(omp::extend_level(level_8(), static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_CoherenceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoherenceOmp)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtremenessSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtremenessOmp)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtendSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtendOmp)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
