// Serial reference kernels against their OpenMP versions.
//   bench_kernels --benchmark_filter=Build
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "metallic/graph.hpp"
#include "metallic/metrics.hpp"

namespace {

using metallic::BuildKernel;
using metallic::MetallicCube;

void build(benchmark::State& state, BuildKernel kernel) {
  const auto a = static_cast<unsigned>(state.range(0));
  const auto n = static_cast<unsigned>(state.range(1));
  std::size_t vertices = 0;
  for (auto _ : state) {
    auto g = MetallicCube::build(a, n, metallic::kDefaultVertexCap, kernel);
    vertices = g.size();
    benchmark::DoNotOptimize(g);
  }
  state.counters["vertices"] = static_cast<double>(vertices);
  state.counters["threads"] = kernel == BuildKernel::parallel ? omp_get_max_threads() : 1;
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * vertices));
}

void BM_BuildSerial(benchmark::State& s) { build(s, BuildKernel::serial); }
void BM_BuildParallel(benchmark::State& s) { build(s, BuildKernel::parallel); }

template <class Kernel>
void eccentricity(benchmark::State& state, Kernel kernel, bool parallel) {
  const auto g = MetallicCube::build(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    auto e = kernel(g);
    benchmark::DoNotOptimize(e);
  }
  state.counters["vertices"] = static_cast<double>(g.size());
  state.counters["threads"] = parallel ? omp_get_max_threads() : 1;
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.size()));
}

void BM_EccentricitySerial(benchmark::State& s) { eccentricity(s, metallic::eccentricities_serial, false); }
void BM_EccentricityParallel(benchmark::State& s) { eccentricity(s, metallic::eccentricities_parallel, true); }

}  // namespace

BENCHMARK(BM_BuildSerial)->Args({3, 10})->Args({6, 8})->Args({2, 16})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildParallel)->Args({3, 10})->Args({6, 8})->Args({2, 16})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EccentricitySerial)->Args({3, 5})->Args({4, 5})->Args({2, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EccentricityParallel)->Args({3, 5})->Args({4, 5})->Args({2, 9})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
