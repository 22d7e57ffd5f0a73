#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "densekit/generators.hpp"
#include "densekit/mwu.hpp"
#include "densekit/peeling.hpp"

using namespace densekit;

namespace {

const Graph& bench_graph(std::int64_t n) {
  static std::vector<std::pair<std::int64_t, Graph>> cache;
  for (const auto& [k, g] : cache) {
    if (k == n) return g;
  }
  // Average degree about 16.
  cache.emplace_back(n, gen::erdos_renyi(static_cast<VertexId>(n), 16.0 / static_cast<double>(n), 11));
  return cache.back().second;
}

template <bool Parallel>
void BM_Assign(benchmark::State& state) {
  const auto& g = bench_graph(state.range(0));
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<double> x(n);
  for (std::size_t v = 0; v < n; ++v) x[v] = static_cast<double>((v * 2654435761u) % 1000) + 1.0;
  std::vector<std::uint8_t> to_v(static_cast<std::size_t>(g.m()));
  std::vector<double> loads(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      mwu::kernels::assign_parallel(g, x, to_v, loads);
    } else {
      mwu::kernels::assign_serial(g, x, to_v, loads);
    }
    benchmark::DoNotOptimize(loads.data());
  }
  state.SetItemsProcessed(state.iterations() * g.m());
}

template <bool Parallel>
void BM_MwuSolve(benchmark::State& state) {
  const auto& g = bench_graph(state.range(0));
  mwu::MwuOptions options;
  options.max_iters = 50;
  options.parallel = Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(mwu::mwu_solve(g, options).max_load);
}

template <MinTracker Tracker>
void BM_GreedyPP(benchmark::State& state) {
  const auto& g = bench_graph(state.range(0));
  GreedyPPOptions options{.tracker = Tracker};
  for (auto _ : state) benchmark::DoNotOptimize(greedy_pp(g, 10, options).best_density);
}

}  // namespace

BENCHMARK(BM_Assign<false>)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_Assign<true>)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_MwuSolve<false>)->Arg(1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MwuSolve<true>)->Arg(1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GreedyPP<MinTracker::buckets>)->Arg(1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GreedyPP<MinTracker::heap>)->Arg(1 << 12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
