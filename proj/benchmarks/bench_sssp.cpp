#include <benchmark/benchmark.h>

#include "ordgraph/algorithms.hpp"
#include "ordgraph/generators.hpp"

namespace {

using namespace ordgraph;

const Graph& path_graph(VertexId n) {
  static VertexId built = 0;
  static Graph g;
  if (built != n) {
    g = make_path(n, 1);
    built = n;
  }
  return g;
}

const Graph& random_graph() {
  static const Graph g = make_uniform_random(1 << 16, 1 << 20, 1, 1000, 42);
  return g;
}

void run_sssp(benchmark::State& state, const Graph& g, UpdateStrategy strategy, Priority delta) {
  Schedule s = default_schedule(Algorithm::kSssp);
  s.strategy = strategy;
  s.delta = delta;
  RoundStats last;
  for (auto _ : state) {
    auto r = sssp(g, 0, s);
    benchmark::DoNotOptimize(r.dist.data());
    last = r.stats;
  }
  state.counters["rounds"] = static_cast<double>(last.rounds);
  state.counters["fused_rounds"] = static_cast<double>(last.fused_rounds);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * last.edges_relaxed));
}

void BM_PathSssp(benchmark::State& state) {
  const auto strategy = static_cast<UpdateStrategy>(state.range(0));
  run_sssp(state, path_graph(static_cast<VertexId>(state.range(1))), strategy, 1 << 13);
  state.SetLabel(std::string(to_string(strategy)));
}

void BM_RandomSssp(benchmark::State& state) {
  const auto strategy = static_cast<UpdateStrategy>(state.range(0));
  run_sssp(state, random_graph(), strategy, static_cast<Priority>(state.range(1)));
  state.SetLabel(std::string(to_string(strategy)));
}

void strategies(benchmark::internal::Benchmark* b, std::vector<std::int64_t> second) {
  for (auto strategy : {UpdateStrategy::kEagerWithFusion, UpdateStrategy::kEagerNoFusion, UpdateStrategy::kLazy}) {
    for (auto v : second) b->Args({static_cast<std::int64_t>(strategy), v});
  }
}

BENCHMARK(BM_PathSssp)->Apply([](auto* b) { strategies(b, {100'000, 1'000'000}); })->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSssp)->Apply([](auto* b) { strategies(b, {4, 64, 1024}); })->Unit(benchmark::kMillisecond);

}  // namespace
