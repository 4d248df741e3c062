#include <benchmark/benchmark.h>

#include "ordgraph/algorithms.hpp"
#include "ordgraph/generators.hpp"

namespace {

using namespace ordgraph;

void BM_Kcore(benchmark::State& state) {
  static const Graph g = make_uniform_random(1 << 15, 1 << 19, 1, 2, 7, {.symmetrize = true, .build_in_edges = true});
  Schedule s = default_schedule(Algorithm::kKcore);
  s.strategy = static_cast<UpdateStrategy>(state.range(0));
  s.direction = static_cast<TraversalDirection>(state.range(1));
  for (auto _ : state) {
    auto r = kcore(g, s);
    benchmark::DoNotOptimize(r.coreness.data());
  }
  state.SetLabel(std::string(to_string(s.strategy)) + "/" + std::string(to_string(s.direction)));
}

BENCHMARK(BM_Kcore)
    ->Args({static_cast<int>(UpdateStrategy::kLazy), static_cast<int>(TraversalDirection::kSparsePush)})
    ->Args({static_cast<int>(UpdateStrategy::kLazyConstantSum), static_cast<int>(TraversalDirection::kSparsePush)})
    ->Args({static_cast<int>(UpdateStrategy::kLazyConstantSum), static_cast<int>(TraversalDirection::kDensePull)})
    ->Unit(benchmark::kMillisecond);

}  // namespace
