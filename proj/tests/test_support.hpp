#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ordgraph/generators.hpp"
#include "ordgraph/graph.hpp"
#include "ordgraph/schedule.hpp"

namespace ordgraph::testing {

// Small uniform_random instance of the verification corpus.
inline Graph corpus_graph(std::uint64_t seed, BuildOptions build = {.symmetrize = false, .build_in_edges = true}) {
  return make_uniform_random(64, 512, 1, 1000, seed, build);
}

inline Graph graph_of(VertexId n, std::vector<Edge> edges, BuildOptions build = {}) {
  return Graph::from_edges(n, edges, build);
}

// Random set-cover incidence graph: sets are vertices [0, sets), elements are
// [sets, sets + elements); every set gets 1..max_size random elements.
inline Graph random_incidence(std::uint64_t seed, VertexId sets, VertexId elements, VertexId max_size) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> size_dist(1, max_size);
  std::uniform_int_distribution<VertexId> element_dist(0, elements - 1);
  std::vector<Edge> edges;
  for (VertexId s = 0; s < sets; ++s) {
    const VertexId k = size_dist(rng);
    for (VertexId i = 0; i < k; ++i) edges.push_back({s, sets + element_dist(rng), 1});
  }
  return Graph::from_edges(sets + elements, edges);
}

// Every valid (strategy x direction) combination for the algorithm, with
// other fields taken from its default schedule.
inline std::vector<Schedule> strategy_direction_matrix(Algorithm algo, Priority delta = 0) {
  std::vector<Schedule> out;
  for (UpdateStrategy strategy : {UpdateStrategy::kEagerWithFusion, UpdateStrategy::kEagerNoFusion,
                                  UpdateStrategy::kLazy, UpdateStrategy::kLazyConstantSum}) {
    for (TraversalDirection direction : {TraversalDirection::kSparsePush, TraversalDirection::kDensePull}) {
      Schedule s = default_schedule(algo);
      s.strategy = strategy;
      s.direction = direction;
      if (delta > 0 && traits(algo).allows_coarsening) s.delta = delta;
      if (!validate_schedule(algo, s)) out.push_back(s);
    }
  }
  return out;
}

inline constexpr int kThreadCounts[] = {1, 4, 8};

}  // namespace ordgraph::testing
