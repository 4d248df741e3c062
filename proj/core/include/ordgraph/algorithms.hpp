#pragma once

#include <cstdint>
#include <vector>

#include "ordgraph/coordinates.hpp"
#include "ordgraph/graph.hpp"
#include "ordgraph/round_stats.hpp"
#include "ordgraph/schedule.hpp"

namespace ordgraph {

struct SsspResult {
  std::vector<Priority> dist;  // kInfinity when unreachable
  RoundStats stats;
  bool weight_range_warning = false;  // wbfs only: some weight outside [1, ceil(log2 n))
};

struct DistanceResult {
  Priority distance = kInfinity;
  RoundStats stats;
};

struct CorenessResult {
  std::vector<Priority> coreness;
  RoundStats stats;
};

struct SetCoverResult {
  std::vector<VertexId> chosen;           // ascending set ids
  std::vector<std::uint32_t> gains;       // gains[i]: elements newly covered by chosen[i] when selected
  std::vector<std::uint8_t> covered;      // per vertex, meaningful for element vertices
  RoundStats stats;
};

/// Delta-stepping over the bucket queue selected by `s`. Throws ConfigError
/// for an invalid schedule or out-of-range source.
SsspResult sssp(const Graph& g, VertexId source, const Schedule& s, bool trace = false);

/// Unit-width buckets (delta must be 1). Zero weights are rejected with
/// std::domain_error; weights outside [1, ceil(log2 n)) only set the warning.
SsspResult wbfs(const Graph& g, VertexId source, const Schedule& s, bool trace = false);

/// Shortest distance to `target`, stopping once the bucket about to be
/// processed satisfies bucket * delta >= dist[target].
DistanceResult ppsp(const Graph& g, VertexId source, VertexId target, const Schedule& s, bool trace = false);

/// floor(euclid(v, target) / scale) with scale = max over edges of
/// euclid(u, v) / w(u, v); all zeros when that maximum is 0 or unbounded.
/// Throws ConfigError when a coordinate is missing.
std::vector<Priority> astar_heuristic(const Graph& g, const CoordinateTable& coords, VertexId target);

DistanceResult astar(const Graph& g, const CoordinateTable& coords, VertexId source, VertexId target,
                     const Schedule& s, bool trace = false);
/// A* with a caller-supplied heuristic (one value per vertex).
DistanceResult astar(const Graph& g, const std::vector<Priority>& heuristic, VertexId source, VertexId target,
                     const Schedule& s, bool trace = false);

/// Coreness by bucketed peeling with priorities starting at out-degree.
CorenessResult kcore(const Graph& g, const Schedule& s, bool trace = false);

inline constexpr double kDefaultSetCoverEpsilon = 0.01;

/// Unweighted set cover over an incidence graph: vertex s with out-edges is a
/// set covering its out-neighbors. Elements without an incident set stay
/// uncovered.
SetCoverResult set_cover(const Graph& incidence, const Schedule& s, double epsilon = kDefaultSetCoverEpsilon,
                         std::uint64_t seed = 0, bool trace = false);

// Serial oracles.
std::vector<Priority> dijkstra_oracle(const Graph& g, VertexId source);
std::vector<Priority> kcore_oracle(const Graph& g);
std::vector<VertexId> greedy_setcover_oracle(const Graph& incidence);

/// True when the union of `chosen` covers every element with an incident set.
bool is_valid_cover(const Graph& incidence, const std::vector<VertexId>& chosen);

}  // namespace ordgraph
