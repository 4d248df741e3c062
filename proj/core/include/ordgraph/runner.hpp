#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordgraph/algorithms.hpp"
#include "ordgraph/coordinates.hpp"
#include "ordgraph/graph.hpp"
#include "ordgraph/round_stats.hpp"
#include "ordgraph/schedule.hpp"

namespace ordgraph {

struct RunRequest {
  Algorithm algo = Algorithm::kSssp;
  Schedule schedule;
  VertexId source = 0;
  std::optional<VertexId> target;
  const CoordinateTable* coords = nullptr;  // astar only
  double epsilon = kDefaultSetCoverEpsilon;
  std::uint64_t seed = 0;
  bool trace = false;
};

struct RunOutcome {
  // Per-vertex distances (sssp, wbfs) or coreness (kcore); the single
  // distance for ppsp and astar; empty for setcover.
  std::vector<Priority> values;
  std::vector<VertexId> chosen;      // setcover
  std::vector<std::uint32_t> gains;  // setcover, aligned with chosen
  RoundStats stats;
  double millis = 0.0;
  bool weight_range_warning = false;
  std::uint64_t digest = 0;
};

/// Dispatches to the algorithm, timing the call. Throws ConfigError on an
/// invalid schedule or missing target/coordinates.
RunOutcome run_algorithm(const Graph& g, const RunRequest& request);

/// FNV-1a over the values.
std::uint64_t digest_values(std::span<const Priority> values);
std::uint64_t digest_ids(std::span<const VertexId> ids);

struct Verification {
  bool ok = true;
  std::string detail;
};

/// Compares the outcome with the serial oracle: exact distances / coreness;
/// for set cover a valid cover in which every chosen set gained an element and
/// whose size is at most twice the greedy cover.
Verification verify_outcome(const Graph& g, const RunRequest& request, const RunOutcome& outcome);

}  // namespace ordgraph
