#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordgraph/runner.hpp"
#include "ordgraph/schedule.hpp"

namespace ordgraph {

struct TuneOptions {
  int budget = 20;
  std::uint64_t seed = 1;
  int repetitions = 3;
  RunRequest request;  // algo, source/target, coordinates; the schedule field is ignored
  // Graphs with more edges are checked by cross-trial digest instead of the oracle.
  EdgeIndex oracle_edge_limit = 2'000'000;
  std::string graph_name;
};

struct TuneTrial {
  Schedule schedule;
  double millis = 0.0;  // median over repetitions
  bool valid = false;
  std::string note;
};

struct TuneReport {
  Algorithm algo = Algorithm::kSssp;
  std::string graph_name;
  std::vector<TuneTrial> trials;
  Schedule best;
  double best_millis = 0.0;
};

/// Every valid schedule for `algo` in the tuning grid: delta in powers of two
/// up to 2^17 (when coarsening is allowed), fusion thresholds
/// {100, 300, 1000, 3000, 10000}, open buckets {16, 32, 64, 128}, both
/// directions (DensePull only with in-edges) and both grains.
std::vector<Schedule> search_space(Algorithm algo, bool has_in_edges);

/// The schedules tune() will try, in order: the algorithm's default, one
/// random pick for each remaining strategy, then uniform random picks.
/// Deterministic for a fixed seed.
std::vector<Schedule> sample_schedules(Algorithm algo, bool has_in_edges, int budget, std::uint64_t seed);

/// Random search: run each sampled schedule `repetitions` times, check the
/// result and keep the fastest valid one. Throws std::runtime_error when no
/// trial is valid, ConfigError when the budget is below 1.
TuneReport tune(const Graph& g, const TuneOptions& options);

std::string to_json(const TuneReport& report);

}  // namespace ordgraph
