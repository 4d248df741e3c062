#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ordgraph/parallel.hpp"
#include "ordgraph/types.hpp"

namespace ordgraph {

enum class UpdateStrategy { kEagerWithFusion, kEagerNoFusion, kLazy, kLazyConstantSum };
enum class TraversalDirection { kSparsePush, kDensePull };
enum class Algorithm { kSssp, kWbfs, kPpsp, kAstar, kKcore, kSetCover };

/// Optimization configuration for one applyUpdatePriority site. Changing a
/// schedule changes runtime and round counts, never results.
struct Schedule {
  UpdateStrategy strategy = UpdateStrategy::kLazy;
  Priority delta = 1;
  std::size_t fusion_threshold = 1000;
  std::size_t num_open_buckets = 128;
  TraversalDirection direction = TraversalDirection::kSparsePush;
  ParallelGrain grain = ParallelGrain::kDynamic;
  bool dedup = true;

  bool eager() const {
    return strategy == UpdateStrategy::kEagerWithFusion || strategy == UpdateStrategy::kEagerNoFusion;
  }
  bool fusion() const { return strategy == UpdateStrategy::kEagerWithFusion; }
  bool pull() const { return direction == TraversalDirection::kDensePull; }

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct AlgorithmTraits {
  bool allows_coarsening;   // delta other than 1
  bool allows_eager;
  bool constant_sum;        // update is a constant increment (histogram-eligible)
  bool has_direction;       // runs applyUpdatePriority (push/pull choice)
  bool needs_target;
  bool needs_coordinates;
};

AlgorithmTraits traits(Algorithm algo);

std::string_view to_string(Algorithm algo);
std::string_view to_string(UpdateStrategy strategy);
std::string_view to_string(TraversalDirection direction);
std::string_view to_string(ParallelGrain grain);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::optional<UpdateStrategy> parse_strategy(std::string_view name);
std::optional<TraversalDirection> parse_direction(std::string_view name);
std::optional<ParallelGrain> parse_grain(std::string_view name);

/// Schedules used when nothing is overridden: eager with fusion (threshold
/// 1000) for the shortest-path family, lazy with 16 open buckets for k-core and
/// lazy with 128 open buckets for set cover.
Schedule default_schedule(Algorithm algo);

/// Compact one-line form, e.g. "eager_with_fusion delta=4 threshold=1000 ...".
std::string describe(const Schedule& s);
/// JSON object text with every schedule field.
std::string to_json(const Schedule& s);

/// nullopt when the schedule can run `algo`; otherwise a diagnostic naming
/// every violated rule.
std::optional<std::string> validate_schedule(Algorithm algo, const Schedule& s, bool has_in_edges = true);
/// Throws ConfigError carrying the diagnostic.
void require_valid(Algorithm algo, const Schedule& s, bool has_in_edges = true);

}  // namespace ordgraph
