#pragma once

#include <cstdint>
#include <vector>

#include "ordgraph/eager_bucket_queue.hpp"
#include "ordgraph/lazy_bucket_queue.hpp"
#include "ordgraph/traversal.hpp"

namespace ordgraph::detail {

void check_vertex(const Graph& g, VertexId v, const char* what);

inline PriorityState initial_distances(const Graph& g, VertexId source, const Schedule& s,
                                       Priority source_priority = 0) {
  std::vector<Priority> values(g.num_vertices(), kInfinity);
  values[source] = source_priority;
  return PriorityState(std::move(values), PriorityOrder::kLowerFirst, BucketMapping::linear(s.delta));
}

inline constexpr auto relax_min = [](VertexId src, VertexId dst, Weight w, auto& up) {
  const std::int64_t candidate = std::int64_t{up.priority(src)} + w;
  if (candidate < kInfinity) up.update_min(dst, static_cast<Priority>(candidate));
};

/// Runs the ordered loop for a lower_first search seeded at `source` on the
/// queue kind the schedule asks for.
template <typename Udf, typename Stop>
RoundStats run_shortest_paths(const Graph& g, PriorityState& state, VertexId source, const Schedule& s, bool trace,
                              Udf udf, Stop stop) {
  RoundStats stats;
  if (s.eager()) {
    EagerBucketQueue queue(state, num_threads(), s.fusion_threshold, s.num_open_buckets);
    queue.enable_trace(trace);
    queue.insert(0, source);
    ordered_process_loop(g, queue, s, udf, stop, stats);
  } else {
    LazyBucketQueue queue(state, s.num_open_buckets);
    queue.enable_trace(trace);
    queue.insert(source);
    lazy_process_loop(g, queue, s, udf, stop, stats);
  }
  return stats;
}

}  // namespace ordgraph::detail
