#pragma once

#include <vector>

#include "ordgraph/graph.hpp"
#include "ordgraph/lazy_bucket_queue.hpp"
#include "ordgraph/round_stats.hpp"
#include "ordgraph/schedule.hpp"
#include "ordgraph/vertex_subset.hpp"

namespace ordgraph {

/// Reusable scratch for constant-sum rounds.
class HistogramScratch {
 public:
  explicit HistogramScratch(VertexId universe);

 private:
  friend std::vector<BucketUpdate> apply_constant_sum(const Graph&, const VertexSubset&, Priority, Priority,
                                                      PriorityState&, const Schedule&, HistogramScratch&,
                                                      RoundStats&);
  std::vector<std::uint32_t> counts_;
};

/// Lazy update for a constant-sum priority function: every frontier edge into
/// v contributes `per_edge` to v, so the round counts frontier edges per
/// destination and applies new = clamped_sum(old, per_edge * count,
/// threshold) once per destination. Returns the destinations whose priority
/// changed, tagged with their new bucket.
std::vector<BucketUpdate> apply_constant_sum(const Graph& g, const VertexSubset& frontier, Priority per_edge,
                                             Priority threshold, PriorityState& state, const Schedule& s,
                                             HistogramScratch& scratch, RoundStats& stats);

}  // namespace ordgraph
