#include "ordgraph/algorithms.hpp"
#include "ordgraph/histogram.hpp"
#include "ordgraph/lazy_bucket_queue.hpp"
#include "ordgraph/traversal.hpp"

namespace ordgraph {

CorenessResult kcore(const Graph& g, const Schedule& s, bool trace) {
  require_valid(Algorithm::kKcore, s, g.has_in_edges());
  const VertexId n = g.num_vertices();
  std::vector<Priority> degrees(n);
  for (VertexId v = 0; v < n; ++v) degrees[v] = static_cast<Priority>(g.out_degree(v));
  PriorityState state(std::move(degrees), PriorityOrder::kLowerFirst, BucketMapping::linear(1));

  LazyBucketQueue queue(state, s.num_open_buckets);
  queue.enable_trace(trace);
  queue.insert_all();

  CorenessResult result;
  auto peel = [](VertexId, VertexId dst, Weight, auto& up) { up.update_sum(dst, -1, up.current_priority()); };
  const bool histogram = s.strategy == UpdateStrategy::kLazyConstantSum;
  UpdateBuffer buffer(histogram ? 0 : n, histogram ? 1 : num_threads(), s.dedup);
  std::optional<HistogramScratch> scratch;
  if (histogram) scratch.emplace(n);

  std::size_t finished = 0;
  while (finished != n) {
    auto ready = queue.dequeue_ready_set();
    if (!ready) break;
    finished += ready->vertices.size();
    const Priority k = queue.current_priority();
    const auto updates = histogram
                             ? apply_constant_sum(g, ready->vertices, -1, k, state, s, *scratch, result.stats)
                             : apply_update_priority(g, ready->vertices, peel, state, k, s, buffer, result.stats);
    queue.bulk_update(updates);
  }
  result.stats += queue.counters();
  result.coreness = state.release();
  return result;
}

}  // namespace ordgraph
