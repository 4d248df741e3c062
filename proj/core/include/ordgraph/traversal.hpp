#pragma once

#include <cstdint>
#include <vector>

#include <omp.h>

#include "ordgraph/eager_bucket_queue.hpp"
#include "ordgraph/graph.hpp"
#include "ordgraph/lazy_bucket_queue.hpp"
#include "ordgraph/parallel.hpp"
#include "ordgraph/priority.hpp"
#include "ordgraph/round_stats.hpp"
#include "ordgraph/schedule.hpp"
#include "ordgraph/update_buffer.hpp"
#include "ordgraph/vertex_subset.hpp"

namespace ordgraph {

// A priority-update UDF is called as udf(src, dst, weight, updater). The
// updater exposes update_min(v, candidate), update_sum(v, diff, threshold),
// priority(v) and current_priority(); the two update operators return true
// when they changed v's priority and route v to the right bucket.

/// Updater for eager rounds: atomic priority writes, changed vertices go
/// straight into the calling thread's bins.
class EagerUpdater {
 public:
  EagerUpdater(EagerBucketQueue& queue, int tid) : queue_(queue), state_(queue.state()), tid_(tid) {}

  bool update_min(VertexId v, Priority candidate) {
    if (!state_.write_min(v, candidate)) return false;
    queue_.insert(tid_, v, candidate);
    return true;
  }
  bool update_sum(VertexId v, Priority diff, Priority threshold) {
    Priority result;
    if (!state_.add_clamped(v, diff, threshold, result)) return false;
    queue_.insert(tid_, v, result);
    return true;
  }
  Priority priority(VertexId v) const { return state_.load(v); }
  Priority current_priority() const { return static_cast<Priority>(queue_.current_bucket()); }

 private:
  EagerBucketQueue& queue_;
  PriorityState& state_;
  int tid_;
};

/// Updater for lazy rounds. Changed vertices are appended to the round's
/// buffer; in owner mode (pull) each destination has a single writer and the
/// priority is updated without read-modify-write.
template <bool Owner>
class LazyUpdater {
 public:
  LazyUpdater(PriorityState& state, UpdateBuffer& buffer, int tid, Priority current)
      : state_(state), buffer_(buffer), tid_(tid), current_(current) {}

  bool update_min(VertexId v, Priority candidate) {
    const bool changed = Owner ? state_.owner_write_min(v, candidate) : state_.write_min(v, candidate);
    if (changed) buffer_.append(tid_, v);
    return changed;
  }
  bool update_sum(VertexId v, Priority diff, Priority threshold) {
    Priority result;
    const bool changed = Owner ? state_.owner_add_clamped(v, diff, threshold, result)
                               : state_.add_clamped(v, diff, threshold, result);
    if (changed) buffer_.append(tid_, v);
    return changed;
  }
  Priority priority(VertexId v) const { return state_.load(v); }
  Priority current_priority() const { return current_; }

 private:
  PriorityState& state_;
  UpdateBuffer& buffer_;
  int tid_;
  Priority current_;
};

namespace detail {

template <typename Udf, typename Updater>
inline std::uint64_t push_from(const Graph& g, VertexId src, Udf& udf, Updater& up) {
  const auto nbrs = g.out_neighbors(src);
  for (const WeightedNeighbor& e : nbrs) udf(src, e.v, e.w, up);
  return nbrs.size();
}

template <typename Udf, typename Updater>
inline std::uint64_t pull_into(const Graph& g, VertexId dst, std::span<const std::uint64_t> bits, Udf& udf,
                               Updater& up) {
  std::uint64_t applied = 0;
  for (const WeightedNeighbor& e : g.in_neighbors(dst)) {
    if (!test_bit(bits, e.v)) continue;
    udf(e.v, dst, e.w, up);
    ++applied;
  }
  return applied;
}

}  // namespace detail

/// One lazy applyUpdatePriority round over `frontier`: runs the UDF on every
/// frontier edge (push) or every in-edge from the frontier (pull), then
/// returns the compacted, deduplicated list of changed vertices with their new
/// buckets.
template <typename Udf>
std::vector<BucketUpdate> apply_update_priority(const Graph& g, const VertexSubset& frontier, Udf&& udf,
                                                PriorityState& state, Priority current, const Schedule& s,
                                                UpdateBuffer& buffer, RoundStats& stats) {
  if (s.pull() && !g.has_in_edges()) throw ConfigError("DensePull requires a graph built with in-edges");
  set_loop_grain(s.grain);
  buffer.begin_round(out_degree_sum(g, frontier));
  std::uint64_t edges = 0;
  if (!s.pull()) {
    const VertexSubset sparse = frontier.to_sparse();
    const auto ids = sparse.ids();
#pragma omp parallel num_threads(buffer.num_threads())
    {
      LazyUpdater<false> up(state, buffer, omp_get_thread_num(), current);
#pragma omp for schedule(runtime) reduction(+ : edges)
      for (std::size_t i = 0; i < ids.size(); ++i) edges += detail::push_from(g, ids[i], udf, up);
    }
  } else {
    const VertexSubset dense = frontier.to_dense();
    const auto bits = dense.words();
    const auto n = static_cast<std::int64_t>(g.num_vertices());
#pragma omp parallel num_threads(buffer.num_threads())
    {
      LazyUpdater<true> up(state, buffer, omp_get_thread_num(), current);
#pragma omp for schedule(runtime) reduction(+ : edges)
      for (std::int64_t v = 0; v < n; ++v) edges += detail::pull_into(g, static_cast<VertexId>(v), bits, udf, up);
    }
  }
  stats.edges_relaxed += edges;
  return buffer.compact(state, &stats);
}

/// Lazy ordered loop: dequeue the next ready bucket, apply the UDF to it and
/// bulk-update the queue, until the queue is empty or `stop(queue)` holds.
template <typename Udf, typename Stop>
void lazy_process_loop(const Graph& g, LazyBucketQueue& queue, const Schedule& s, Udf&& udf, Stop&& stop,
                       RoundStats& stats) {
  UpdateBuffer buffer(g.num_vertices(), num_threads(), s.dedup);
  while (!stop(queue)) {
    auto ready = queue.dequeue_ready_set();
    if (!ready) break;
    const auto updates = apply_update_priority(g, ready->vertices, udf, queue.state(), queue.current_priority(), s,
                                               buffer, stats);
    queue.bulk_update(updates);
  }
  stats += queue.counters();
}

/// Eager ordered loop. Each global round processes the agreed bucket; with
/// fusion, every thread then keeps draining its own copy of that bucket while
/// it stays below the fusion threshold. `stop(queue)` is evaluated once per
/// global round, after the next bucket has been selected.
///
/// Pull rounds read the frontier bitmap and write destinations atomically,
/// since fused push sub-rounds of other threads may touch the same vertices.
template <typename Udf, typename Stop>
void ordered_process_loop(const Graph& g, EagerBucketQueue& queue, const Schedule& s, Udf&& udf, Stop&& stop,
                          RoundStats& stats) {
  if (s.pull() && !g.has_in_edges()) throw ConfigError("DensePull requires a graph built with in-edges");
  set_loop_grain(s.grain);
  const VertexId n = g.num_vertices();
  std::vector<std::uint64_t> bits;
  if (s.pull()) bits.assign(bitmap_words(n), 0);
  bool done = false;

#pragma omp parallel num_threads(queue.num_threads())
  {
    const int tid = omp_get_thread_num();
    EagerUpdater up(queue, tid);
    RoundStats& local = queue.thread_counters(tid);
    auto process = [&](VertexId v) {
      if (!queue.is_current(v)) {
        ++local.stale_filtered;
        return;
      }
      local.edges_relaxed += detail::push_from(g, v, udf, up);
    };

    while (queue.next_global_bucket(tid)) {
#pragma omp single
      {
        done = stop(queue);
        if (!done) queue.count_round();
        if (!done && s.pull()) {
          std::fill(bits.begin(), bits.end(), 0);
          for (VertexId v : queue.frontier()) {
            if (queue.is_current(v)) bits[v >> 6] |= std::uint64_t{1} << (v & 63);
          }
        }
      }
      if (done) break;

      if (!s.pull()) {
        const auto frontier = queue.frontier();
#pragma omp for schedule(runtime) nowait
        for (std::size_t i = 0; i < frontier.size(); ++i) process(frontier[i]);
      } else {
#pragma omp for schedule(runtime) nowait
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
          local.edges_relaxed += detail::pull_into(g, static_cast<VertexId>(v), bits, udf, up);
        }
      }
      if (s.fusion()) queue.fused_drain_local(tid, process);
    }
  }
  stats += queue.counters();
}

}  // namespace ordgraph
