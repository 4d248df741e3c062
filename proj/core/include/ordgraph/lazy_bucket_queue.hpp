#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ordgraph/priority.hpp"
#include "ordgraph/round_stats.hpp"
#include "ordgraph/vertex_subset.hpp"

namespace ordgraph {

struct BucketUpdate {
  VertexId vertex;
  BucketId bucket;

  friend bool operator==(const BucketUpdate&, const BucketUpdate&) = default;
};

struct ReadySet {
  BucketId bucket;
  VertexSubset vertices;
};

/// Bucket structure with `num_open_buckets` materialized buckets and one
/// overflow bucket for everything beyond the open window. When the window is
/// exhausted the overflow is re-binned into a fresh window starting at its
/// smallest live bucket.
///
/// Entries are never erased when a vertex moves. Dequeue re-validates each
/// entry against the priority vector and drops it unless the vertex's current
/// bucket is the one being emitted; a per-dequeue stamp removes duplicates.
///
/// Not thread-safe: bulk updates are applied by the control thread after the
/// round's buffer has been compacted.
class LazyBucketQueue {
 public:
  static constexpr std::size_t kDefaultOpenBuckets = 128;

  LazyBucketQueue(PriorityState& state, std::size_t num_open_buckets = kDefaultOpenBuckets);

  PriorityState& state() { return state_; }
  const PriorityState& state() const { return state_; }
  std::size_t num_open_buckets() const { return open_.size(); }

  /// Inserts v at the bucket of its current priority; null priorities are ignored.
  void insert(VertexId v);
  /// Inserts every vertex with a non-null priority.
  void insert_all();
  void bulk_update(std::span<const BucketUpdate> updates);

  /// Lowest (lower_first) or highest (higher_first) non-empty bucket after
  /// stale filtering, or nullopt when every bucket and the overflow are empty.
  std::optional<ReadySet> dequeue_ready_set();
  bool finished();

  /// Bucket of the most recent dequeue (the one being processed).
  BucketId current_bucket() const;
  Priority current_priority() const { return static_cast<Priority>(current_bucket()); }

  /// True once v's priority can no longer change. For coarsened lower_first
  /// priorities this holds when the next bucket to be processed, i, satisfies
  /// i * delta >= priority; otherwise when v's bucket precedes the next one.
  /// Call between rounds (it may stage the next bucket).
  bool finished_vertex(VertexId v);

  /// Counters accumulated so far (rounds = number of dequeues).
  const RoundStats& counters() const { return counters_; }
  /// Entries (live or stale) currently parked beyond the open window.
  std::size_t overflow_size() const { return overflow_.size(); }
  void enable_trace(bool on) { trace_ = on; }

 private:
  bool stage_next();
  void unstage();
  void place(VertexId v, BucketId rank);
  bool rebin_overflow();

  PriorityState& state_;
  std::vector<std::vector<VertexId>> open_;
  std::vector<VertexId> overflow_;
  bool window_valid_ = false;
  BucketId base_rank_ = 0;
  BucketId current_rank_;
  std::optional<BucketId> staged_rank_;
  std::vector<VertexId> staged_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  RoundStats counters_;
  bool trace_ = false;
};

}  // namespace ordgraph
