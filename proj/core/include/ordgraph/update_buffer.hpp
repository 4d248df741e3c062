#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "ordgraph/lazy_bucket_queue.hpp"
#include "ordgraph/parallel.hpp"
#include "ordgraph/priority.hpp"
#include "ordgraph/round_stats.hpp"

namespace ordgraph {

/// Per-thread append segments collecting the vertices whose priority changed
/// during one lazy round. With dedup on, a vertex is appended at most once per
/// round (first writer wins a per-vertex flag).
class UpdateBuffer {
 public:
  UpdateBuffer(VertexId universe, int num_threads, bool dedup = true);

  /// Clears the segments and records the round's expected capacity (sum of
  /// the frontier's out-degrees).
  void begin_round(EdgeIndex capacity);

  void append(int tid, VertexId v) {
    if (dedup_) {
      std::atomic_ref<std::uint8_t> flag(flags_[v]);
      if (flag.load(std::memory_order_relaxed) != 0) return;
      std::uint8_t expected = 0;
      if (!flag.compare_exchange_strong(expected, 1, std::memory_order_relaxed)) return;
    }
    segments_[static_cast<std::size_t>(tid)].value.push_back(v);
  }

  bool dedup() const { return dedup_; }
  int num_threads() const { return static_cast<int>(segments_.size()); }
  EdgeIndex capacity() const { return capacity_; }
  std::size_t appended() const;
  std::span<const VertexId> segment(int tid) const { return segments_[static_cast<std::size_t>(tid)].value; }

  /// Concatenates the segments at exclusive-prefix-sum offsets, tags each
  /// vertex with its bucket under `state`, clears the dedup flags and empties
  /// the segments. Counts a compaction (and an overrun when the appends
  /// exceeded the capacity) into `stats` when given.
  std::vector<BucketUpdate> compact(const PriorityState& state, RoundStats* stats = nullptr);

 private:
  std::vector<CachePadded<std::vector<VertexId>>> segments_;
  std::vector<std::uint8_t> flags_;
  bool dedup_;
  EdgeIndex capacity_ = 0;
};

}  // namespace ordgraph
