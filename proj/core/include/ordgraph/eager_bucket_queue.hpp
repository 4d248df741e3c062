#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordgraph/lazy_bucket_queue.hpp"
#include "ordgraph/parallel.hpp"
#include "ordgraph/priority.hpp"
#include "ordgraph/round_stats.hpp"

namespace ordgraph {

/// Thread-local buckets. Each worker owns a window of `window` bins (sharing a
/// global base) plus an overflow list, and inserts only into its own bins.
/// Before a global round the team agrees on the minimum non-empty bucket and
/// copies that bin from every thread into one shared frontier.
///
/// Bins may hold stale entries; callers skip a vertex whose current bucket is
/// ahead of the bucket being processed.
class EagerBucketQueue {
 public:
  static constexpr std::size_t kDefaultWindow = 128;

  EagerBucketQueue(PriorityState& state, int num_threads, std::size_t fusion_threshold = 1000,
                   std::size_t window = kDefaultWindow);

  PriorityState& state() { return state_; }
  const PriorityState& state() const { return state_; }
  int num_threads() const { return static_cast<int>(locals_.size()); }
  std::size_t fusion_threshold() const { return fusion_threshold_; }

  /// Files v under `priority` in thread `tid`'s bins. Thread-safe across
  /// distinct tids.
  void insert(int tid, VertexId v, Priority priority);
  /// Seeds v at its current priority (null priorities are ignored).
  void insert(int tid, VertexId v) {
    const Priority p = state_.load(v);
    if (!state_.is_null(p)) insert(tid, v, p);
  }

  /// Serial global step for use outside a parallel region.
  std::optional<ReadySet> next_global_bucket();

  /// Collective global step: every thread of a team of num_threads() must
  /// call it. Returns false on all threads once every bin is empty; otherwise
  /// frontier() holds the next bucket's vertices. The round is not counted
  /// until count_round() is called, so a caller that stops early can skip it.
  bool next_global_bucket(int tid);
  void count_round();
  std::span<const VertexId> frontier() const { return frontier_; }

  bool finished() const { return finished_; }
  BucketId current_bucket() const { return state_.bucket_of_rank(current_rank_); }
  BucketId current_rank() const { return current_rank_; }
  bool is_current(VertexId v) const { return state_.rank(v) == current_rank_; }

  /// Bucket fusion: while this thread's bin for the current bucket is
  /// non-empty and smaller than the threshold, swap it out and run `process`
  /// on each vertex without a global barrier. Returns the sub-rounds run.
  template <typename Process>
  std::size_t fused_drain_local(int tid, Process&& process);

  /// Same criterion as LazyBucketQueue::finished_vertex, measured against the
  /// bucket selected by the last global step.
  bool finished_vertex(VertexId v) const;

  /// Merged per-thread counters plus rounds and trace.
  RoundStats counters() const;
  RoundStats& thread_counters(int tid) { return locals_[static_cast<std::size_t>(tid)].value.counters; }
  void enable_trace(bool on) { trace_ = on; }

 private:
  struct Local {
    std::vector<std::vector<VertexId>> bins;
    std::vector<VertexId> overflow;
    std::vector<VertexId> scratch;
    BucketId proposal = kNullBucket;
    RoundStats counters;
  };

  BucketId window_min(const Local& local) const;
  BucketId overflow_min(const Local& local) const;
  void rebin(Local& local);
  std::vector<VertexId>& current_bin(Local& local) {
    return local.bins[static_cast<std::size_t>(current_rank_ - base_rank_)];
  }

  PriorityState& state_;
  std::size_t fusion_threshold_;
  std::size_t window_;
  std::vector<CachePadded<Local>> locals_;
  std::vector<VertexId> frontier_;
  std::vector<std::size_t> offsets_;
  bool window_valid_ = false;
  BucketId base_rank_ = 0;
  BucketId current_rank_;
  bool need_rebin_ = false;
  bool finished_ = false;
  std::uint64_t rounds_ = 0;
  std::vector<BucketId> trace_buckets_;
  bool trace_ = false;
};

template <typename Process>
std::size_t EagerBucketQueue::fused_drain_local(int tid, Process&& process) {
  Local& local = locals_[static_cast<std::size_t>(tid)].value;
  std::size_t fused = 0;
  while (true) {
    std::vector<VertexId>& bin = current_bin(local);
    if (bin.empty() || bin.size() >= fusion_threshold_) break;
    local.scratch.swap(bin);
    for (VertexId v : local.scratch) process(v);
    local.scratch.clear();
    ++fused;
  }
  local.counters.fused_rounds += fused;
  return fused;
}

}  // namespace ordgraph
