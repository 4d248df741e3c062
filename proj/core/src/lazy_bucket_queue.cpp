#include "ordgraph/lazy_bucket_queue.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace ordgraph {

LazyBucketQueue::LazyBucketQueue(PriorityState& state, std::size_t num_open_buckets)
    : state_(state),
      open_(num_open_buckets),
      current_rank_(std::numeric_limits<BucketId>::min()),
      stamp_(state.size(), 0) {
  if (num_open_buckets == 0) throw std::domain_error("need at least one open bucket");
}

void LazyBucketQueue::insert(VertexId v) {
  unstage();
  const BucketId rank = state_.rank(v);
  if (rank != kNullBucket) place(v, rank);
}

void LazyBucketQueue::insert_all() {
  unstage();
  for (VertexId v = 0; v < state_.size(); ++v) {
    const BucketId rank = state_.rank(v);
    if (rank != kNullBucket) place(v, rank);
  }
}

void LazyBucketQueue::bulk_update(std::span<const BucketUpdate> updates) {
  unstage();
  for (const BucketUpdate& u : updates) {
    const BucketId rank = state_.rank_of_bucket(u.bucket);
    if (rank != kNullBucket) place(u.vertex, rank);
  }
}

void LazyBucketQueue::place(VertexId v, BucketId rank) {
  if (rank < current_rank_) {
    // Monotone priorities never move a vertex behind the bucket in progress.
    assert(false && "bucket update targets an already-processed bucket");
    ++counters_.late_inserts;
    return;
  }
  ++counters_.bucket_inserts;
  if (window_valid_ && rank - base_rank_ < static_cast<BucketId>(open_.size())) {
    open_[static_cast<std::size_t>(rank - base_rank_)].push_back(v);
  } else {
    overflow_.push_back(v);
  }
}

bool LazyBucketQueue::rebin_overflow() {
  // Every vertex whose current bucket is at or before the finished window has
  // already been emitted at that bucket; its overflow entries are stale.
  BucketId lowest = kNullBucket;
  for (VertexId v : overflow_) {
    const BucketId rank = state_.rank(v);
    if (rank != kNullBucket && rank > current_rank_) lowest = std::min(lowest, rank);
  }
  if (lowest == kNullBucket) {
    counters_.stale_filtered += overflow_.size();
    overflow_.clear();
    return false;
  }
  base_rank_ = lowest;
  window_valid_ = true;
  std::vector<VertexId> rest;
  for (VertexId v : overflow_) {
    const BucketId rank = state_.rank(v);
    if (rank == kNullBucket || rank <= current_rank_) {
      ++counters_.stale_filtered;
    } else if (rank - base_rank_ < static_cast<BucketId>(open_.size())) {
      open_[static_cast<std::size_t>(rank - base_rank_)].push_back(v);
    } else {
      rest.push_back(v);
    }
  }
  overflow_.swap(rest);
  return true;
}

bool LazyBucketQueue::stage_next() {
  if (staged_rank_) return true;
  while (true) {
    if (window_valid_) {
      const BucketId start = std::max(current_rank_, base_rank_) - base_rank_;
      for (auto slot = static_cast<std::size_t>(start); slot < open_.size(); ++slot) {
        std::vector<VertexId>& bucket = open_[slot];
        if (bucket.empty()) continue;
        const BucketId rank = base_rank_ + static_cast<BucketId>(slot);
        ++epoch_;
        staged_.clear();
        for (VertexId v : bucket) {
          if (state_.rank(v) == rank && stamp_[v] != epoch_) {
            stamp_[v] = epoch_;
            staged_.push_back(v);
          } else {
            ++counters_.stale_filtered;
          }
        }
        bucket.clear();
        if (!staged_.empty()) {
          staged_rank_ = rank;
          return true;
        }
      }
    }
    if (!rebin_overflow()) return false;
  }
}

void LazyBucketQueue::unstage() {
  if (!staged_rank_) return;
  auto& slot = open_[static_cast<std::size_t>(*staged_rank_ - base_rank_)];
  slot.insert(slot.end(), staged_.begin(), staged_.end());
  staged_.clear();
  staged_rank_.reset();
}

bool LazyBucketQueue::finished() { return !stage_next(); }

std::optional<ReadySet> LazyBucketQueue::dequeue_ready_set() {
  if (!stage_next()) return std::nullopt;
  current_rank_ = *staged_rank_;
  staged_rank_.reset();
  ++counters_.rounds;
  const BucketId bucket = state_.bucket_of_rank(current_rank_);
  if (trace_) counters_.bucket_trace.push_back(bucket);
  ReadySet ready{bucket, VertexSubset::sparse(state_.size(), std::move(staged_))};
  staged_ = {};
  return ready;
}

BucketId LazyBucketQueue::current_bucket() const {
  if (current_rank_ == std::numeric_limits<BucketId>::min()) return kNullBucket;
  return state_.bucket_of_rank(current_rank_);
}

bool LazyBucketQueue::finished_vertex(VertexId v) {
  const Priority p = state_.load(v);
  if (state_.is_null(p)) return false;
  if (!stage_next()) return true;
  const auto& mapping = state_.mapping();
  if (state_.order() == PriorityOrder::kLowerFirst && mapping.kind() == BucketMapping::Kind::kLinear) {
    return std::int64_t{p} <= state_.bucket_of_rank(*staged_rank_) * mapping.delta();
  }
  return state_.rank_of_bucket(state_.bucket_of(p)) < *staged_rank_;
}

}  // namespace ordgraph
