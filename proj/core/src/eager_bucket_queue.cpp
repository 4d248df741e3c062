#include "ordgraph/eager_bucket_queue.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace ordgraph {

EagerBucketQueue::EagerBucketQueue(PriorityState& state, int num_threads, std::size_t fusion_threshold,
                                   std::size_t window)
    : state_(state),
      fusion_threshold_(fusion_threshold),
      window_(window),
      locals_(static_cast<std::size_t>(std::max(num_threads, 1))),
      current_rank_(std::numeric_limits<BucketId>::min()) {
  if (window == 0) throw std::domain_error("need at least one open bucket");
  for (auto& local : locals_) local.value.bins.resize(window_);
}

void EagerBucketQueue::insert(int tid, VertexId v, Priority priority) {
  Local& local = locals_[static_cast<std::size_t>(tid)].value;
  const BucketId rank = state_.rank_of_bucket(state_.bucket_of(priority));
  if (rank == kNullBucket) return;
  if (rank < current_rank_) {
    assert(false && "bucket update targets an already-processed bucket");
    ++local.counters.late_inserts;
    return;
  }
  ++local.counters.bucket_inserts;
  if (window_valid_ && rank - base_rank_ < static_cast<BucketId>(window_)) {
    local.bins[static_cast<std::size_t>(rank - base_rank_)].push_back(v);
  } else {
    local.overflow.push_back(v);
  }
}

BucketId EagerBucketQueue::window_min(const Local& local) const {
  if (!window_valid_) return kNullBucket;
  const BucketId start = std::max(current_rank_, base_rank_) - base_rank_;
  for (auto slot = static_cast<std::size_t>(start); slot < window_; ++slot) {
    if (!local.bins[slot].empty()) return base_rank_ + static_cast<BucketId>(slot);
  }
  return kNullBucket;
}

BucketId EagerBucketQueue::overflow_min(const Local& local) const {
  BucketId lowest = kNullBucket;
  for (VertexId v : local.overflow) {
    const BucketId rank = state_.rank(v);
    if (rank != kNullBucket && rank > current_rank_) lowest = std::min(lowest, rank);
  }
  return lowest;
}

void EagerBucketQueue::rebin(Local& local) {
  std::vector<VertexId> rest;
  for (VertexId v : local.overflow) {
    const BucketId rank = state_.rank(v);
    if (rank == kNullBucket || rank <= current_rank_) {
      ++local.counters.stale_filtered;
    } else if (rank - base_rank_ < static_cast<BucketId>(window_)) {
      local.bins[static_cast<std::size_t>(rank - base_rank_)].push_back(v);
    } else {
      rest.push_back(v);
    }
  }
  local.overflow.swap(rest);
}

std::optional<ReadySet> EagerBucketQueue::next_global_bucket() {
  if (finished_) return std::nullopt;
  while (true) {
    BucketId best = kNullBucket;
    for (const auto& local : locals_) best = std::min(best, window_min(local.value));
    if (best != kNullBucket) {
      current_rank_ = best;
      break;
    }
    for (const auto& local : locals_) best = std::min(best, overflow_min(local.value));
    if (best == kNullBucket) {
      finished_ = true;
      return std::nullopt;
    }
    base_rank_ = best;
    window_valid_ = true;
    for (auto& local : locals_) rebin(local.value);
  }
  frontier_.clear();
  for (auto& local : locals_) {
    std::vector<VertexId>& bin = current_bin(local.value);
    frontier_.insert(frontier_.end(), bin.begin(), bin.end());
    bin.clear();
  }
  count_round();
  return ReadySet{current_bucket(), VertexSubset::sparse(state_.size(), frontier_)};
}

bool EagerBucketQueue::next_global_bucket(int tid) {
  Local& mine = locals_[static_cast<std::size_t>(tid)].value;
  while (true) {
    mine.proposal = window_min(mine);
#pragma omp barrier
#pragma omp single
    {
      BucketId best = kNullBucket;
      for (const auto& local : locals_) best = std::min(best, local.value.proposal);
      need_rebin_ = best == kNullBucket;
      if (!need_rebin_) current_rank_ = best;
    }
    if (!need_rebin_) break;
    mine.proposal = overflow_min(mine);
#pragma omp barrier
#pragma omp single
    {
      BucketId best = kNullBucket;
      for (const auto& local : locals_) best = std::min(best, local.value.proposal);
      if (best == kNullBucket) {
        finished_ = true;
      } else {
        base_rank_ = best;
        window_valid_ = true;
      }
    }
    if (finished_) return false;
    rebin(mine);
  }

  mine.proposal = static_cast<BucketId>(current_bin(mine).size());
#pragma omp barrier
#pragma omp single
  {
    offsets_.assign(locals_.size() + 1, 0);
    for (std::size_t t = 0; t < locals_.size(); ++t) {
      offsets_[t + 1] = offsets_[t] + static_cast<std::size_t>(locals_[t].value.proposal);
    }
    frontier_.resize(offsets_.back());
  }
  std::vector<VertexId>& bin = current_bin(mine);
  std::copy(bin.begin(), bin.end(), frontier_.begin() + static_cast<std::ptrdiff_t>(offsets_[static_cast<std::size_t>(tid)]));
  bin.clear();
#pragma omp barrier
  return true;
}

void EagerBucketQueue::count_round() {
  ++rounds_;
  if (trace_) trace_buckets_.push_back(current_bucket());
}

bool EagerBucketQueue::finished_vertex(VertexId v) const {
  const Priority p = state_.load(v);
  if (state_.is_null(p)) return false;
  if (finished_) return true;
  const auto& mapping = state_.mapping();
  if (state_.order() == PriorityOrder::kLowerFirst && mapping.kind() == BucketMapping::Kind::kLinear) {
    return std::int64_t{p} <= current_bucket() * mapping.delta();
  }
  return state_.rank_of_bucket(state_.bucket_of(p)) < current_rank_;
}

RoundStats EagerBucketQueue::counters() const {
  RoundStats total;
  for (const auto& local : locals_) total += local.value.counters;
  total.rounds = rounds_;
  total.bucket_trace = trace_buckets_;
  return total;
}

}  // namespace ordgraph
