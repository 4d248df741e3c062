#pragma once

#include <atomic>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "ordgraph/types.hpp"

namespace ordgraph {

enum class PriorityOrder { kLowerFirst, kHigherFirst };

/// floor(p / delta). Throws std::domain_error when delta < 1.
BucketId coarsen(Priority p, Priority delta);

/// Maps a raw priority to its bucket: floor(p / delta) for coarsened
/// priorities, or floor(log_{1+eps} p) for cost-per-element bucketing.
class BucketMapping {
 public:
  enum class Kind { kLinear, kLogarithmic };

  static BucketMapping linear(Priority delta);
  static BucketMapping logarithmic(double epsilon);

  Kind kind() const { return kind_; }
  Priority delta() const { return delta_; }
  double epsilon() const { return epsilon_; }

  BucketId operator()(Priority p) const {
    if (kind_ == Kind::kLinear) return p / delta_;
    return log_bucket(p);
  }

 private:
  BucketId log_bucket(Priority p) const;

  Kind kind_ = Kind::kLinear;
  Priority delta_ = 1;
  double epsilon_ = 0.0;
  double inv_log_base_ = 0.0;
};

/// Per-vertex priority vector plus the ordering and bucket mapping used to
/// derive coarsened priorities. Vertices at the null priority (kInfinity for
/// lower_first, 0 for higher_first) are never bucketed.
///
/// Element access goes through std::atomic_ref so that concurrent updates on
/// the same vertex are well defined; the vector itself is owned here.
class PriorityState {
 public:
  PriorityState(std::vector<Priority> values, PriorityOrder order, BucketMapping mapping);

  PriorityOrder order() const { return order_; }
  const BucketMapping& mapping() const { return mapping_; }
  Priority null_priority() const { return order_ == PriorityOrder::kLowerFirst ? kInfinity : 0; }
  bool is_null(Priority p) const { return p == null_priority(); }
  VertexId size() const { return static_cast<VertexId>(values_.size()); }

  Priority load(VertexId v) const {
    return std::atomic_ref<Priority>(const_cast<Priority&>(values_[v])).load(std::memory_order_relaxed);
  }
  void store(VertexId v, Priority p) {
    std::atomic_ref<Priority>(values_[v]).store(p, std::memory_order_relaxed);
  }

  BucketId bucket_of(Priority p) const { return is_null(p) ? kNullBucket : mapping_(p); }
  BucketId bucket(VertexId v) const { return bucket_of(load(v)); }

  /// Ordering key: processing order is ascending rank in both directions.
  BucketId rank_of_bucket(BucketId b) const {
    if (b == kNullBucket) return kNullBucket;
    return order_ == PriorityOrder::kLowerFirst ? b : -b;
  }
  BucketId bucket_of_rank(BucketId r) const { return order_ == PriorityOrder::kLowerFirst ? r : -r; }
  BucketId rank(VertexId v) const { return rank_of_bucket(bucket(v)); }

  /// Atomic minimum. True iff this call strictly lowered the value.
  bool write_min(VertexId v, Priority candidate) {
    std::atomic_ref<Priority> slot(values_[v]);
    Priority old = slot.load(std::memory_order_relaxed);
    while (candidate < old) {
      if (slot.compare_exchange_weak(old, candidate, std::memory_order_relaxed)) return true;
    }
    return false;
  }

  /// Single-writer minimum for owner-computes traversal (no RMW).
  bool owner_write_min(VertexId v, Priority candidate) {
    if (candidate < load(v)) {
      store(v, candidate);
      return true;
    }
    return false;
  }

  /// new = old + diff, clamped at `threshold`: a floor when diff < 0, a
  /// ceiling when diff > 0. Values already at or beyond the threshold are left
  /// unchanged. Returns true iff the value changed; `result` receives the
  /// value written.
  bool add_clamped(VertexId v, Priority diff, Priority threshold, Priority& result);
  bool owner_add_clamped(VertexId v, Priority diff, Priority threshold, Priority& result);

  std::span<const Priority> values() const { return values_; }
  std::span<Priority> mutable_values() { return values_; }
  std::vector<Priority> release() { return std::move(values_); }

 private:
  std::vector<Priority> values_;
  PriorityOrder order_;
  BucketMapping mapping_;
};

/// clamp(old + diff) per add_clamped's rule; returns old when unchanged.
Priority clamped_sum(Priority old, std::int64_t diff, Priority threshold);

}  // namespace ordgraph
