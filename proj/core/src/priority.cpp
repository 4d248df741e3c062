#include "ordgraph/priority.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ordgraph {

BucketId coarsen(Priority p, Priority delta) {
  if (delta < 1) throw std::domain_error("coarsening factor must be >= 1");
  return static_cast<BucketId>(p / delta);
}

BucketMapping BucketMapping::linear(Priority delta) {
  if (delta < 1) throw std::domain_error("coarsening factor must be >= 1");
  BucketMapping m;
  m.kind_ = Kind::kLinear;
  m.delta_ = delta;
  return m;
}

BucketMapping BucketMapping::logarithmic(double epsilon) {
  if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be positive");
  BucketMapping m;
  m.kind_ = Kind::kLogarithmic;
  m.epsilon_ = epsilon;
  m.inv_log_base_ = 1.0 / std::log1p(epsilon);
  return m;
}

BucketId BucketMapping::log_bucket(Priority p) const {
  if (p <= 1) return 0;
  // The nudge keeps exact powers of the base from landing one bucket low.
  return static_cast<BucketId>(std::floor(std::log(static_cast<double>(p)) * inv_log_base_ + 1e-9));
}

PriorityState::PriorityState(std::vector<Priority> values, PriorityOrder order, BucketMapping mapping)
    : values_(std::move(values)), order_(order), mapping_(mapping) {}

Priority clamped_sum(Priority old, std::int64_t diff, Priority threshold) {
  if (diff < 0) {
    if (old <= threshold) return old;
    return static_cast<Priority>(std::max<std::int64_t>(std::int64_t{old} + diff, threshold));
  }
  if (diff > 0) {
    if (old >= threshold) return old;
    return static_cast<Priority>(std::min<std::int64_t>(std::int64_t{old} + diff, threshold));
  }
  return old;
}

bool PriorityState::add_clamped(VertexId v, Priority diff, Priority threshold, Priority& result) {
  std::atomic_ref<Priority> slot(values_[v]);
  Priority old = slot.load(std::memory_order_relaxed);
  while (true) {
    const Priority next = clamped_sum(old, diff, threshold);
    if (next == old) return false;
    if (slot.compare_exchange_weak(old, next, std::memory_order_relaxed)) {
      result = next;
      return true;
    }
  }
}

bool PriorityState::owner_add_clamped(VertexId v, Priority diff, Priority threshold, Priority& result) {
  const Priority old = load(v);
  const Priority next = clamped_sum(old, diff, threshold);
  if (next == old) return false;
  store(v, next);
  result = next;
  return true;
}

}  // namespace ordgraph
