#include "ordgraph/update_buffer.hpp"

#include <algorithm>

namespace ordgraph {

UpdateBuffer::UpdateBuffer(VertexId universe, int num_threads, bool dedup)
    : segments_(static_cast<std::size_t>(std::max(num_threads, 1))), dedup_(dedup) {
  if (dedup_) flags_.assign(universe, 0);
}

void UpdateBuffer::begin_round(EdgeIndex capacity) {
  for (auto& segment : segments_) segment.value.clear();
  capacity_ = capacity;
}

std::size_t UpdateBuffer::appended() const {
  std::size_t total = 0;
  for (const auto& segment : segments_) total += segment.value.size();
  return total;
}

std::vector<BucketUpdate> UpdateBuffer::compact(const PriorityState& state, RoundStats* stats) {
  std::vector<std::size_t> sizes(segments_.size());
  for (std::size_t t = 0; t < segments_.size(); ++t) sizes[t] = segments_[t].value.size();
  const std::vector<std::size_t> offsets = exclusive_prefix_sum(sizes);
  std::vector<BucketUpdate> out(offsets.back());

  const auto count = static_cast<std::int64_t>(segments_.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < count; ++t) {
    const auto& segment = segments_[static_cast<std::size_t>(t)].value;
    BucketUpdate* dst = out.data() + offsets[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < segment.size(); ++i) dst[i] = {segment[i], state.bucket(segment[i])};
  }
  if (dedup_) {
    for (const BucketUpdate& u : out) flags_[u.vertex] = 0;
  }
  for (auto& segment : segments_) segment.value.clear();
  if (stats != nullptr) {
    ++stats->buffer_compactions;
    if (out.size() > capacity_) ++stats->buffer_overruns;
  }
  return out;
}

}  // namespace ordgraph
