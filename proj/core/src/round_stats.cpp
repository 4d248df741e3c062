#include "ordgraph/round_stats.hpp"

namespace ordgraph {

RoundStats& RoundStats::operator+=(const RoundStats& other) {
  rounds += other.rounds;
  fused_rounds += other.fused_rounds;
  edges_relaxed += other.edges_relaxed;
  buffer_compactions += other.buffer_compactions;
  stale_filtered += other.stale_filtered;
  bucket_inserts += other.bucket_inserts;
  late_inserts += other.late_inserts;
  buffer_overruns += other.buffer_overruns;
  bucket_trace.insert(bucket_trace.end(), other.bucket_trace.begin(), other.bucket_trace.end());
  return *this;
}

bool trace_is_monotone(const std::vector<BucketId>& trace, bool higher_first) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (higher_first ? trace[i] > trace[i - 1] : trace[i] < trace[i - 1]) return false;
  }
  return true;
}

}  // namespace ordgraph
