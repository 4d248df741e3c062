#pragma once

#include <cstdint>
#include <vector>

#include "ordgraph/types.hpp"

namespace ordgraph {

/// Counters gathered by the queues and the traversal engine for one run.
struct RoundStats {
  std::uint64_t rounds = 0;              // globally synchronized rounds
  std::uint64_t fused_rounds = 0;        // thread-local sub-rounds run by bucket fusion
  std::uint64_t edges_relaxed = 0;
  std::uint64_t buffer_compactions = 0;
  std::uint64_t stale_filtered = 0;      // queue entries dropped because the vertex moved
  std::uint64_t bucket_inserts = 0;
  std::uint64_t late_inserts = 0;        // updates aimed at an already-processed bucket
  std::uint64_t buffer_overruns = 0;     // rounds where appends exceeded the buffer capacity

  // Bucket id of every global round, in order. Filled only when tracing.
  std::vector<BucketId> bucket_trace;

  RoundStats& operator+=(const RoundStats& other);
};

/// True when the traced buckets never move backwards in processing order.
bool trace_is_monotone(const std::vector<BucketId>& trace, bool higher_first);

}  // namespace ordgraph
