#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>

#include <omp.h>

#include "ordgraph/algorithms.hpp"
#include "ordgraph/lazy_bucket_queue.hpp"
#include "ordgraph/parallel.hpp"

namespace ordgraph {
namespace {

constexpr std::uint64_t kUnclaimed = std::numeric_limits<std::uint64_t>::max();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Random rank of set s in the given round; the id in the low bits breaks ties.
std::uint64_t claim_key(std::uint64_t seed, std::uint64_t round, VertexId s) {
  const std::uint64_t r = splitmix64(seed ^ splitmix64(round) ^ (std::uint64_t{s} << 1));
  return (r << 32) | s;
}

Priority uncovered_degree(const Graph& g, VertexId s, const std::vector<std::uint8_t>& covered) {
  Priority d = 0;
  for (const WeightedNeighbor& e : g.out_neighbors(s)) {
    if (!covered[e.v]) ++d;
  }
  return d;
}

}  // namespace

SetCoverResult set_cover(const Graph& g, const Schedule& s, double epsilon, std::uint64_t seed, bool trace) {
  require_valid(Algorithm::kSetCover, s, g.has_in_edges());
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ConfigError("set cover epsilon must be in (0, 1)");
  const VertexId n = g.num_vertices();

  SetCoverResult result;
  result.covered.assign(n, 0);
  std::vector<std::uint8_t>& covered = result.covered;
  std::vector<std::uint64_t> claim(n, kUnclaimed);

  std::vector<Priority> degrees(n);
  for (VertexId v = 0; v < n; ++v) degrees[v] = static_cast<Priority>(g.out_degree(v));
  PriorityState state(std::move(degrees), PriorityOrder::kHigherFirst, BucketMapping::logarithmic(epsilon));
  LazyBucketQueue queue(state, s.num_open_buckets);
  queue.enable_trace(trace);
  queue.insert_all();
  set_loop_grain(s.grain);

  std::vector<std::pair<VertexId, std::uint32_t>> picks;
  std::uint64_t round = 0;
  while (auto ready = queue.dequeue_ready_set()) {
    const auto frontier = ready->vertices.ids();
    const BucketId bucket = ready->bucket;
    const auto size = static_cast<std::int64_t>(frontier.size());
    std::vector<Priority> degree(frontier.size());
    std::vector<std::uint64_t> key(frontier.size(), kUnclaimed);
    std::vector<std::uint32_t> won(frontier.size(), 0);
    std::uint64_t edges = 0;

#pragma omp parallel
    {
      // Sets whose recount still lands in this bucket compete for their
      // uncovered elements by write-min of a per-round random key.
#pragma omp for schedule(runtime) reduction(+ : edges)
      for (std::int64_t i = 0; i < size; ++i) {
        const VertexId set = frontier[static_cast<std::size_t>(i)];
        degree[i] = uncovered_degree(g, set, covered);
        edges += g.out_degree(set);
        if (degree[i] == 0 || state.bucket_of(degree[i]) != bucket) continue;
        key[i] = claim_key(seed, round, set);
        for (const WeightedNeighbor& e : g.out_neighbors(set)) {
          if (covered[e.v]) continue;
          std::atomic_ref<std::uint64_t> slot(claim[e.v]);
          std::uint64_t old = slot.load(std::memory_order_relaxed);
          while (key[i] < old && !slot.compare_exchange_weak(old, key[i], std::memory_order_relaxed)) {
          }
        }
      }
      // Accept a set when it won at least (1 - epsilon) of its elements.
#pragma omp for schedule(runtime)
      for (std::int64_t i = 0; i < size; ++i) {
        if (key[i] == kUnclaimed) continue;
        const VertexId set = frontier[static_cast<std::size_t>(i)];
        std::uint32_t count = 0;
        for (const WeightedNeighbor& e : g.out_neighbors(set)) {
          if (!covered[e.v] && claim[e.v] == key[i]) ++count;
        }
        if (count >= (1.0 - epsilon) * degree[i]) won[i] = count;
      }
#pragma omp for schedule(runtime)
      for (std::int64_t i = 0; i < size; ++i) {
        if (key[i] == kUnclaimed) continue;
        for (const WeightedNeighbor& e : g.out_neighbors(frontier[static_cast<std::size_t>(i)])) {
          if (won[i] > 0 && claim[e.v] == key[i]) {
            std::atomic_ref<std::uint8_t>(covered[e.v]).store(1, std::memory_order_relaxed);
          }
        }
      }
#pragma omp for schedule(runtime)
      for (std::int64_t i = 0; i < size; ++i) {
        if (key[i] == kUnclaimed) continue;
        for (const WeightedNeighbor& e : g.out_neighbors(frontier[static_cast<std::size_t>(i)])) {
          std::atomic_ref<std::uint64_t>(claim[e.v]).store(kUnclaimed, std::memory_order_relaxed);
        }
      }
    }

    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const VertexId set = frontier[i];
      if (won[i] > 0) {
        picks.emplace_back(set, won[i]);
        state.store(set, 0);
        continue;
      }
      const Priority d = uncovered_degree(g, set, covered);
      state.store(set, d);
      if (d > 0) queue.insert(set);
    }
    result.stats.edges_relaxed += edges;
    ++round;
  }

  std::sort(picks.begin(), picks.end());
  for (const auto& [set, gain] : picks) {
    result.chosen.push_back(set);
    result.gains.push_back(gain);
  }
  result.stats += queue.counters();
  return result;
}

}  // namespace ordgraph
