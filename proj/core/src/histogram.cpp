#include "ordgraph/histogram.hpp"

#include <atomic>

#include <omp.h>

#include "ordgraph/parallel.hpp"

namespace ordgraph {

HistogramScratch::HistogramScratch(VertexId universe) : counts_(universe, 0) {}

namespace {

std::vector<BucketUpdate> gather(const std::vector<CachePadded<std::vector<BucketUpdate>>>& parts) {
  std::vector<std::size_t> sizes(parts.size());
  for (std::size_t t = 0; t < parts.size(); ++t) sizes[t] = parts[t].value.size();
  const auto offsets = exclusive_prefix_sum(sizes);
  std::vector<BucketUpdate> out(offsets.back());
  for (std::size_t t = 0; t < parts.size(); ++t) {
    std::copy(parts[t].value.begin(), parts[t].value.end(), out.begin() + static_cast<std::ptrdiff_t>(offsets[t]));
  }
  return out;
}

}  // namespace

std::vector<BucketUpdate> apply_constant_sum(const Graph& g, const VertexSubset& frontier, Priority per_edge,
                                             Priority threshold, PriorityState& state, const Schedule& s,
                                             HistogramScratch& scratch, RoundStats& stats) {
  if (s.pull() && !g.has_in_edges()) throw ConfigError("DensePull requires a graph built with in-edges");
  set_loop_grain(s.grain);
  const int threads = num_threads();
  std::vector<CachePadded<std::vector<BucketUpdate>>> parts(static_cast<std::size_t>(threads));
  std::vector<std::uint32_t>& counts = scratch.counts_;
  std::uint64_t edges = 0;

  if (!s.pull()) {
    const VertexSubset sparse = frontier.to_sparse();
    const auto ids = sparse.ids();
    std::vector<CachePadded<std::vector<VertexId>>> touched(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
      auto& mine = touched[static_cast<std::size_t>(omp_get_thread_num())].value;
#pragma omp for schedule(runtime) reduction(+ : edges)
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (const WeightedNeighbor& e : g.out_neighbors(ids[i])) {
          ++edges;
          if (std::atomic_ref<std::uint32_t>(counts[e.v]).fetch_add(1, std::memory_order_relaxed) == 0) {
            mine.push_back(e.v);
          }
        }
      }
      auto& out = parts[static_cast<std::size_t>(omp_get_thread_num())].value;
      for (VertexId v : mine) {
        const std::int64_t diff = std::int64_t{per_edge} * counts[v];
        counts[v] = 0;
        const Priority old = state.load(v);
        const Priority next = clamped_sum(old, diff, threshold);
        if (next != old) {
          state.store(v, next);
          out.push_back({v, state.bucket_of(next)});
        }
      }
    }
  } else {
    const VertexSubset dense = frontier.to_dense();
    const auto bits = dense.words();
    const auto n = static_cast<std::int64_t>(g.num_vertices());
#pragma omp parallel num_threads(threads)
    {
      auto& out = parts[static_cast<std::size_t>(omp_get_thread_num())].value;
#pragma omp for schedule(runtime) reduction(+ : edges)
      for (std::int64_t i = 0; i < n; ++i) {
        const auto v = static_cast<VertexId>(i);
        std::uint32_t count = 0;
        for (const WeightedNeighbor& e : g.in_neighbors(v)) {
          ++edges;
          if (test_bit(bits, e.v)) ++count;
        }
        if (count == 0) continue;
        const Priority old = state.load(v);
        const Priority next = clamped_sum(old, std::int64_t{per_edge} * count, threshold);
        if (next != old) {
          state.store(v, next);
          out.push_back({v, state.bucket_of(next)});
        }
      }
    }
  }
  stats.edges_relaxed += edges;
  ++stats.buffer_compactions;
  return gather(parts);
}

}  // namespace ordgraph
