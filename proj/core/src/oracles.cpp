#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <utility>

#include "ordgraph/algorithms.hpp"

namespace ordgraph {

std::vector<Priority> dijkstra_oracle(const Graph& g, VertexId source) {
  if (source >= g.num_vertices()) throw ConfigError("source out of range");
  std::vector<std::int64_t> dist(g.num_vertices(), kInfinity);
  using Item = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (const WeightedNeighbor& e : g.out_neighbors(u)) {
      const std::int64_t candidate = d + e.w;
      if (candidate < kInfinity && candidate < dist[e.v]) {
        dist[e.v] = candidate;
        heap.emplace(candidate, e.v);
      }
    }
  }
  return {dist.begin(), dist.end()};
}

std::vector<Priority> kcore_oracle(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::vector<Priority> degree(n);
  std::set<std::pair<Priority, VertexId>> order;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = static_cast<Priority>(g.out_degree(v));
    order.emplace(degree[v], v);
  }
  std::vector<std::uint8_t> removed(n, 0);
  std::vector<Priority> coreness(n, 0);
  Priority k = 0;
  while (!order.empty()) {
    const auto [d, u] = *order.begin();
    order.erase(order.begin());
    k = std::max(k, d);
    coreness[u] = k;
    removed[u] = 1;
    for (const WeightedNeighbor& e : g.out_neighbors(u)) {
      if (removed[e.v] || degree[e.v] <= k) continue;
      order.erase({degree[e.v], e.v});
      --degree[e.v];
      order.emplace(degree[e.v], e.v);
    }
  }
  return coreness;
}

std::vector<VertexId> greedy_setcover_oracle(const Graph& incidence) {
  const VertexId n = incidence.num_vertices();
  std::vector<std::uint8_t> covered(n, 0);
  std::vector<std::uint8_t> used(n, 0);
  std::vector<VertexId> chosen;
  while (true) {
    VertexId best = kInvalidVertex;
    std::size_t best_gain = 0;
    for (VertexId s = 0; s < n; ++s) {
      if (used[s]) continue;
      std::size_t gain = 0;
      for (const WeightedNeighbor& e : incidence.out_neighbors(s)) gain += covered[e.v] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    if (best == kInvalidVertex) break;
    used[best] = 1;
    chosen.push_back(best);
    for (const WeightedNeighbor& e : incidence.out_neighbors(best)) covered[e.v] = 1;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool is_valid_cover(const Graph& incidence, const std::vector<VertexId>& chosen) {
  const VertexId n = incidence.num_vertices();
  std::vector<std::uint8_t> covered(n, 0);
  for (VertexId s : chosen) {
    if (s >= n) return false;
    for (const WeightedNeighbor& e : incidence.out_neighbors(s)) covered[e.v] = 1;
  }
  for (VertexId s = 0; s < n; ++s) {
    for (const WeightedNeighbor& e : incidence.out_neighbors(s)) {
      if (!covered[e.v]) return false;
    }
  }
  return true;
}

}  // namespace ordgraph
