#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>

#include "detail/shortest_paths.hpp"
#include "ordgraph/algorithms.hpp"

namespace ordgraph {

std::vector<Priority> astar_heuristic(const Graph& g, const CoordinateTable& coords, VertexId target) {
  const VertexId n = g.num_vertices();
  if (coords.size() < n || !coords.complete()) {
    const VertexId missing = coords.size() < n && coords.complete() ? coords.size() : coords.first_missing();
    throw ConfigError("missing coordinates for vertex " + std::to_string(missing));
  }
  detail::check_vertex(g, target, "target");

  double scale = 0.0;
  for (VertexId u = 0; u < n; ++u) {
    for (const WeightedNeighbor& e : g.out_neighbors(u)) {
      const double d = euclidean(coords[u], coords[e.v]);
      if (d == 0.0) continue;
      if (e.w == 0) {
        scale = std::numeric_limits<double>::infinity();
        break;
      }
      scale = std::max(scale, d / e.w);
    }
    if (std::isinf(scale)) break;
  }

  std::vector<Priority> h(n, 0);
  if (scale == 0.0 || std::isinf(scale)) return h;
  for (VertexId v = 0; v < n; ++v) {
    const double estimate = std::floor(euclidean(coords[v], coords[target]) / scale);
    h[v] = static_cast<Priority>(std::min(estimate, static_cast<double>(kInfinity - 1)));
  }
  return h;
}

DistanceResult astar(const Graph& g, const CoordinateTable& coords, VertexId source, VertexId target,
                     const Schedule& s, bool trace) {
  return astar(g, astar_heuristic(g, coords, target), source, target, s, trace);
}

DistanceResult astar(const Graph& g, const std::vector<Priority>& heuristic, VertexId source, VertexId target,
                     const Schedule& s, bool trace) {
  require_valid(Algorithm::kAstar, s, g.has_in_edges());
  detail::check_vertex(g, source, "source");
  detail::check_vertex(g, target, "target");
  if (heuristic.size() != g.num_vertices()) throw ConfigError("heuristic must have one value per vertex");

  // f: distance so far. The queue orders by g = max(f + h, g[parent]).
  std::vector<Priority> f(g.num_vertices(), kInfinity);
  f[source] = 0;
  PriorityState state = detail::initial_distances(g, source, s, heuristic[source]);

  auto update_edge = [&f, &heuristic](VertexId src, VertexId dst, Weight w, auto& up) {
    const Priority f_src = std::atomic_ref<Priority>(f[src]).load(std::memory_order_relaxed);
    const std::int64_t new_f = std::int64_t{f_src} + w;
    if (new_f >= kInfinity) return;
    std::atomic_ref<Priority> slot(f[dst]);
    Priority old = slot.load(std::memory_order_relaxed);
    bool changed = false;
    while (new_f < old) {
      if (slot.compare_exchange_weak(old, static_cast<Priority>(new_f), std::memory_order_relaxed)) {
        changed = true;
        break;
      }
    }
    if (!changed) return;
    const std::int64_t new_g = std::max(new_f + heuristic[dst], std::int64_t{up.priority(src)});
    up.update_min(dst, static_cast<Priority>(std::min<std::int64_t>(new_g, kInfinity - 1)));
  };

  DistanceResult result;
  result.stats = detail::run_shortest_paths(g, state, source, s, trace, update_edge,
                                            [target](auto& queue) { return queue.finished_vertex(target); });
  result.distance = f[target];
  return result;
}

}  // namespace ordgraph
