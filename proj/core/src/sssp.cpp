#include <cmath>
#include <stdexcept>
#include <string>

#include "detail/shortest_paths.hpp"
#include "ordgraph/algorithms.hpp"

namespace ordgraph {

void detail::check_vertex(const Graph& g, VertexId v, const char* what) {
  if (v >= g.num_vertices()) {
    throw std::domain_error(std::string(what) + " " + std::to_string(v) + " out of range (n = " +
                      std::to_string(g.num_vertices()) + ")");
  }
}

SsspResult sssp(const Graph& g, VertexId source, const Schedule& s, bool trace) {
  require_valid(Algorithm::kSssp, s, g.has_in_edges());
  detail::check_vertex(g, source, "source");
  SsspResult result;
  PriorityState state = detail::initial_distances(g, source, s);
  result.stats = detail::run_shortest_paths(g, state, source, s, trace, detail::relax_min, [](auto&) { return false; });
  result.dist = state.release();
  return result;
}

SsspResult wbfs(const Graph& g, VertexId source, const Schedule& s, bool trace) {
  require_valid(Algorithm::kWbfs, s, g.has_in_edges());
  detail::check_vertex(g, source, "source");
  const auto n = g.num_vertices();
  const Weight upper = n > 1 ? static_cast<Weight>(std::ceil(std::log2(static_cast<double>(n)))) : 1;
  if (g.num_edges() > 0 && g.min_weight() == 0) throw std::domain_error("wbfs requires positive weights");
  const bool warn = g.num_edges() > 0 && g.max_weight() >= upper;
  SsspResult result;
  PriorityState state = detail::initial_distances(g, source, s);
  result.stats = detail::run_shortest_paths(g, state, source, s, trace, detail::relax_min, [](auto&) { return false; });
  result.dist = state.release();
  result.weight_range_warning = warn;
  return result;
}

DistanceResult ppsp(const Graph& g, VertexId source, VertexId target, const Schedule& s, bool trace) {
  require_valid(Algorithm::kPpsp, s, g.has_in_edges());
  detail::check_vertex(g, source, "source");
  detail::check_vertex(g, target, "target");
  DistanceResult result;
  PriorityState state = detail::initial_distances(g, source, s);
  result.stats = detail::run_shortest_paths(g, state, source, s, trace, detail::relax_min,
                                            [target](auto& queue) { return queue.finished_vertex(target); });
  result.distance = state.load(target);
  return result;
}

}  // namespace ordgraph
