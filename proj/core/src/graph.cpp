#include "ordgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordgraph {
namespace {

// Counting sort of (key, neighbor) pairs into CSR form; stable in input order.
template <typename KeyFn, typename NeighborFn>
void build_csr(VertexId n, std::span<const Edge> edges, KeyFn key, NeighborFn neighbor,
               std::vector<EdgeIndex>& offsets, std::vector<WeightedNeighbor>& adj) {
  offsets.assign(std::size_t{n} + 1, 0);
  for (const Edge& e : edges) ++offsets[key(e) + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  adj.resize(edges.size());
  std::vector<EdgeIndex> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) adj[cursor[key(e)]++] = neighbor(e);
}

}  // namespace

Graph Graph::from_edges(VertexId num_vertices, std::span<const Edge> edges, BuildOptions options) {
  for (const Edge& e : edges) {
    if (e.src >= num_vertices || e.dst >= num_vertices) {
      throw std::domain_error("edge (" + std::to_string(e.src) + "," + std::to_string(e.dst) +
                              ") outside vertex range " + std::to_string(num_vertices));
    }
    if (e.weight < 0) {
      throw std::domain_error("negative edge weight " + std::to_string(e.weight));
    }
  }

  std::vector<Edge> symmetric;
  if (options.symmetrize) {
    symmetric.reserve(edges.size() * 2);
    for (const Edge& e : edges) {
      symmetric.push_back(e);
      if (e.src != e.dst) symmetric.push_back({e.dst, e.src, e.weight});
    }
    edges = symmetric;
  }

  Graph g;
  g.num_vertices_ = num_vertices;
  g.symmetrized_ = options.symmetrize;
  build_csr(
      num_vertices, edges, [](const Edge& e) { return e.src; },
      [](const Edge& e) { return WeightedNeighbor{e.dst, e.weight}; }, g.out_offsets_, g.out_edges_);
  if (options.build_in_edges) {
    build_csr(
        num_vertices, edges, [](const Edge& e) { return e.dst; },
        [](const Edge& e) { return WeightedNeighbor{e.src, e.weight}; }, g.in_offsets_, g.in_edges_);
    g.has_in_edges_ = true;
  }
  return g;
}

EdgeIndex Graph::in_degree(VertexId v) const {
  if (!has_in_edges_) throw ConfigError("graph was built without in-edges");
  return in_offsets_[v + 1] - in_offsets_[v];
}

std::span<const WeightedNeighbor> Graph::in_neighbors(VertexId v) const {
  if (!has_in_edges_) throw ConfigError("graph was built without in-edges");
  return {in_edges_.data() + in_offsets_[v], in_edges_.data() + in_offsets_[v + 1]};
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(out_edges_.size());
  for (VertexId u = 0; u < num_vertices_; ++u) {
    for (const WeightedNeighbor& e : out_neighbors(u)) out.push_back({u, e.v, e.w});
  }
  return out;
}

Weight Graph::max_weight() const {
  Weight w = 0;
  for (const WeightedNeighbor& e : out_edges_) w = std::max(w, e.w);
  return w;
}

Weight Graph::min_weight() const {
  if (out_edges_.empty()) return 0;
  Weight w = out_edges_.front().w;
  for (const WeightedNeighbor& e : out_edges_) w = std::min(w, e.w);
  return w;
}

Graph Graph::with_in_edges() const {
  if (has_in_edges_) return *this;
  Graph out = *this;
  build_csr(
      num_vertices_, edges(), [](const Edge& e) { return e.dst; },
      [](const Edge& e) { return WeightedNeighbor{e.src, e.weight}; }, out.in_offsets_, out.in_edges_);
  out.has_in_edges_ = true;
  return out;
}

}  // namespace ordgraph
