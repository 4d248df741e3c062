#pragma once

#include <span>
#include <vector>

#include "ordgraph/types.hpp"

namespace ordgraph {

struct Edge {
  VertexId src;
  VertexId dst;
  Weight weight;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct WeightedNeighbor {
  VertexId v;
  Weight w;
};

struct BuildOptions {
  // Add (v,u,w) for every (u,v,w). Self-loops are not doubled.
  bool symmetrize = false;
  // Materialize the transposed adjacency needed by pull traversal.
  bool build_in_edges = false;
};

/// Immutable compressed adjacency with non-negative integer weights.
/// Parallel edges are kept as given.
class Graph {
 public:
  Graph() = default;

  /// Throws std::domain_error on an out-of-range endpoint or negative weight.
  static Graph from_edges(VertexId num_vertices, std::span<const Edge> edges,
                          BuildOptions options = {});

  VertexId num_vertices() const { return num_vertices_; }
  EdgeIndex num_edges() const { return out_edges_.size(); }
  bool has_in_edges() const { return has_in_edges_; }
  bool symmetrized() const { return symmetrized_; }

  EdgeIndex out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  EdgeIndex in_degree(VertexId v) const;

  std::span<const WeightedNeighbor> out_neighbors(VertexId v) const {
    return {out_edges_.data() + out_offsets_[v], out_edges_.data() + out_offsets_[v + 1]};
  }
  /// Throws ConfigError when the graph was built without in-edges.
  std::span<const WeightedNeighbor> in_neighbors(VertexId v) const;

  std::span<const EdgeIndex> out_offsets() const { return out_offsets_; }
  std::span<const EdgeIndex> in_offsets() const { return in_offsets_; }

  /// Directed edge list in CSR order.
  std::vector<Edge> edges() const;
  Weight max_weight() const;
  Weight min_weight() const;

  /// Copy carrying in-edges (plain copy if already present).
  Graph with_in_edges() const;

 private:
  VertexId num_vertices_ = 0;
  bool has_in_edges_ = false;
  bool symmetrized_ = false;
  std::vector<EdgeIndex> out_offsets_{0};
  std::vector<WeightedNeighbor> out_edges_;
  std::vector<EdgeIndex> in_offsets_;
  std::vector<WeightedNeighbor> in_edges_;
};

}  // namespace ordgraph
