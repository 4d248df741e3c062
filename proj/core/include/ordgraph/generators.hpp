#pragma once

#include <cstdint>
#include <optional>

#include "ordgraph/coordinates.hpp"
#include "ordgraph/graph.hpp"

namespace ordgraph {

enum class SyntheticKind { kPath, kGrid, kUniformRandom };

struct SyntheticParams {
  SyntheticKind kind = SyntheticKind::kUniformRandom;
  VertexId n = 0;            // path, uniform_random
  EdgeIndex m = 0;           // uniform_random
  VertexId rows = 0;         // grid
  VertexId cols = 0;         // grid
  Weight weight_lo = 1;      // weights drawn uniformly from [lo, hi)
  Weight weight_hi = 2;
  std::uint64_t seed = 0;
  BuildOptions build{};
};

/// Deterministic for a fixed seed. path and grid emit both directions of every
/// lattice edge with one shared weight; uniform_random samples m directed
/// edges with replacement, resampling self-loops. Throws std::domain_error on
/// zero-size or otherwise invalid parameters.
Graph generate_synthetic(const SyntheticParams& params);

Graph make_path(VertexId n, Weight weight = 1, BuildOptions build = {});
Graph make_grid(VertexId rows, VertexId cols, Weight weight_lo, Weight weight_hi, std::uint64_t seed,
                BuildOptions build = {});
Graph make_uniform_random(VertexId n, EdgeIndex m, Weight weight_lo, Weight weight_hi, std::uint64_t seed,
                          BuildOptions build = {});

/// Lattice coordinates for grid(rows, cols): vertex r*cols+c sits at (r, c).
CoordinateTable grid_coordinates(VertexId rows, VertexId cols);

}  // namespace ordgraph
