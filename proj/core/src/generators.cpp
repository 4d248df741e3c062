#include "ordgraph/generators.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace ordgraph {
namespace {

class WeightSampler {
 public:
  WeightSampler(Weight lo, Weight hi, std::mt19937_64& rng) : dist_(lo, hi - 1), rng_(rng) {
    if (lo < 0 || hi <= lo) throw std::domain_error("weight range must satisfy 0 <= lo < hi");
  }
  Weight operator()() { return dist_(rng_); }

 private:
  std::uniform_int_distribution<Weight> dist_;
  std::mt19937_64& rng_;
};

}  // namespace

Graph generate_synthetic(const SyntheticParams& p) {
  std::mt19937_64 rng(p.seed);
  std::vector<Edge> edges;
  VertexId n = 0;
  switch (p.kind) {
    case SyntheticKind::kPath: {
      if (p.n < 2) throw std::domain_error("path needs n >= 2");
      WeightSampler weight(p.weight_lo, p.weight_hi, rng);
      n = p.n;
      edges.reserve(2 * std::size_t{n});
      for (VertexId i = 0; i + 1 < n; ++i) {
        const Weight w = weight();
        edges.push_back({i, i + 1, w});
        edges.push_back({i + 1, i, w});
      }
      break;
    }
    case SyntheticKind::kGrid: {
      if (p.rows < 2 || p.cols < 2) throw std::domain_error("grid needs rows, cols >= 2");
      if (std::uint64_t{p.rows} * p.cols >= kInvalidVertex) throw std::domain_error("grid too large");
      WeightSampler weight(p.weight_lo, p.weight_hi, rng);
      n = p.rows * p.cols;
      for (VertexId r = 0; r < p.rows; ++r) {
        for (VertexId c = 0; c < p.cols; ++c) {
          const VertexId v = r * p.cols + c;
          if (c + 1 < p.cols) {
            const Weight w = weight();
            edges.push_back({v, v + 1, w});
            edges.push_back({v + 1, v, w});
          }
          if (r + 1 < p.rows) {
            const Weight w = weight();
            edges.push_back({v, v + p.cols, w});
            edges.push_back({v + p.cols, v, w});
          }
        }
      }
      break;
    }
    case SyntheticKind::kUniformRandom: {
      if (p.n < 2 || p.m == 0) throw std::domain_error("uniform_random needs n >= 2 and m >= 1");
      WeightSampler weight(p.weight_lo, p.weight_hi, rng);
      n = p.n;
      std::uniform_int_distribution<VertexId> vertex(0, n - 1);
      edges.reserve(p.m);
      while (edges.size() < p.m) {
        const VertexId u = vertex(rng);
        const VertexId v = vertex(rng);
        if (u == v) continue;
        edges.push_back({u, v, weight()});
      }
      break;
    }
  }
  return Graph::from_edges(n, edges, p.build);
}

Graph make_path(VertexId n, Weight weight, BuildOptions build) {
  return generate_synthetic({.kind = SyntheticKind::kPath, .n = n, .weight_lo = weight,
                             .weight_hi = weight + 1, .build = build});
}

Graph make_grid(VertexId rows, VertexId cols, Weight weight_lo, Weight weight_hi, std::uint64_t seed,
                BuildOptions build) {
  return generate_synthetic({.kind = SyntheticKind::kGrid, .rows = rows, .cols = cols, .weight_lo = weight_lo,
                             .weight_hi = weight_hi, .seed = seed, .build = build});
}

Graph make_uniform_random(VertexId n, EdgeIndex m, Weight weight_lo, Weight weight_hi, std::uint64_t seed,
                          BuildOptions build) {
  return generate_synthetic({.kind = SyntheticKind::kUniformRandom, .n = n, .m = m, .weight_lo = weight_lo,
                             .weight_hi = weight_hi, .seed = seed, .build = build});
}

CoordinateTable grid_coordinates(VertexId rows, VertexId cols) {
  CoordinateTable table(rows * cols);
  for (VertexId r = 0; r < rows; ++r) {
    for (VertexId c = 0; c < cols; ++c) {
      table.set(r * cols + c, {static_cast<double>(r), static_cast<double>(c)});
    }
  }
  return table;
}

}  // namespace ordgraph
