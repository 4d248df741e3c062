#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "ordgraph/types.hpp"

namespace ordgraph {

struct Coordinate {
  double lat = 0.0;
  double lon = 0.0;
};

/// Per-vertex planar position used by the A* heuristic.
class CoordinateTable {
 public:
  CoordinateTable() = default;
  explicit CoordinateTable(VertexId num_vertices)
      : points_(num_vertices), present_(num_vertices, 0) {}

  VertexId size() const { return static_cast<VertexId>(points_.size()); }
  void set(VertexId v, Coordinate c);
  bool has(VertexId v) const { return v < size() && present_[v] != 0; }
  bool complete() const;
  /// First vertex without a coordinate, or kInvalidVertex.
  VertexId first_missing() const;
  const Coordinate& operator[](VertexId v) const { return points_[v]; }

 private:
  std::vector<Coordinate> points_;
  std::vector<std::uint8_t> present_;
};

double euclidean(const Coordinate& a, const Coordinate& b);

// ".coords" format: "v lat lon" per line in decimal degrees; '#' comments.
CoordinateTable parse_coordinates(std::istream& in, VertexId num_vertices);
CoordinateTable load_coordinates(const std::filesystem::path& path, VertexId num_vertices);
void write_coordinates(std::ostream& out, const CoordinateTable& table);

}  // namespace ordgraph
