#include "ordgraph/coordinates.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ordgraph {

void CoordinateTable::set(VertexId v, Coordinate c) {
  if (v >= size()) throw std::domain_error("coordinate for vertex outside the graph");
  if (!std::isfinite(c.lat) || !std::isfinite(c.lon)) throw std::domain_error("non-finite coordinate");
  points_[v] = c;
  present_[v] = 1;
}

bool CoordinateTable::complete() const { return first_missing() == kInvalidVertex; }

VertexId CoordinateTable::first_missing() const {
  const auto it = std::find(present_.begin(), present_.end(), std::uint8_t{0});
  return it == present_.end() ? kInvalidVertex : static_cast<VertexId>(it - present_.begin());
}

double euclidean(const Coordinate& a, const Coordinate& b) {
  return std::hypot(a.lat - b.lat, a.lon - b.lon);
}

CoordinateTable parse_coordinates(std::istream& in, VertexId num_vertices) {
  CoordinateTable table(num_vertices);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long v = -1;
    double lat = 0.0;
    double lon = 0.0;
    std::string extra;
    if (!(fields >> v >> lat >> lon) || (fields >> extra) || v < 0) {
      throw ParseError(line_no, "expected 'v lat lon'");
    }
    if (v >= num_vertices) throw ParseError(line_no, "vertex id outside the graph");
    if (!std::isfinite(lat) || !std::isfinite(lon)) throw ParseError(line_no, "non-finite coordinate");
    table.set(static_cast<VertexId>(v), {lat, lon});
  }
  return table;
}

CoordinateTable load_coordinates(const std::filesystem::path& path, VertexId num_vertices) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coordinates file '" + path.string() + "'");
  return parse_coordinates(in, num_vertices);
}

void write_coordinates(std::ostream& out, const CoordinateTable& table) {
  out << std::setprecision(10);
  for (VertexId v = 0; v < table.size(); ++v) {
    if (table.has(v)) out << v << ' ' << table[v].lat << ' ' << table[v].lon << '\n';
  }
}

}  // namespace ordgraph
