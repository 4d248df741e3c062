#include "ordgraph/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ordgraph {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
bool parse_number(std::string_view token, T& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

VertexId parse_vertex(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  if (!parse_number(token, value)) {
    throw ParseError(line_no, "expected unsigned vertex id, got '" + std::string(token) + "'");
  }
  if (value >= kInvalidVertex) throw ParseError(line_no, "vertex id exceeds 32-bit range");
  return static_cast<VertexId>(value);
}

}  // namespace

Graph parse_weighted_edge_list(std::istream& in, BuildOptions options) {
  std::vector<Edge> edges;
  std::uint64_t declared = 0;
  std::uint64_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#') {
      if (tokens.size() == 3 && tokens[0] == "#" && tokens[1] == "n") {
        if (!parse_number(tokens[2], declared)) throw ParseError(line_no, "bad vertex count header");
      }
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected 'src dst weight', got " + std::to_string(tokens.size()) + " fields");
    }
    const VertexId src = parse_vertex(tokens[0], line_no);
    const VertexId dst = parse_vertex(tokens[1], line_no);
    std::int64_t weight = 0;
    if (!parse_number(tokens[2], weight)) {
      throw ParseError(line_no, "expected integer weight, got '" + std::string(tokens[2]) + "'");
    }
    if (weight < 0) {
      throw std::domain_error("line " + std::to_string(line_no) + ": negative weight " + std::to_string(weight));
    }
    if (weight > std::numeric_limits<Weight>::max()) throw ParseError(line_no, "weight exceeds 32-bit range");
    edges.push_back({src, dst, static_cast<Weight>(weight)});
    max_id_plus_one = std::max<std::uint64_t>(max_id_plus_one, std::uint64_t{std::max(src, dst)} + 1);
  }
  const std::uint64_t n = std::max(declared, max_id_plus_one);
  if (n >= kInvalidVertex) throw ParseError(line_no, "vertex count exceeds 32-bit range");
  return Graph::from_edges(static_cast<VertexId>(n), edges, options);
}

Graph load_weighted_edge_list(const std::filesystem::path& path, BuildOptions options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path.string() + "'");
  return parse_weighted_edge_list(in, options);
}

void write_weighted_edge_list(std::ostream& out, const Graph& g) {
  out << "# n " << g.num_vertices() << '\n';
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (const WeightedNeighbor& e : g.out_neighbors(u)) out << u << ' ' << e.v << ' ' << e.w << '\n';
  }
}

void save_weighted_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file '" + path.string() + "'");
  write_weighted_edge_list(out, g);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_vertex_values(std::ostream& out, std::span<const Priority> values) {
  for (std::size_t v = 0; v < values.size(); ++v) {
    out << v << ' ';
    if (values[v] == kInfinity) {
      out << "inf";
    } else {
      out << values[v];
    }
    out << '\n';
  }
}

}  // namespace ordgraph
