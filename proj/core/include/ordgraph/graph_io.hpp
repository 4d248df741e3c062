#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>

#include "ordgraph/graph.hpp"

namespace ordgraph {

// Weighted edge list (.wel): one "src dst weight" triple per line, ids 0-based.
// Lines starting with '#' are comments, except an optional "# n <count>"
// header that fixes the vertex count (grown to max id + 1 if too small).
//
// Errors: malformed line -> ParseError (with line number); negative weight ->
// std::domain_error; unreadable file -> IoError.
Graph parse_weighted_edge_list(std::istream& in, BuildOptions options = {});
Graph load_weighted_edge_list(const std::filesystem::path& path, BuildOptions options = {});

/// Writes the "# n" header followed by every directed edge in CSR order.
void write_weighted_edge_list(std::ostream& out, const Graph& g);
void save_weighted_edge_list(const std::filesystem::path& path, const Graph& g);

/// Canonical per-vertex output: "v value" lines, kInfinity printed as "inf".
void write_vertex_values(std::ostream& out, std::span<const Priority> values);

}  // namespace ordgraph
