#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "ordgraph/coordinates.hpp"
#include "ordgraph/generators.hpp"
#include "ordgraph/graph_io.hpp"
#include "ordgraph/vertex_subset.hpp"
#include "test_support.hpp"

namespace ordgraph {
namespace {

std::vector<std::pair<VertexId, Weight>> neighbors(const Graph& g, VertexId v) {
  std::vector<std::pair<VertexId, Weight>> out;
  for (const auto& e : g.out_neighbors(v)) out.emplace_back(e.v, e.w);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(EdgeList, ParsesTriples) {
  std::istringstream in("0 1 5\n1 2 3\n");
  const Graph g = parse_weighted_edge_list(in);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(neighbors(g, 0), (std::vector<std::pair<VertexId, Weight>>{{1, 5}}));
}

TEST(EdgeList, Symmetrize) {
  std::istringstream in("0 1 5\n1 2 3\n");
  const Graph g = parse_weighted_edge_list(in, {.symmetrize = true});
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_EQ(neighbors(g, 1), (std::vector<std::pair<VertexId, Weight>>{{0, 5}, {2, 3}}));
}

TEST(EdgeList, NegativeIdIsParseErrorWithLine) {
  std::istringstream in("# comment\n0 1 2\n0 -1 5\n");
  try {
    parse_weighted_edge_list(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(EdgeList, MalformedLines) {
  for (const char* text : {"0 1\n", "0 1 2 3\n", "a b c\n", "0 1 2.5\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_weighted_edge_list(in), ParseError) << text;
  }
}

TEST(EdgeList, NegativeWeightIsDomainError) {
  std::istringstream in("0 1 -4\n");
  EXPECT_THROW(parse_weighted_edge_list(in), std::domain_error);
}

TEST(EdgeList, HeaderFixesVertexCount) {
  std::istringstream in("# n 10\n0 1 1\n");
  EXPECT_EQ(parse_weighted_edge_list(in).num_vertices(), 10u);
  std::istringstream small("# n 2\n0 5 1\n");
  EXPECT_EQ(parse_weighted_edge_list(small).num_vertices(), 6u);
}

TEST(EdgeList, ParallelEdgesKept) {
  std::istringstream in("0 1 5\n0 1 2\n");
  const Graph g = parse_weighted_edge_list(in);
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(EdgeList, MissingFileIsIoError) {
  EXPECT_THROW(load_weighted_edge_list("/nonexistent/graph.wel"), IoError);
}

TEST(EdgeList, RoundTrip) {
  const Graph g = testing::corpus_graph(3, {});
  std::stringstream buffer;
  write_weighted_edge_list(buffer, g);
  const Graph h = parse_weighted_edge_list(buffer);
  EXPECT_EQ(h.num_vertices(), g.num_vertices());
  auto a = g.edges();
  auto b = h.edges();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(VertexValues, InfinityPrintedAsInf) {
  std::ostringstream out;
  const std::vector<Priority> values{0, 7, kInfinity};
  write_vertex_values(out, values);
  EXPECT_EQ(out.str(), "0 0\n1 7\n2 inf\n");
}

TEST(Graph, CsrInvariants) {
  const Graph g = testing::corpus_graph(11);
  const auto offsets = g.out_offsets();
  ASSERT_EQ(offsets.size(), g.num_vertices() + 1u);
  EXPECT_TRUE(std::is_sorted(offsets.begin(), offsets.end()));
  EXPECT_EQ(offsets.back(), g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (const auto& e : g.out_neighbors(v)) {
      EXPECT_LT(e.v, g.num_vertices());
      EXPECT_GE(e.w, 0);
    }
  }
}

TEST(Graph, InEdgesAreTransposedOutEdges) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const Graph g = testing::corpus_graph(seed);
    std::vector<Edge> out = g.edges();
    std::vector<Edge> in;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      for (const auto& e : g.in_neighbors(v)) in.push_back({e.v, v, e.w});
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    EXPECT_EQ(out, in);
  }
}

TEST(Graph, SymmetrizedHasReverseOfEveryEdge) {
  const Graph g = make_uniform_random(32, 100, 1, 50, 5, {.symmetrize = true});
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) {
    EXPECT_TRUE(std::binary_search(edges.begin(), edges.end(), Edge{e.dst, e.src, e.weight}));
  }
}

TEST(Graph, InNeighborsRequireInEdges) {
  const Graph g = make_path(3);
  EXPECT_THROW(g.in_neighbors(0), ConfigError);
  EXPECT_EQ(g.with_in_edges().in_neighbors(1).size(), 2u);
}

TEST(Graph, RejectsBadEdges) {
  const std::vector<Edge> out_of_range{{0, 3, 1}};
  EXPECT_THROW(Graph::from_edges(3, out_of_range), std::domain_error);
  const std::vector<Edge> negative{{0, 1, -1}};
  EXPECT_THROW(Graph::from_edges(3, negative), std::domain_error);
}

TEST(Generators, Path) {
  const Graph g = make_path(3, 1);
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_EQ(neighbors(g, 1), (std::vector<std::pair<VertexId, Weight>>{{0, 1}, {2, 1}}));
}

TEST(Generators, Grid) {
  EXPECT_EQ(make_grid(2, 2, 1, 2, 0).num_edges(), 8u);
  EXPECT_EQ(make_grid(3, 4, 1, 2, 0).num_edges(), 2u * (3 * 3 + 2 * 4));
}

TEST(Generators, UniformRandomDeterministic) {
  const Graph a = make_uniform_random(64, 512, 1, 1000, 7);
  const Graph b = make_uniform_random(64, 512, 1, 1000, 7);
  EXPECT_EQ(a.edges(), b.edges());
  EXPECT_NE(a.edges(), make_uniform_random(64, 512, 1, 1000, 8).edges());
  for (const Edge& e : a.edges()) {
    EXPECT_NE(e.src, e.dst);
    EXPECT_GE(e.weight, 1);
    EXPECT_LT(e.weight, 1000);
  }
}

TEST(Generators, RejectsZeroSizes) {
  EXPECT_THROW(make_path(0), std::domain_error);
  EXPECT_THROW(make_grid(0, 3, 1, 2, 0), std::domain_error);
  EXPECT_THROW(make_uniform_random(0, 5, 1, 2, 0), std::domain_error);
}

TEST(Coordinates, ParseAndMissing) {
  std::istringstream in("0 1.5 2.5\n2 -1 0\n");
  const CoordinateTable t = parse_coordinates(in, 3);
  EXPECT_TRUE(t.has(0));
  EXPECT_FALSE(t.has(1));
  EXPECT_FALSE(t.complete());
  EXPECT_EQ(t.first_missing(), 1u);
  EXPECT_DOUBLE_EQ(t[0].lon, 2.5);
  EXPECT_DOUBLE_EQ(euclidean({0, 0}, {3, 4}), 5.0);
}

TEST(Coordinates, GridCoordinatesFollowRowMajorIds) {
  const CoordinateTable t = grid_coordinates(2, 3);
  EXPECT_TRUE(t.complete());
  EXPECT_DOUBLE_EQ(t[4].lat, 1.0);
  EXPECT_DOUBLE_EQ(t[4].lon, 1.0);
}

TEST(OutDegreeSum, Examples) {
  const Graph path = make_path(3);
  EXPECT_EQ(out_degree_sum(path, VertexSubset::sparse(3, {1})), 2u);
  EXPECT_EQ(out_degree_sum(path, VertexSubset::empty(3)), 0u);
  const Graph g = make_uniform_random(64, 512, 1, 1000, 7);
  std::vector<VertexId> all(64);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(out_degree_sum(g, VertexSubset::sparse(64, all)), 512u);
  EXPECT_EQ(out_degree_sum(g, VertexSubset::sparse(64, all).to_dense()), 512u);
}

TEST(VertexSubset, Conversions) {
  const VertexSubset dense = VertexSubset::sparse(4, {1, 3}).to_dense();
  EXPECT_TRUE(dense.is_dense());
  EXPECT_EQ(dense.size(), 2u);
  EXPECT_EQ(dense.words()[0], 0b1010u);
  EXPECT_TRUE(VertexSubset::dense(70, std::vector<std::uint64_t>(2, 0)).to_sparse().ids().empty());
}

TEST(VertexSubset, RandomRoundTripPreservesMembership) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const VertexId n = 1 + static_cast<VertexId>(rng() % 300);
    std::vector<VertexId> ids;
    for (VertexId v = 0; v < n; ++v) {
      if (rng() % 3 == 0) ids.push_back(v);
    }
    std::shuffle(ids.begin(), ids.end(), rng);
    const VertexSubset sparse = VertexSubset::sparse(n, ids);
    const VertexSubset dense = sparse.to_dense();
    ASSERT_EQ(dense.size(), ids.size());
    for (VertexId v = 0; v < n; ++v) ASSERT_EQ(dense.contains(v), sparse.contains(v));
    const VertexSubset round_trip = dense.to_sparse();
    std::vector<VertexId> back(round_trip.ids().begin(), round_trip.ids().end());
    std::sort(back.begin(), back.end());
    std::sort(ids.begin(), ids.end());
    ASSERT_EQ(back, ids);
  }
}

TEST(VertexSubset, DenseRejectsBadBitmaps) {
  EXPECT_THROW(VertexSubset::dense(10, std::vector<std::uint64_t>(2, 0)), std::invalid_argument);
  EXPECT_THROW(VertexSubset::dense(10, std::vector<std::uint64_t>{1u << 12}), std::invalid_argument);
}

}  // namespace
}  // namespace ordgraph
