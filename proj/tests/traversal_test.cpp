#include <algorithm>

#include <gtest/gtest.h>

#include "ordgraph/algorithms.hpp"
#include "ordgraph/generators.hpp"
#include "ordgraph/histogram.hpp"
#include "ordgraph/parallel.hpp"
#include "ordgraph/traversal.hpp"
#include "ordgraph/update_buffer.hpp"
#include "test_support.hpp"

namespace ordgraph {
namespace {

auto relax = [](VertexId src, VertexId dst, Weight w, auto& up) { up.update_min(dst, up.priority(src) + w); };

PriorityState distances(VertexId n, VertexId source, Priority delta = 1) {
  std::vector<Priority> values(n, kInfinity);
  values[source] = 0;
  return PriorityState(std::move(values), PriorityOrder::kLowerFirst, BucketMapping::linear(delta));
}

Schedule lazy_schedule(TraversalDirection direction = TraversalDirection::kSparsePush, bool dedup = true) {
  Schedule s;
  s.strategy = UpdateStrategy::kLazy;
  s.direction = direction;
  s.dedup = dedup;
  return s;
}

TEST(PrefixSum, SegmentOffsets) {
  const std::vector<std::size_t> sizes{2, 0, 1};
  EXPECT_EQ(exclusive_prefix_sum(sizes), (std::vector<std::size_t>{0, 2, 2, 3}));
  EXPECT_EQ(exclusive_prefix_sum(std::vector<std::size_t>{}), std::vector<std::size_t>{0});
}

TEST(PrefixSum, LargeInputMatchesSerial) {
  std::vector<std::size_t> sizes(200000);
  for (std::size_t i = 0; i < sizes.size(); ++i) sizes[i] = (i * 7919) % 13;
  const auto out = exclusive_prefix_sum(sizes);
  std::size_t running = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    ASSERT_EQ(out[i], running);
    running += sizes[i];
  }
  EXPECT_EQ(out.back(), running);
}

TEST(UpdateBuffer, CompactsSegmentsInOrder) {
  PriorityState state = distances(4, 0);
  state.store(1, 3);
  state.store(2, 9);
  state.store(3, 12);
  UpdateBuffer buffer(4, 3, false);
  buffer.begin_round(10);
  buffer.append(0, 1);
  buffer.append(0, 2);
  buffer.append(2, 3);
  RoundStats stats;
  const auto out = buffer.compact(state, &stats);
  EXPECT_EQ(out, (std::vector<BucketUpdate>{{1, 3}, {2, 9}, {3, 12}}));
  EXPECT_EQ(stats.buffer_compactions, 1u);
  EXPECT_EQ(stats.buffer_overruns, 0u);
  EXPECT_TRUE(buffer.compact(state).empty());
}

TEST(UpdateBuffer, DedupAcrossThreads) {
  PriorityState state = distances(4, 0);
  UpdateBuffer buffer(4, 3, true);
  buffer.begin_round(3);
  for (int tid = 0; tid < 3; ++tid) buffer.append(tid, 2);
  EXPECT_EQ(buffer.compact(state).size(), 1u);
  // Flags are cleared for the next round.
  buffer.begin_round(3);
  buffer.append(1, 2);
  EXPECT_EQ(buffer.compact(state).size(), 1u);
}

TEST(UpdateBuffer, BucketReflectsPriorityAtCompaction) {
  PriorityState state = distances(3, 0, 4);
  UpdateBuffer buffer(3, 1, true);
  buffer.begin_round(2);
  state.store(1, 13);
  buffer.append(0, 1);
  state.store(1, 6);
  EXPECT_EQ(buffer.compact(state), (std::vector<BucketUpdate>{{1, 1}}));
}

TEST(ApplyUpdatePriority, SingleRelaxationOnPath) {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}});
  PriorityState state = distances(3, 0);
  UpdateBuffer buffer(3, num_threads(), true);
  RoundStats stats;
  const auto updates = apply_update_priority(g, VertexSubset::sparse(3, {0}), relax, state, 0, lazy_schedule(),
                                             buffer, stats);
  EXPECT_EQ(state.load(1), 1);
  EXPECT_EQ(state.load(2), kInfinity);
  EXPECT_EQ(updates, (std::vector<BucketUpdate>{{1, 1}}));
  EXPECT_EQ(stats.edges_relaxed, 1u);
}

TEST(ApplyUpdatePriority, EagerUpdaterFillsCallerBins) {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}});
  PriorityState state = distances(3, 0);
  EagerBucketQueue queue(state, 1);
  queue.insert(0, 0);
  ASSERT_TRUE(queue.next_global_bucket());
  EagerUpdater up(queue, 0);
  for (const auto& e : g.out_neighbors(0)) relax(0, e.v, e.w, up);
  EXPECT_EQ(state.load(1), 1);
  auto ready = queue.next_global_bucket();
  ASSERT_TRUE(ready);
  EXPECT_EQ(ready->bucket, 1);
  EXPECT_EQ(std::vector<VertexId>(ready->vertices.ids().begin(), ready->vertices.ids().end()),
            std::vector<VertexId>{1});
}

TEST(ApplyUpdatePriority, DedupWithTwoFrontierPredecessors) {
  const Graph g =
      Graph::from_edges(3, std::vector<Edge>{{0, 2, 5}, {1, 2, 3}}, {.symmetrize = false, .build_in_edges = true});
  for (auto direction : {TraversalDirection::kSparsePush, TraversalDirection::kDensePull}) {
    std::vector<Priority> values{0, 0, kInfinity};
    PriorityState state(values, PriorityOrder::kLowerFirst, BucketMapping::linear(1));
    UpdateBuffer buffer(3, num_threads(), true);
    RoundStats stats;
    const auto updates = apply_update_priority(g, VertexSubset::sparse(3, {0, 1}), relax, state, 0,
                                               lazy_schedule(direction), buffer, stats);
    EXPECT_EQ(updates, (std::vector<BucketUpdate>{{2, 3}}));
  }
}

TEST(ApplyUpdatePriority, PushAndPullRoundsAgree) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = testing::corpus_graph(seed);
    std::vector<Priority> start(g.num_vertices(), kInfinity);
    std::vector<VertexId> frontier;
    // Frontier vertices sit at priority 0 so no frontier vertex changes
    // during the round and the outcome is order-independent.
    for (VertexId v = 0; v < g.num_vertices(); v += 5) {
      start[v] = 0;
      frontier.push_back(v);
    }
    std::vector<std::vector<Priority>> results;
    for (auto direction : {TraversalDirection::kSparsePush, TraversalDirection::kDensePull}) {
      PriorityState state(start, PriorityOrder::kLowerFirst, BucketMapping::linear(1));
      UpdateBuffer buffer(g.num_vertices(), num_threads(), true);
      RoundStats stats;
      apply_update_priority(g, VertexSubset::sparse(g.num_vertices(), frontier), relax, state, 0,
                            lazy_schedule(direction), buffer, stats);
      EXPECT_EQ(stats.buffer_overruns, 0u);
      results.push_back(state.release());
    }
    ASSERT_EQ(results[0], results[1]) << "seed " << seed;
  }
}

TEST(ApplyUpdatePriority, PullRequiresInEdges) {
  const Graph g = make_path(3);
  PriorityState state = distances(3, 0);
  UpdateBuffer buffer(3, 1, true);
  RoundStats stats;
  EXPECT_THROW(apply_update_priority(g, VertexSubset::sparse(3, {0}), relax, state, 0,
                                     lazy_schedule(TraversalDirection::kDensePull), buffer, stats),
               ConfigError);
}

TEST(Histogram, CountsFrontierNeighbors) {
  // Vertex 4 has three frontier neighbors (0, 1, 2); vertex 5 has five.
  std::vector<Edge> edges{{0, 4, 1}, {1, 4, 1}, {2, 4, 1}};
  for (VertexId u = 0; u < 4; ++u) edges.push_back({u, 5, 1});
  edges.push_back({6, 5, 1});
  for (auto direction : {TraversalDirection::kSparsePush, TraversalDirection::kDensePull}) {
    const Graph g = Graph::from_edges(7, edges, {.symmetrize = false, .build_in_edges = true});
    PriorityState state(std::vector<Priority>{2, 2, 2, 2, 9, 3, 2}, PriorityOrder::kLowerFirst,
                        BucketMapping::linear(1));
    HistogramScratch scratch(7);
    Schedule s = lazy_schedule(direction);
    s.strategy = UpdateStrategy::kLazyConstantSum;
    RoundStats stats;
    auto updates = apply_constant_sum(g, VertexSubset::sparse(7, {0, 1, 2, 3, 6}), -1, 2, state, s, scratch, stats);
    std::sort(updates.begin(), updates.end(), [](auto a, auto b) { return a.vertex < b.vertex; });
    EXPECT_EQ(state.load(4), 6);
    EXPECT_EQ(state.load(5), 2);
    EXPECT_EQ(updates, (std::vector<BucketUpdate>{{4, 6}, {5, 2}}));
    // Scratch is reset: a second identical round applies the same counts.
    apply_constant_sum(g, VertexSubset::sparse(7, {0, 1, 2}), -1, 2, state, s, scratch, stats);
    EXPECT_EQ(state.load(4), 3);
  }
}

Schedule eager(UpdateStrategy strategy, Priority delta, std::size_t threshold = 1000) {
  Schedule s;
  s.strategy = strategy;
  s.delta = delta;
  s.fusion_threshold = threshold;
  return s;
}

TEST(OrderedLoop, SingleVertexGraphTakesOneRound) {
  const Graph g = Graph::from_edges(1, std::vector<Edge>{});
  const auto r = sssp(g, 0, eager(UpdateStrategy::kEagerWithFusion, 1));
  EXPECT_EQ(r.stats.rounds, 1u);
  EXPECT_EQ(r.dist, std::vector<Priority>{0});
}

TEST(OrderedLoop, StopPredicateEndsEarly) {
  const Graph g = make_path(200);
  for (auto strategy : {UpdateStrategy::kEagerNoFusion, UpdateStrategy::kEagerWithFusion, UpdateStrategy::kLazy}) {
    const Schedule s = eager(strategy, 1);
    const auto full = sssp(g, 0, s);
    const auto early = ppsp(g, 0, 100, s);
    EXPECT_EQ(early.distance, 100);
    EXPECT_LT(early.stats.rounds, full.stats.rounds);
  }
}

TEST(OrderedLoop, FusionCountersGatedByStrategy) {
  const Graph g = make_path(1000);
  const auto plain = sssp(g, 0, eager(UpdateStrategy::kEagerNoFusion, 100));
  const auto fused = sssp(g, 0, eager(UpdateStrategy::kEagerWithFusion, 100));
  EXPECT_EQ(plain.stats.fused_rounds, 0u);
  EXPECT_GT(fused.stats.fused_rounds, 0u);
  EXPECT_EQ(plain.dist, fused.dist);
}

TEST(OrderedLoop, FusionCollapsesRoundsOnPath) {
  ScopedThreadCount threads(1);
  const Graph g = make_path(1000);
  const auto fused = sssp(g, 0, eager(UpdateStrategy::kEagerWithFusion, 100));
  const auto plain = sssp(g, 0, eager(UpdateStrategy::kEagerNoFusion, 100));
  EXPECT_LE(fused.stats.rounds, 12u);
  EXPECT_GE(plain.stats.rounds, 990u);
}

TEST(OrderedLoop, FusedVerticesStayInCurrentBucket) {
  // Every vertex processed by a fused sub-round shares the round's bucket:
  // with tracing on, the bucket sequence stays strictly increasing even though
  // many sub-rounds ran.
  const Graph g = make_uniform_random(500, 4000, 1, 50, 3);
  auto r = sssp(g, 0, eager(UpdateStrategy::kEagerWithFusion, 16), true);
  EXPECT_TRUE(trace_is_monotone(r.stats.bucket_trace, false));
  EXPECT_EQ(r.stats.late_inserts, 0u);
  EXPECT_EQ(r.dist, dijkstra_oracle(g, 0));
}

TEST(OrderedLoop, DedupOffGivesSameResult) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = testing::corpus_graph(seed);
    Schedule on = lazy_schedule();
    Schedule off = lazy_schedule(TraversalDirection::kSparsePush, false);
    EXPECT_EQ(sssp(g, 0, on).dist, sssp(g, 0, off).dist);
    on.direction = off.direction = TraversalDirection::kDensePull;
    EXPECT_EQ(sssp(g, 0, on).dist, sssp(g, 0, off).dist);
  }
}

}  // namespace
}  // namespace ordgraph
