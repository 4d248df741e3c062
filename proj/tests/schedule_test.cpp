#include <set>

#include <gtest/gtest.h>
#include <json.hpp>

#include "ordgraph/autotune.hpp"
#include "ordgraph/generators.hpp"
#include "ordgraph/schedule.hpp"
#include "test_support.hpp"

namespace ordgraph {
namespace {

Schedule make(UpdateStrategy strategy, Priority delta = 1) {
  Schedule s;
  s.strategy = strategy;
  s.delta = delta;
  return s;
}

TEST(ValidateSchedule, KcoreRejectsEagerAndCoarsening) {
  const auto problem = validate_schedule(Algorithm::kKcore, make(UpdateStrategy::kEagerWithFusion, 4));
  ASSERT_TRUE(problem);
  EXPECT_NE(problem->find("coarsening"), std::string::npos);
  EXPECT_NE(problem->find("eager"), std::string::npos);
  EXPECT_FALSE(validate_schedule(Algorithm::kKcore, make(UpdateStrategy::kLazyConstantSum)));
  EXPECT_FALSE(validate_schedule(Algorithm::kKcore, make(UpdateStrategy::kLazy)));
}

TEST(ValidateSchedule, ConstantSumOnlyForDeclaredAlgorithms) {
  const auto problem = validate_schedule(Algorithm::kSssp, make(UpdateStrategy::kLazyConstantSum));
  ASSERT_TRUE(problem);
  EXPECT_NE(problem->find("minimum"), std::string::npos);
  for (Algorithm algo : {Algorithm::kWbfs, Algorithm::kPpsp, Algorithm::kAstar, Algorithm::kSetCover}) {
    EXPECT_TRUE(validate_schedule(algo, make(UpdateStrategy::kLazyConstantSum)));
  }
}

TEST(ValidateSchedule, FusionWithDeltaFourIsFine) {
  Schedule s = make(UpdateStrategy::kEagerWithFusion, 4);
  s.fusion_threshold = 1000;
  EXPECT_FALSE(validate_schedule(Algorithm::kSssp, s));
}

TEST(ValidateSchedule, PullNeedsInEdges) {
  Schedule s = make(UpdateStrategy::kLazy);
  s.direction = TraversalDirection::kDensePull;
  EXPECT_FALSE(validate_schedule(Algorithm::kSssp, s, true));
  const auto problem = validate_schedule(Algorithm::kSssp, s, false);
  ASSERT_TRUE(problem);
  EXPECT_NE(problem->find("in-edges"), std::string::npos);
}

TEST(ValidateSchedule, SetCoverAndWbfsRestrictions) {
  EXPECT_TRUE(validate_schedule(Algorithm::kSetCover, make(UpdateStrategy::kLazy, 2)));
  EXPECT_TRUE(validate_schedule(Algorithm::kSetCover, make(UpdateStrategy::kEagerNoFusion)));
  EXPECT_TRUE(validate_schedule(Algorithm::kWbfs, make(UpdateStrategy::kEagerWithFusion, 8)));
  EXPECT_FALSE(validate_schedule(Algorithm::kWbfs, make(UpdateStrategy::kEagerWithFusion, 1)));
  EXPECT_TRUE(validate_schedule(Algorithm::kSssp, make(UpdateStrategy::kLazy, 0)));
}

TEST(ValidateSchedule, DefaultsAreValid) {
  for (Algorithm algo : {Algorithm::kSssp, Algorithm::kWbfs, Algorithm::kPpsp, Algorithm::kAstar, Algorithm::kKcore,
                         Algorithm::kSetCover}) {
    EXPECT_FALSE(validate_schedule(algo, default_schedule(algo))) << to_string(algo);
  }
  EXPECT_EQ(default_schedule(Algorithm::kKcore).num_open_buckets, 16u);
  EXPECT_EQ(default_schedule(Algorithm::kSetCover).num_open_buckets, 128u);
  EXPECT_EQ(default_schedule(Algorithm::kSssp).fusion_threshold, 1000u);
}

TEST(ScheduleNames, RoundTrip) {
  for (auto s : {UpdateStrategy::kEagerWithFusion, UpdateStrategy::kEagerNoFusion, UpdateStrategy::kLazy,
                 UpdateStrategy::kLazyConstantSum}) {
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  }
  EXPECT_EQ(parse_direction("DensePull"), TraversalDirection::kDensePull);
  EXPECT_EQ(parse_algorithm("setcover"), Algorithm::kSetCover);
  EXPECT_FALSE(parse_algorithm("bfs"));
  const auto j = nlohmann::json::parse(to_json(default_schedule(Algorithm::kSssp)));
  EXPECT_EQ(j["strategy"], "eager_with_fusion");
  EXPECT_EQ(j["delta"], 4);
}

TEST(SearchSpace, FiltersInvalidCombinations) {
  const auto kcore = search_space(Algorithm::kKcore, true);
  // {lazy, lazy_constant_sum} x delta 1 x 2 directions x 2 grains x 4 bucket counts.
  EXPECT_EQ(kcore.size(), 2u * 2 * 2 * 4);
  const auto sssp = search_space(Algorithm::kSssp, false);
  for (const Schedule& s : sssp) {
    EXPECT_FALSE(validate_schedule(Algorithm::kSssp, s, false));
    EXPECT_FALSE(s.pull());
  }
  // (fusion x 5 thresholds + no_fusion + lazy x 4 buckets) x 18 deltas x 2 grains.
  EXPECT_EQ(sssp.size(), (5u + 1 + 4) * 18 * 2);
}

TEST(SampleSchedules, DeterministicAndCoversStrategies) {
  const auto a = sample_schedules(Algorithm::kSssp, true, 12, 7);
  const auto b = sample_schedules(Algorithm::kSssp, true, 12, 7);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sample_schedules(Algorithm::kSssp, true, 12, 8));
  ASSERT_EQ(a.size(), 12u);
  EXPECT_EQ(a[0], default_schedule(Algorithm::kSssp));
  std::set<UpdateStrategy> first_three{a[0].strategy, a[1].strategy, a[2].strategy};
  EXPECT_EQ(first_three.size(), 3u);
  for (const Schedule& s : a) EXPECT_FALSE(validate_schedule(Algorithm::kSssp, s, true));
}

TEST(Tune, BudgetOneReturnsThatSchedule) {
  const Graph g = testing::corpus_graph(1);
  TuneOptions options;
  options.budget = 1;
  options.request.algo = Algorithm::kSssp;
  const TuneReport report = tune(g, options);
  ASSERT_EQ(report.trials.size(), 1u);
  EXPECT_TRUE(report.trials[0].valid);
  EXPECT_EQ(report.best, report.trials[0].schedule);
  EXPECT_DOUBLE_EQ(report.best_millis, report.trials[0].millis);
}

TEST(Tune, SameSeedSameTrials) {
  TuneOptions options;
  options.budget = 6;
  options.seed = 11;
  options.repetitions = 1;
  options.request.algo = Algorithm::kKcore;
  const Graph sym = make_uniform_random(64, 512, 1, 1000, 2, {.symmetrize = true, .build_in_edges = true});
  const auto a = tune(sym, options);
  const auto b = tune(sym, options);
  ASSERT_EQ(a.trials.size(), b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    EXPECT_EQ(a.trials[i].schedule, b.trials[i].schedule);
    EXPECT_TRUE(a.trials[i].valid);
  }
}

TEST(Tune, BestIsFastestValidTrial) {
  const Graph g = testing::corpus_graph(4);
  TuneOptions options;
  options.budget = 8;
  options.request.algo = Algorithm::kPpsp;
  options.request.target = 17;
  const TuneReport report = tune(g, options);
  for (const TuneTrial& t : report.trials) {
    EXPECT_TRUE(t.valid) << t.note;
    EXPECT_LE(report.best_millis, t.millis);
  }
  const auto j = nlohmann::json::parse(to_json(report));
  EXPECT_EQ(j["algo"], "ppsp");
  EXPECT_EQ(j["trials"].size(), 8u);
  EXPECT_TRUE(j.contains("best"));
}

TEST(Tune, RejectsEmptyBudget) {
  TuneOptions options;
  options.budget = 0;
  EXPECT_THROW(tune(testing::corpus_graph(1), options), ConfigError);
}

TEST(Tune, MissingTargetIsConfigError) {
  TuneOptions options;
  options.budget = 2;
  options.request.algo = Algorithm::kPpsp;
  EXPECT_THROW(tune(testing::corpus_graph(1), options), ConfigError);
}

}  // namespace
}  // namespace ordgraph
