#include "ordgraph/schedule.hpp"

#include <array>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ordgraph {
namespace {

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::pair<std::string_view, E>, N>& table, std::string_view name) {
  for (const auto& [text, value] : table) {
    if (text == name) return value;
  }
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<std::string_view, E>, N>& table, E value) {
  for (const auto& [text, v] : table) {
    if (v == value) return text;
  }
  return "unknown";
}

constexpr std::array<std::pair<std::string_view, Algorithm>, 6> kAlgorithms{{
    {"sssp", Algorithm::kSssp},
    {"wbfs", Algorithm::kWbfs},
    {"ppsp", Algorithm::kPpsp},
    {"astar", Algorithm::kAstar},
    {"kcore", Algorithm::kKcore},
    {"setcover", Algorithm::kSetCover},
}};

constexpr std::array<std::pair<std::string_view, UpdateStrategy>, 4> kStrategies{{
    {"eager_with_fusion", UpdateStrategy::kEagerWithFusion},
    {"eager_no_fusion", UpdateStrategy::kEagerNoFusion},
    {"lazy", UpdateStrategy::kLazy},
    {"lazy_constant_sum", UpdateStrategy::kLazyConstantSum},
}};

constexpr std::array<std::pair<std::string_view, TraversalDirection>, 2> kDirections{{
    {"SparsePush", TraversalDirection::kSparsePush},
    {"DensePull", TraversalDirection::kDensePull},
}};

constexpr std::array<std::pair<std::string_view, ParallelGrain>, 2> kGrains{{
    {"static-vertex-parallel", ParallelGrain::kStatic},
    {"dynamic-vertex-parallel", ParallelGrain::kDynamic},
}};

}  // namespace

AlgorithmTraits traits(Algorithm algo) {
  switch (algo) {
    case Algorithm::kSssp:
    case Algorithm::kPpsp:
      return {.allows_coarsening = true, .allows_eager = true, .constant_sum = false, .has_direction = true,
              .needs_target = algo == Algorithm::kPpsp, .needs_coordinates = false};
    case Algorithm::kWbfs:
      return {.allows_coarsening = false, .allows_eager = true, .constant_sum = false, .has_direction = true,
              .needs_target = false, .needs_coordinates = false};
    case Algorithm::kAstar:
      return {.allows_coarsening = true, .allows_eager = true, .constant_sum = false, .has_direction = true,
              .needs_target = true, .needs_coordinates = true};
    case Algorithm::kKcore:
      return {.allows_coarsening = false, .allows_eager = false, .constant_sum = true, .has_direction = true,
              .needs_target = false, .needs_coordinates = false};
    case Algorithm::kSetCover:
      return {.allows_coarsening = false, .allows_eager = false, .constant_sum = false, .has_direction = false,
              .needs_target = false, .needs_coordinates = false};
  }
  return {};
}

std::string_view to_string(Algorithm algo) { return name_of(kAlgorithms, algo); }
std::string_view to_string(UpdateStrategy strategy) { return name_of(kStrategies, strategy); }
std::string_view to_string(TraversalDirection direction) { return name_of(kDirections, direction); }
std::string_view to_string(ParallelGrain grain) { return name_of(kGrains, grain); }
std::optional<Algorithm> parse_algorithm(std::string_view name) { return lookup(kAlgorithms, name); }
std::optional<UpdateStrategy> parse_strategy(std::string_view name) { return lookup(kStrategies, name); }
std::optional<TraversalDirection> parse_direction(std::string_view name) { return lookup(kDirections, name); }
std::optional<ParallelGrain> parse_grain(std::string_view name) { return lookup(kGrains, name); }

Schedule default_schedule(Algorithm algo) {
  Schedule s;
  switch (algo) {
    case Algorithm::kSssp:
    case Algorithm::kPpsp:
    case Algorithm::kAstar:
      s.strategy = UpdateStrategy::kEagerWithFusion;
      s.delta = 4;
      break;
    case Algorithm::kWbfs:
      s.strategy = UpdateStrategy::kEagerWithFusion;
      s.delta = 1;
      break;
    case Algorithm::kKcore:
      s.strategy = UpdateStrategy::kLazy;
      s.num_open_buckets = 16;
      break;
    case Algorithm::kSetCover:
      s.strategy = UpdateStrategy::kLazy;
      s.num_open_buckets = 128;
      break;
  }
  return s;
}

std::string describe(const Schedule& s) {
  std::ostringstream out;
  out << to_string(s.strategy) << " delta=" << s.delta;
  if (s.fusion()) out << " threshold=" << s.fusion_threshold;
  if (!s.eager()) out << " buckets=" << s.num_open_buckets;
  out << ' ' << to_string(s.direction) << ' ' << to_string(s.grain);
  if (!s.dedup) out << " no-dedup";
  return out.str();
}

std::string to_json(const Schedule& s) {
  nlohmann::json j{
      {"strategy", to_string(s.strategy)},
      {"delta", s.delta},
      {"fusion_threshold", s.fusion_threshold},
      {"num_open_buckets", s.num_open_buckets},
      {"direction", to_string(s.direction)},
      {"parallelization", to_string(s.grain)},
      {"dedup", s.dedup},
  };
  return j.dump();
}

std::optional<std::string> validate_schedule(Algorithm algo, const Schedule& s, bool has_in_edges) {
  const AlgorithmTraits t = traits(algo);
  const std::string name(to_string(algo));
  std::vector<std::string> problems;
  if (s.delta < 1) problems.push_back("delta must be >= 1");
  if (s.num_open_buckets < 1) problems.push_back("num_open_buckets must be >= 1");
  if (s.fusion_threshold < 1) problems.push_back("fusion_threshold must be >= 1");

  if (!t.allows_coarsening && s.delta != 1) {
    if (algo == Algorithm::kWbfs) {
      problems.push_back("wbfs fixes delta to 1");
    } else {
      problems.push_back("priority coarsening (delta != 1) is not allowed for " + name);
    }
  }
  if (!t.allows_eager && s.eager()) {
    problems.push_back("eager bucket update is unsupported for " + name + "; use lazy");
  }
  if (s.strategy == UpdateStrategy::kLazyConstantSum && !t.constant_sum) {
    problems.push_back(name + " does not declare a constant-sum priority update (its update is " +
                       (algo == Algorithm::kSetCover ? "a recount" : "a minimum") +
                       "); lazy_constant_sum is unavailable");
  }
  if (!t.has_direction && s.pull()) problems.push_back(name + " has no pull traversal; use SparsePush");
  if (s.pull() && !has_in_edges) problems.push_back("DensePull requires a graph built with in-edges");

  if (problems.empty()) return std::nullopt;
  std::string message = name + ": ";
  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (i > 0) message += "; ";
    message += problems[i];
  }
  return message;
}

void require_valid(Algorithm algo, const Schedule& s, bool has_in_edges) {
  if (auto problem = validate_schedule(algo, s, has_in_edges)) throw ConfigError(*problem);
}

}  // namespace ordgraph
