#include "ordgraph/autotune.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace ordgraph {
namespace {

constexpr std::size_t kThresholds[] = {100, 300, 1000, 3000, 10000};
constexpr std::size_t kOpenBuckets[] = {16, 32, 64, 128};
constexpr int kMaxDeltaLog = 17;
constexpr EdgeIndex kWarmupEdges = 1'000'000;

std::vector<UpdateStrategy> strategies_for(Algorithm algo) {
  std::vector<UpdateStrategy> out;
  for (UpdateStrategy s : {UpdateStrategy::kEagerWithFusion, UpdateStrategy::kEagerNoFusion, UpdateStrategy::kLazy,
                           UpdateStrategy::kLazyConstantSum}) {
    Schedule probe = default_schedule(algo);
    probe.strategy = s;
    if (!validate_schedule(algo, probe)) out.push_back(s);
  }
  return out;
}

std::vector<Priority> deltas_for(Algorithm algo) {
  if (!traits(algo).allows_coarsening) return {1};
  std::vector<Priority> out;
  for (int i = 0; i <= kMaxDeltaLog; ++i) out.push_back(Priority{1} << i);
  return out;
}

std::vector<TraversalDirection> directions_for(Algorithm algo, bool has_in_edges) {
  if (!traits(algo).has_direction || !has_in_edges) return {TraversalDirection::kSparsePush};
  return {TraversalDirection::kSparsePush, TraversalDirection::kDensePull};
}

template <typename T>
const T& pick(const std::vector<T>& options, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> dist(0, options.size() - 1);
  return options[dist(rng)];
}

Schedule random_schedule(Algorithm algo, UpdateStrategy strategy, bool has_in_edges, std::mt19937_64& rng) {
  Schedule s = default_schedule(algo);
  s.strategy = strategy;
  s.delta = pick(deltas_for(algo), rng);
  if (s.fusion()) s.fusion_threshold = pick(std::vector<std::size_t>(std::begin(kThresholds), std::end(kThresholds)), rng);
  if (!s.eager()) {
    s.num_open_buckets = pick(std::vector<std::size_t>(std::begin(kOpenBuckets), std::end(kOpenBuckets)), rng);
  }
  s.direction = pick(directions_for(algo, has_in_edges), rng);
  s.grain = pick(std::vector<ParallelGrain>{ParallelGrain::kStatic, ParallelGrain::kDynamic}, rng);
  return s;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
}

}  // namespace

std::vector<Schedule> search_space(Algorithm algo, bool has_in_edges) {
  std::vector<Schedule> out;
  for (UpdateStrategy strategy : strategies_for(algo)) {
    for (Priority delta : deltas_for(algo)) {
      for (TraversalDirection direction : directions_for(algo, has_in_edges)) {
        for (ParallelGrain grain : {ParallelGrain::kStatic, ParallelGrain::kDynamic}) {
          Schedule s = default_schedule(algo);
          s.strategy = strategy;
          s.delta = delta;
          s.direction = direction;
          s.grain = grain;
          if (s.fusion()) {
            for (std::size_t t : kThresholds) {
              s.fusion_threshold = t;
              out.push_back(s);
            }
          } else if (!s.eager()) {
            for (std::size_t b : kOpenBuckets) {
              s.num_open_buckets = b;
              out.push_back(s);
            }
          } else {
            out.push_back(s);
          }
        }
      }
    }
  }
  std::erase_if(out, [&](const Schedule& s) { return validate_schedule(algo, s, has_in_edges).has_value(); });
  return out;
}

std::vector<Schedule> sample_schedules(Algorithm algo, bool has_in_edges, int budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<UpdateStrategy> strategies = strategies_for(algo);
  std::vector<Schedule> out;
  const Schedule first = default_schedule(algo);
  if (budget <= 0) return out;
  out.push_back(first);
  for (UpdateStrategy s : strategies) {
    if (static_cast<int>(out.size()) >= budget) break;
    if (s == first.strategy) continue;
    out.push_back(random_schedule(algo, s, has_in_edges, rng));
  }
  while (static_cast<int>(out.size()) < budget) {
    out.push_back(random_schedule(algo, pick(strategies, rng), has_in_edges, rng));
  }
  return out;
}

TuneReport tune(const Graph& g, const TuneOptions& options) {
  if (options.budget < 1) throw ConfigError("tuning budget must be at least 1");
  if (options.repetitions < 1) throw ConfigError("tuning repetitions must be at least 1");
  TuneReport report;
  report.algo = options.request.algo;
  report.graph_name = options.graph_name;
  const bool use_oracle = g.num_edges() <= options.oracle_edge_limit;

  std::optional<std::uint64_t> reference_digest;
  for (const Schedule& schedule : sample_schedules(report.algo, g.has_in_edges(), options.budget, options.seed)) {
    TuneTrial trial;
    trial.schedule = schedule;
    RunRequest request = options.request;
    request.schedule = schedule;
    request.trace = false;
    std::vector<double> times;
    bool valid = true;
    std::optional<std::uint64_t> digest;
    if (g.num_edges() > kWarmupEdges) run_algorithm(g, request);
    for (int rep = 0; rep < options.repetitions && valid; ++rep) {
      RunOutcome outcome = run_algorithm(g, request);
      times.push_back(outcome.millis);
      if (digest && *digest != outcome.digest) {
        valid = false;
        trial.note = "result changed between repetitions";
      }
      digest = outcome.digest;
      if (rep == 0 && use_oracle) {
        const Verification check = verify_outcome(g, request, outcome);
        if (!check.ok) {
          valid = false;
          trial.note = check.detail;
        }
      }
    }
    // Set cover results legitimately differ by schedule, so only the
    // exact-result algorithms are cross-checked by digest.
    if (valid && !use_oracle && report.algo != Algorithm::kSetCover) {
      if (reference_digest && *reference_digest != *digest) {
        valid = false;
        trial.note = "result differs from earlier trials";
      }
      reference_digest = digest;
    }
    trial.valid = valid;
    trial.millis = median(times);
    report.trials.push_back(std::move(trial));
  }

  const TuneTrial* best = nullptr;
  for (const TuneTrial& t : report.trials) {
    if (t.valid && (best == nullptr || t.millis < best->millis)) best = &t;
  }
  if (best == nullptr) throw std::runtime_error("no valid schedule among the tuning trials");
  report.best = best->schedule;
  report.best_millis = best->millis;
  return report;
}

std::string to_json(const TuneReport& report) {
  nlohmann::json trials = nlohmann::json::array();
  for (const TuneTrial& t : report.trials) {
    nlohmann::json entry{{"schedule", nlohmann::json::parse(to_json(t.schedule))}, {"ms", t.millis}, {"valid", t.valid}};
    if (!t.note.empty()) entry["note"] = t.note;
    trials.push_back(std::move(entry));
  }
  nlohmann::json j{
      {"schema", 1},
      {"algo", to_string(report.algo)},
      {"graph", report.graph_name},
      {"trials", std::move(trials)},
      {"best", nlohmann::json::parse(to_json(report.best))},
      {"best_ms", report.best_millis},
  };
  return j.dump(2);
}

}  // namespace ordgraph
