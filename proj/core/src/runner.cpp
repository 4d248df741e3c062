#include "ordgraph/runner.hpp"

#include <chrono>
#include <sstream>

namespace ordgraph {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

template <typename T>
std::uint64_t fnv1a(std::span<const T> values) {
  std::uint64_t h = kFnvOffset;
  for (const T value : values) {
    auto bits = static_cast<std::uint32_t>(value);
    for (int i = 0; i < 4; ++i) {
      h ^= bits & 0xffu;
      h *= kFnvPrime;
      bits >>= 8;
    }
  }
  return h;
}

VertexId require_target(const RunRequest& request) {
  if (!request.target) throw ConfigError(std::string(to_string(request.algo)) + " requires a target vertex");
  return *request.target;
}

}  // namespace

std::uint64_t digest_values(std::span<const Priority> values) { return fnv1a(values); }
std::uint64_t digest_ids(std::span<const VertexId> ids) { return fnv1a(ids); }

RunOutcome run_algorithm(const Graph& g, const RunRequest& request) {
  RunOutcome out;
  const auto start = std::chrono::steady_clock::now();
  switch (request.algo) {
    case Algorithm::kSssp:
    case Algorithm::kWbfs: {
      SsspResult r = request.algo == Algorithm::kSssp ? sssp(g, request.source, request.schedule, request.trace)
                                                      : wbfs(g, request.source, request.schedule, request.trace);
      out.values = std::move(r.dist);
      out.stats = std::move(r.stats);
      out.weight_range_warning = r.weight_range_warning;
      break;
    }
    case Algorithm::kPpsp: {
      DistanceResult r = ppsp(g, request.source, require_target(request), request.schedule, request.trace);
      out.values = {r.distance};
      out.stats = std::move(r.stats);
      break;
    }
    case Algorithm::kAstar: {
      if (request.coords == nullptr) throw ConfigError("astar requires coordinates");
      DistanceResult r =
          astar(g, *request.coords, request.source, require_target(request), request.schedule, request.trace);
      out.values = {r.distance};
      out.stats = std::move(r.stats);
      break;
    }
    case Algorithm::kKcore: {
      CorenessResult r = kcore(g, request.schedule, request.trace);
      out.values = std::move(r.coreness);
      out.stats = std::move(r.stats);
      break;
    }
    case Algorithm::kSetCover: {
      SetCoverResult r = set_cover(g, request.schedule, request.epsilon, request.seed, request.trace);
      out.chosen = std::move(r.chosen);
      out.gains = std::move(r.gains);
      out.stats = std::move(r.stats);
      break;
    }
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.digest = request.algo == Algorithm::kSetCover ? digest_ids(out.chosen) : digest_values(out.values);
  return out;
}

Verification verify_outcome(const Graph& g, const RunRequest& request, const RunOutcome& outcome) {
  Verification v;
  auto fail = [&v](const std::string& detail) {
    v.ok = false;
    v.detail = detail;
    return v;
  };
  switch (request.algo) {
    case Algorithm::kSssp:
    case Algorithm::kWbfs:
    case Algorithm::kKcore: {
      const auto expected =
          request.algo == Algorithm::kKcore ? kcore_oracle(g) : dijkstra_oracle(g, request.source);
      if (expected.size() != outcome.values.size()) return fail("result length differs from oracle");
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i] != outcome.values[i]) {
          std::ostringstream msg;
          msg << "vertex " << i << ": got " << outcome.values[i] << ", oracle " << expected[i];
          return fail(msg.str());
        }
      }
      return v;
    }
    case Algorithm::kPpsp:
    case Algorithm::kAstar: {
      const VertexId target = require_target(request);
      const Priority expected = dijkstra_oracle(g, request.source)[target];
      if (outcome.values.size() != 1 || outcome.values[0] != expected) {
        std::ostringstream msg;
        msg << "target " << target << ": got " << (outcome.values.empty() ? -1 : outcome.values[0]) << ", oracle "
            << expected;
        return fail(msg.str());
      }
      return v;
    }
    case Algorithm::kSetCover: {
      if (!is_valid_cover(g, outcome.chosen)) return fail("chosen sets do not cover every coverable element");
      for (std::size_t i = 0; i < outcome.gains.size(); ++i) {
        if (outcome.gains[i] == 0) return fail("set " + std::to_string(outcome.chosen[i]) + " gained nothing");
      }
      const auto greedy = greedy_setcover_oracle(g);
      if (outcome.chosen.size() > 2 * greedy.size()) {
        return fail("cover size " + std::to_string(outcome.chosen.size()) + " exceeds twice greedy (" +
                    std::to_string(greedy.size()) + ")");
      }
      return v;
    }
  }
  return v;
}

}  // namespace ordgraph
