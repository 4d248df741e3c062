#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordgraph/algorithms.hpp"
#include "ordgraph/autotune.hpp"
#include "ordgraph/coordinates.hpp"
#include "ordgraph/generators.hpp"
#include "ordgraph/graph_io.hpp"
#include "ordgraph/parallel.hpp"
#include "ordgraph/runner.hpp"
#include "ordgraph/schedule.hpp"

namespace ordgraph::cli {
namespace {

using nlohmann::json;

// Input files that cannot be read or parsed.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunFlags {
  std::string algo;
  std::string graph;
  std::string schedule;
  std::optional<Priority> delta;
  std::optional<std::size_t> fusion_threshold;
  std::optional<std::size_t> num_buckets;
  std::string direction;
  std::string grain;
  bool no_dedup = false;
  int threads = 0;
  VertexId source = 0;
  std::optional<VertexId> target;
  std::string coords;
  std::string out;
  std::string report;
  std::string sources_file;
  double epsilon = kDefaultSetCoverEpsilon;
  std::uint64_t seed = 0;
};

void add_problem_flags(CLI::App& cmd, RunFlags& f) {
  cmd.add_option("--algo", f.algo, "sssp|wbfs|ppsp|astar|kcore|setcover")->required();
  cmd.add_option("--graph", f.graph, "weighted edge list (.wel)")->required();
  cmd.add_option("--source", f.source, "source vertex");
  cmd.add_option("--target", f.target, "target vertex (ppsp, astar)");
  cmd.add_option("--coords", f.coords, "coordinate file (astar)");
  cmd.add_option("--threads", f.threads, "worker threads (0 = runtime default)");
  cmd.add_option("--epsilon", f.epsilon, "set cover bucket granularity");
  cmd.add_option("--seed", f.seed, "set cover selection seed");
}

void add_schedule_flags(CLI::App& cmd, RunFlags& f) {
  cmd.add_option("--schedule", f.schedule, "eager_with_fusion|eager_no_fusion|lazy|lazy_constant_sum");
  cmd.add_option("--delta", f.delta, "priority coarsening factor");
  cmd.add_option("--fusion-threshold", f.fusion_threshold, "bucket fusion threshold");
  cmd.add_option("--num-buckets", f.num_buckets, "materialized buckets");
  cmd.add_option("--direction", f.direction, "SparsePush|DensePull");
  cmd.add_option("--grain", f.grain, "static-vertex-parallel|dynamic-vertex-parallel");
  cmd.add_flag("--no-dedup", f.no_dedup, "disable update deduplication");
}

Algorithm parse_algo(const std::string& name) {
  auto algo = parse_algorithm(name);
  if (!algo) throw ConfigError("unknown algorithm '" + name + "'");
  return *algo;
}

Schedule build_schedule(Algorithm algo, const RunFlags& f) {
  Schedule s = default_schedule(algo);
  if (!f.schedule.empty()) {
    auto strategy = parse_strategy(f.schedule);
    if (!strategy) throw ConfigError("unknown schedule '" + f.schedule + "'");
    s.strategy = *strategy;
  }
  if (f.delta) s.delta = *f.delta;
  if (f.fusion_threshold) s.fusion_threshold = *f.fusion_threshold;
  if (f.num_buckets) s.num_open_buckets = *f.num_buckets;
  if (!f.direction.empty()) {
    auto direction = parse_direction(f.direction);
    if (!direction) throw ConfigError("unknown direction '" + f.direction + "'");
    s.direction = *direction;
  }
  if (!f.grain.empty()) {
    auto grain = parse_grain(f.grain);
    if (!grain) throw ConfigError("unknown parallelization '" + f.grain + "'");
    s.grain = *grain;
  }
  s.dedup = !f.no_dedup;
  return s;
}

Graph load_graph(const std::string& path, BuildOptions options) {
  try {
    return load_weighted_edge_list(path, options);
  } catch (const IoError& e) {
    throw InputError(e.what());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

BuildOptions build_options_for(Algorithm algo, bool in_edges) {
  return {.symmetrize = algo == Algorithm::kKcore, .build_in_edges = in_edges};
}

std::optional<CoordinateTable> load_coords(const RunFlags& f, Algorithm algo, const Graph& g) {
  if (algo != Algorithm::kAstar) return std::nullopt;
  if (f.coords.empty()) throw ConfigError("astar requires --coords");
  try {
    return load_coordinates(f.coords, g.num_vertices());
  } catch (const IoError& e) {
    throw InputError(e.what());
  } catch (const ParseError& e) {
    throw InputError(f.coords + ": " + e.what());
  }
}

std::vector<VertexId> read_sources(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open sources file " + path);
  std::vector<VertexId> sources;
  std::string token;
  while (in >> token) {
    if (token.starts_with('#')) {
      std::getline(in, token);
      continue;
    }
    try {
      sources.push_back(static_cast<VertexId>(std::stoul(token)));
    } catch (const std::exception&) {
      throw InputError(path + ": bad vertex id '" + token + "'");
    }
  }
  if (sources.empty()) throw InputError(path + ": no sources listed");
  return sources;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  return out;
}

void write_result(std::ostream& out, Algorithm algo, const RunRequest& request, const RunOutcome& outcome) {
  switch (algo) {
    case Algorithm::kPpsp:
    case Algorithm::kAstar: {
      const Priority d = outcome.values.at(0);
      out << *request.target << ' ';
      if (d == kInfinity) {
        out << "inf\n";
      } else {
        out << d << '\n';
      }
      break;
    }
    case Algorithm::kSetCover:
      for (VertexId s : outcome.chosen) out << s << '\n';
      break;
    default:
      write_vertex_values(out, outcome.values);
  }
}

std::string hex_digest(std::uint64_t digest) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << digest;
  return s.str();
}

json stats_json(const RoundStats& s) {
  return {{"rounds", s.rounds},
          {"fused_rounds", s.fused_rounds},
          {"edges_relaxed", s.edges_relaxed},
          {"buffer_compactions", s.buffer_compactions},
          {"stale_filtered", s.stale_filtered}};
}

int cmd_run(const RunFlags& f, std::ostream& out, std::ostream& err) {
  const Algorithm algo = parse_algo(f.algo);
  const Schedule schedule = build_schedule(algo, f);
  if (auto problem = validate_schedule(algo, schedule)) throw ConfigError(*problem);
  ScopedThreadCount threads(f.threads);

  const Graph g = load_graph(f.graph, build_options_for(algo, schedule.pull()));
  const auto coords = load_coords(f, algo, g);
  const std::vector<VertexId> sources = f.sources_file.empty() ? std::vector<VertexId>{f.source}
                                                               : read_sources(f.sources_file);

  RunRequest request;
  request.algo = algo;
  request.schedule = schedule;
  request.target = f.target;
  request.coords = coords ? &*coords : nullptr;
  request.epsilon = f.epsilon;
  request.seed = f.seed;

  std::optional<RunOutcome> first;
  json per_source = json::array();
  double total_ms = 0.0;
  for (VertexId source : sources) {
    request.source = source;
    RunOutcome outcome = run_algorithm(g, request);
    total_ms += outcome.millis;
    per_source.push_back({{"source", source}, {"ms", outcome.millis}, {"digest", hex_digest(outcome.digest)}});
    if (!first) first = std::move(outcome);
  }
  request.source = sources.front();
  if (first->weight_range_warning) {
    err << "warning: wbfs expects weights in [1, ceil(log2 n)); this graph has heavier edges\n";
  }

  if (f.out.empty()) {
    write_result(out, algo, request, *first);
  } else {
    auto file = open_output(f.out);
    write_result(file, algo, request, *first);
  }

  json report{
      {"schema", 1},
      {"algorithm", to_string(algo)},
      {"graph", {{"path", f.graph}, {"n", g.num_vertices()}, {"m", g.num_edges()}, {"source", sources.front()}}},
      {"schedule", json::parse(to_json(schedule))},
      {"threads", num_threads()},
      {"ms", total_ms / static_cast<double>(sources.size())},
      {"stats", stats_json(first->stats)},
      {"digest", hex_digest(first->digest)},
  };
  if (f.target) report["graph"]["target"] = *f.target;
  if (sources.size() > 1) report["sources"] = per_source;
  if (algo == Algorithm::kSetCover) report["cover_size"] = first->chosen.size();
  if (first->weight_range_warning) report["warnings"] = json::array({"weight_range"});
  if (!f.report.empty()) {
    auto file = open_output(f.report);
    file << report.dump(2) << '\n';
  }
  return kOk;
}

std::vector<Schedule> verification_matrix(Algorithm algo, const Schedule& base) {
  std::vector<Schedule> out;
  for (UpdateStrategy strategy : {UpdateStrategy::kEagerWithFusion, UpdateStrategy::kEagerNoFusion,
                                  UpdateStrategy::kLazy, UpdateStrategy::kLazyConstantSum}) {
    for (TraversalDirection direction : {TraversalDirection::kSparsePush, TraversalDirection::kDensePull}) {
      Schedule s = base;
      s.strategy = strategy;
      s.direction = direction;
      if (!validate_schedule(algo, s)) out.push_back(s);
    }
  }
  return out;
}

int cmd_verify(const RunFlags& f, std::ostream& out) {
  const Algorithm algo = parse_algo(f.algo);
  Schedule base = build_schedule(algo, f);
  ScopedThreadCount threads(f.threads);
  const Graph g = load_graph(f.graph, build_options_for(algo, true));
  const auto coords = load_coords(f, algo, g);

  RunRequest request;
  request.algo = algo;
  request.source = f.source;
  request.target = f.target;
  request.coords = coords ? &*coords : nullptr;
  request.epsilon = f.epsilon;
  request.seed = f.seed;

  const auto schedules = verification_matrix(algo, base);
  if (schedules.empty()) throw ConfigError("no valid schedule to verify with these options");
  std::size_t failures = 0;
  std::optional<std::uint64_t> digest;
  for (const Schedule& s : schedules) {
    request.schedule = s;
    const RunOutcome outcome = run_algorithm(g, request);
    Verification check = verify_outcome(g, request, outcome);
    if (check.ok && algo != Algorithm::kSetCover && digest && *digest != outcome.digest) {
      check = {false, "digest differs from the other schedules"};
    }
    digest = outcome.digest;
    if (check.ok) {
      out << "PASS " << describe(s) << '\n';
    } else {
      ++failures;
      out << "FAIL " << describe(s) << ": " << check.detail << '\n';
    }
  }
  out << (failures == 0 ? "verified " : "failed ") << schedules.size() - failures << '/' << schedules.size()
      << " schedules\n";
  return failures == 0 ? kOk : kVerifyFailed;
}

struct GenFlags {
  std::string kind;
  VertexId n = 0;
  EdgeIndex m = 0;
  VertexId rows = 0;
  VertexId cols = 0;
  Weight weight_lo = 1;
  Weight weight_hi = 1000;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenFlags& f, std::ostream& out) {
  SyntheticParams p;
  if (f.kind == "path") {
    p.kind = SyntheticKind::kPath;
  } else if (f.kind == "grid") {
    p.kind = SyntheticKind::kGrid;
  } else if (f.kind == "uniform_random") {
    p.kind = SyntheticKind::kUniformRandom;
  } else {
    throw ConfigError("unknown graph kind '" + f.kind + "'");
  }
  p.n = f.n;
  p.m = f.m;
  p.rows = f.rows;
  p.cols = f.cols;
  p.weight_lo = f.weight_lo;
  p.weight_hi = f.weight_hi;
  p.seed = f.seed;
  Graph g;
  try {
    g = generate_synthetic(p);
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  try {
    save_weighted_edge_list(f.out, g);
    out << "wrote " << f.out << " (n=" << g.num_vertices() << ", m=" << g.num_edges() << ")\n";
    if (p.kind == SyntheticKind::kGrid) {
      const auto coords_path = std::filesystem::path(f.out).replace_extension(".coords");
      std::ofstream coords(coords_path);
      if (!coords) throw IoError("cannot write " + coords_path.string());
      write_coordinates(coords, grid_coordinates(f.rows, f.cols));
      out << "wrote " << coords_path.string() << '\n';
    }
  } catch (const IoError& e) {
    throw InputError(e.what());
  }
  return kOk;
}

struct TuneFlags {
  RunFlags problem;
  int budget = 20;
  std::uint64_t tune_seed = 1;
  int repetitions = 3;
  bool with_pull = false;
};

int cmd_tune(const TuneFlags& f, std::ostream& out) {
  const Algorithm algo = parse_algo(f.problem.algo);
  ScopedThreadCount threads(f.problem.threads);
  const Graph g = load_graph(f.problem.graph, build_options_for(algo, f.with_pull));
  const auto coords = load_coords(f.problem, algo, g);

  TuneOptions options;
  options.budget = f.budget;
  options.seed = f.tune_seed;
  options.repetitions = f.repetitions;
  options.graph_name = f.problem.graph;
  options.request.algo = algo;
  options.request.source = f.problem.source;
  options.request.target = f.problem.target;
  options.request.coords = coords ? &*coords : nullptr;
  options.request.epsilon = f.problem.epsilon;
  options.request.seed = f.problem.seed;
  const TuneReport report = tune(g, options);

  const std::string text = to_json(report);
  if (f.problem.out.empty()) {
    out << text << '\n';
  } else {
    auto file = open_output(f.problem.out);
    file << text << '\n';
    out << "best: " << describe(report.best) << " (" << report.best_millis << " ms)\n";
  }
  return kOk;
}

struct BenchFlags {
  RunFlags problem;
  std::vector<std::string> graphs;
  std::vector<std::string> schedules;
  int repetitions = 3;
};

int cmd_bench(const BenchFlags& f, std::ostream& out) {
  const Algorithm algo = parse_algo(f.problem.algo);
  ScopedThreadCount threads(f.problem.threads);
  Schedule base = build_schedule(algo, f.problem);

  std::vector<Schedule> schedules;
  const std::vector<std::string> names =
      f.schedules.empty() ? std::vector<std::string>{"eager_with_fusion", "eager_no_fusion", "lazy", "lazy_constant_sum"}
                          : f.schedules;
  for (const std::string& name : names) {
    auto strategy = parse_strategy(name);
    if (!strategy) throw ConfigError("unknown schedule '" + name + "'");
    Schedule s = base;
    s.strategy = *strategy;
    if (validate_schedule(algo, s)) {
      if (!f.schedules.empty()) throw ConfigError(*validate_schedule(algo, s));
      continue;
    }
    schedules.push_back(s);
  }

  out << std::left << std::setw(28) << "graph" << std::setw(20) << "schedule" << std::right << std::setw(12)
      << "ms" << std::setw(10) << "rounds" << std::setw(14) << "fused_rounds" << '\n';
  for (const std::string& path : f.graphs) {
    const Graph g = load_graph(path, build_options_for(algo, base.pull()));
    const auto coords = load_coords(f.problem, algo, g);
    for (const Schedule& s : schedules) {
      RunRequest request;
      request.algo = algo;
      request.schedule = s;
      request.source = f.problem.source;
      request.target = f.problem.target;
      request.coords = coords ? &*coords : nullptr;
      std::vector<double> times;
      RunOutcome last;
      for (int rep = 0; rep < std::max(f.repetitions, 1); ++rep) {
        last = run_algorithm(g, request);
        times.push_back(last.millis);
      }
      std::sort(times.begin(), times.end());
      const std::string name = std::filesystem::path(path).filename().string();
      out << std::left << std::setw(28) << name << std::setw(20) << to_string(s.strategy) << std::right
          << std::setw(12) << std::fixed << std::setprecision(3) << times[times.size() / 2] << std::setw(10)
          << last.stats.rounds << std::setw(14) << last.stats.fused_rounds << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered graph algorithms over bucketed priority queues", "ordgraph"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "run one algorithm under a schedule");
  add_problem_flags(*run_cmd, run_flags);
  add_schedule_flags(*run_cmd, run_flags);
  run_cmd->add_option("--out", run_flags.out, "result file (default: stdout)");
  run_cmd->add_option("--report", run_flags.report, "JSON report file");
  run_cmd->add_option("--sources-file", run_flags.sources_file, "average over the listed sources");

  RunFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "check every valid schedule against the serial oracle");
  add_problem_flags(*verify_cmd, verify_flags);
  add_schedule_flags(*verify_cmd, verify_flags);

  GenFlags gen_flags;
  auto* gen_cmd = app.add_subcommand("gen", "write a synthetic graph");
  gen_cmd->add_option("--kind", gen_flags.kind, "path|grid|uniform_random")->required();
  gen_cmd->add_option("--n", gen_flags.n, "vertices (path, uniform_random)");
  gen_cmd->add_option("--m", gen_flags.m, "edges (uniform_random)");
  gen_cmd->add_option("--rows", gen_flags.rows, "grid rows");
  gen_cmd->add_option("--cols", gen_flags.cols, "grid columns");
  gen_cmd->add_option("--weight-lo", gen_flags.weight_lo, "smallest weight");
  gen_cmd->add_option("--weight-hi", gen_flags.weight_hi, "weights are drawn below this");
  gen_cmd->add_option("--seed", gen_flags.seed, "generator seed");
  gen_cmd->add_option("--out", gen_flags.out, "output .wel path")->required();

  TuneFlags tune_flags;
  auto* tune_cmd = app.add_subcommand("tune", "random search over schedules");
  add_problem_flags(*tune_cmd, tune_flags.problem);
  tune_cmd->add_option("--budget", tune_flags.budget, "number of schedules to try");
  tune_cmd->add_option("--tune-seed", tune_flags.tune_seed, "search seed");
  tune_cmd->add_option("--reps", tune_flags.repetitions, "runs per schedule (median taken)");
  tune_cmd->add_flag("--with-pull", tune_flags.with_pull, "build in-edges so DensePull is searched");
  tune_cmd->add_option("--out", tune_flags.problem.out, "JSON report file (default: stdout)");

  BenchFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "time and round counts for a schedule x graph matrix");
  bench_cmd->add_option("--algo", bench_flags.problem.algo, "algorithm")->required();
  bench_cmd->add_option("--graph", bench_flags.graphs, "graph files")->required();
  bench_cmd->add_option("--schedules", bench_flags.schedules, "strategies to compare")->delimiter(',');
  bench_cmd->add_option("--source", bench_flags.problem.source, "source vertex");
  bench_cmd->add_option("--target", bench_flags.problem.target, "target vertex");
  bench_cmd->add_option("--coords", bench_flags.problem.coords, "coordinate file (astar)");
  bench_cmd->add_option("--threads", bench_flags.problem.threads, "worker threads");
  bench_cmd->add_option("--reps", bench_flags.repetitions, "runs per cell (median taken)");
  add_schedule_flags(*bench_cmd, bench_flags.problem);
  bench_cmd->remove_option(bench_cmd->get_option("--schedule"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run_cmd) return cmd_run(run_flags, out, err);
    if (*verify_cmd) return cmd_verify(verify_flags, out);
    if (*gen_cmd) return cmd_gen(gen_flags, out);
    if (*tune_cmd) return cmd_tune(tune_flags, out);
    if (*bench_cmd) return cmd_bench(bench_flags, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kConfigError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ordgraph"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ordgraph::cli
