#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ordgraph::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kConfigError = 2, kVerifyFailed = 3 };

/// Entry point for the `ordgraph` tool: run, verify, gen, tune, bench.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordgraph::cli
