#include "ordgraph/types.hpp"

namespace ordgraph {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace ordgraph
