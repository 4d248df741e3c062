#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ordgraph {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;
using Weight = std::int32_t;
using Priority = std::int32_t;
using BucketId = std::int64_t;

// Unreachable distance / unset lower_first priority.
inline constexpr Priority kInfinity = std::numeric_limits<Priority>::max();
inline constexpr BucketId kNullBucket = std::numeric_limits<BucketId>::max();
inline constexpr VertexId kInvalidVertex = std::numeric_limits<VertexId>::max();

/// Malformed input text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invalid combination of schedule options or missing prerequisites
/// (e.g. pull traversal on a graph without in-edges).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ordgraph
