#pragma once

#include <cstddef>
#include <new>
#include <span>
#include <vector>

namespace ordgraph {

/// Team size used by every parallel region started from the calling thread.
int num_threads();

/// Sets the team size for the lifetime of the guard; 0 keeps the current one.
class ScopedThreadCount {
 public:
  explicit ScopedThreadCount(int threads);
  ~ScopedThreadCount();
  ScopedThreadCount(const ScopedThreadCount&) = delete;
  ScopedThreadCount& operator=(const ScopedThreadCount&) = delete;

 private:
  int previous_;
};

enum class ParallelGrain { kStatic, kDynamic };

/// Selects the loop schedule picked up by `schedule(runtime)` loops.
void set_loop_grain(ParallelGrain grain);

/// out[i] = sum of in[0..i). out has in.size() + 1 entries; the last is the total.
/// Blocked two-pass scan when called outside a parallel region on large input.
std::vector<std::size_t> exclusive_prefix_sum(std::span<const std::size_t> in);

inline constexpr std::size_t kCacheLine = 64;

template <typename T>
struct alignas(kCacheLine) CachePadded {
  T value{};
};

}  // namespace ordgraph
