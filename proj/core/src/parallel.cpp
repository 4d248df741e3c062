#include "ordgraph/parallel.hpp"

#include <omp.h>

#include <algorithm>

namespace ordgraph {

int num_threads() { return omp_get_max_threads(); }

ScopedThreadCount::ScopedThreadCount(int threads) : previous_(omp_get_max_threads()) {
  if (threads > 0) omp_set_num_threads(threads);
}

ScopedThreadCount::~ScopedThreadCount() { omp_set_num_threads(previous_); }

void set_loop_grain(ParallelGrain grain) {
  if (grain == ParallelGrain::kDynamic) {
    omp_set_schedule(omp_sched_dynamic, 64);
  } else {
    omp_set_schedule(omp_sched_static, 0);
  }
}

std::vector<std::size_t> exclusive_prefix_sum(std::span<const std::size_t> in) {
  const std::size_t n = in.size();
  std::vector<std::size_t> out(n + 1, 0);
  constexpr std::size_t kSerialCutoff = 1 << 16;
  if (n < kSerialCutoff || omp_in_parallel() || omp_get_max_threads() == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i + 1] = out[i] + in[i];
    return out;
  }
  const int blocks = omp_get_max_threads();
  std::vector<std::size_t> block_sum(static_cast<std::size_t>(blocks) + 1, 0);
  const std::size_t chunk = (n + blocks - 1) / blocks;
#pragma omp parallel num_threads(blocks)
  {
    const auto b = static_cast<std::size_t>(omp_get_thread_num());
    const std::size_t lo = std::min(n, b * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    std::size_t local = 0;
    for (std::size_t i = lo; i < hi; ++i) local += in[i];
    block_sum[b + 1] = local;
#pragma omp barrier
#pragma omp single
    for (std::size_t i = 0; i < static_cast<std::size_t>(blocks); ++i) block_sum[i + 1] += block_sum[i];
    std::size_t running = block_sum[b];
    for (std::size_t i = lo; i < hi; ++i) {
      out[i] = running;
      running += in[i];
    }
  }
  out[n] = block_sum[static_cast<std::size_t>(blocks)];
  return out;
}

}  // namespace ordgraph
