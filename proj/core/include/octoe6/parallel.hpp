#pragma once
/**
 * @file parallel.hpp
 * @brief Deterministic fork-join helper for embarrassingly parallel loops.
 *
 * Work items write to preallocated slots indexed by their loop counter, so
 * results are bit-identical regardless of the thread count. The environment
 * variable OCTOE6_THREADS caps the number of worker threads.
 */

#include <functional>

namespace octoe6 {

/// Number of worker threads to use: min(hardware_concurrency, OCTOE6_THREADS
/// if set), and at least 1.
[[nodiscard]] int thread_budget();

/// Runs fn(0) .. fn(n-1), partitioned statically across the thread budget,
/// and joins. Exceptions are captured and the one thrown by the smallest
/// index is rethrown after the join, keeping failures deterministic.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace octoe6
