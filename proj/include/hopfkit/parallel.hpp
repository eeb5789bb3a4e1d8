#pragma once

// Data-parallel search kernels for exhaustive identity checks.
//
// Every identity in the library is verified by scanning a finite index space
// (basis elements, basis pairs, carrier index tuples). The kernels below find
// the first index at which a predicate holds. The OpenMP kernel returns the
// same index as the serial reference regardless of scheduling, so reports do
// not depend on thread count.

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfkit {

enum class Execution { serial, parallel };

/// Process-wide execution mode for verification kernels (default: parallel).
void set_execution(Execution mode);
Execution execution();

namespace kernels {

namespace serial {

template <class Pred>
std::optional<std::size_t> first_match(std::size_t count, Pred&& pred) {
  for (std::size_t i = 0; i < count; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

template <class T, class Fn>
std::vector<T> map_indices(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

}  // namespace serial

namespace omp {

template <class Pred>
std::optional<std::size_t> first_match(std::size_t count, Pred&& pred) {
  const long n = static_cast<long>(count);
  std::atomic<long> best{n};
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    // Indices at or beyond an already-found match cannot lower the minimum.
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (!pred(static_cast<std::size_t>(i))) continue;
    long current = best.load(std::memory_order_relaxed);
    while (i < current && !best.compare_exchange_weak(current, i, std::memory_order_relaxed)) {
    }
  }
  if (best.load() == n) return std::nullopt;
  return static_cast<std::size_t>(best.load());
}

template <class T, class Fn>
std::vector<T> map_indices(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  return out;
}

}  // namespace omp

}  // namespace kernels

template <class Pred>
std::optional<std::size_t> first_match(std::size_t count, Pred&& pred) {
  if (execution() == Execution::parallel && count > 1) return kernels::omp::first_match(count, pred);
  return kernels::serial::first_match(count, pred);
}

template <class T, class Fn>
std::vector<T> map_indices(std::size_t count, Fn&& fn) {
  if (execution() == Execution::parallel && count > 1) return kernels::omp::map_indices<T>(count, fn);
  return kernels::serial::map_indices<T>(count, fn);
}

}  // namespace hopfkit
