#pragma once

// Index-range reductions and maps with a serial reference and an OpenMP
// kernel.  The parallel kernel sums fixed-size chunks and combines the chunk
// totals in index order, so its result does not depend on the thread count.

#include <omp.h>

#include <exception>
#include <mutex>
#include <vector>

#include "plab/context.hpp"
#include "plab/real.hpp"

namespace plab {

inline constexpr long kChunk = 64;

template <class T, class F>
T sum_terms_serial(long begin, long end, F&& f) {
  T acc{};
  for (long i = begin; i < end; ++i) acc += f(i);
  return acc;
}

template <class T, class F>
T sum_terms_parallel(long begin, long end, F&& f) {
  if (end <= begin) return T{};
  const long n_chunks = (end - begin + kChunk - 1) / kChunk;
  if (n_chunks == 1) return sum_terms_serial<T>(begin, end, f);
  const long bits = working_bits();
  std::vector<T> partial(static_cast<size_t>(n_chunks));
  std::exception_ptr err;
  std::mutex err_mutex;
#pragma omp parallel
  {
    PrecisionScope scope(bits);
#pragma omp for schedule(dynamic, 1)
    for (long c = 0; c < n_chunks; ++c) {
      try {
        const long lo = begin + c * kChunk;
        const long hi = std::min(end, lo + kChunk);
        T acc{};
        for (long i = lo; i < hi; ++i) acc += f(i);
        partial[static_cast<size_t>(c)] = std::move(acc);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
  T total{};
  for (auto& p : partial) total += p;
  return total;
}

template <class T, class F>
T sum_terms(long begin, long end, F&& f, Exec exec) {
  if (exec == Exec::serial) return sum_terms_serial<T>(begin, end, f);
  return sum_terms_parallel<T>(begin, end, f);
}

// out[i] = f(i) for i in [0, n).
template <class T, class F>
std::vector<T> map_indices(long n, F&& f, Exec exec) {
  std::vector<T> out(static_cast<size_t>(n > 0 ? n : 0));
  if (exec == Exec::serial || n < 2) {
    for (long i = 0; i < n; ++i) out[static_cast<size_t>(i)] = f(i);
    return out;
  }
  const long bits = working_bits();
  std::exception_ptr err;
  std::mutex err_mutex;
#pragma omp parallel
  {
    PrecisionScope scope(bits);
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      try {
        out[static_cast<size_t>(i)] = f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace plab
