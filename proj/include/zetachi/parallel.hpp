#pragma once

// OpenMP shim: the kernels compile and run unchanged without OpenMP, they
// just lose the parallel schedule.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#define ZETACHI_PRAGMA_OMP(directive) _Pragma(#directive)
namespace zetachi {
constexpr bool openmp_enabled = true;
}
#else
#define ZETACHI_PRAGMA_OMP(directive)
namespace zetachi {
constexpr bool openmp_enabled = false;
}
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
#endif

namespace zetachi {

/// Execution mode for the data-parallel kernels. Every kernel has the same
/// semantics in both modes; `serial` is the reference schedule the tests
/// compare against, bit for bit.
enum class Exec { serial, parallel };

/// Runs f(0) .. f(n-1). Each call must be independent of the others and write
/// only to its own output slot; merges happen afterwards in a fixed order, so
/// results do not depend on the thread count.
template <class F>
void for_each_index(std::size_t n, Exec mode, F&& f) {
  if (mode == Exec::parallel) {
    ZETACHI_PRAGMA_OMP(omp parallel for schedule(dynamic))
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      f(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) f(i);
  }
}

/// Pairwise reduction with a shape fixed by the input length alone. Both the
/// serial and the parallel paths feed per-item values through this, so sums
/// are bitwise identical across schedules.
template <class T>
T pairwise_sum(std::span<const T> xs) {
  if (xs.empty()) return T{};
  if (xs.size() == 1) return xs[0];
  if (xs.size() == 2) return xs[0] + xs[1];
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& xs) {
  return pairwise_sum(std::span<const double>(xs));
}
inline std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& xs) {
  return pairwise_sum(std::span<const std::complex<double>>(xs));
}

}  // namespace zetachi
