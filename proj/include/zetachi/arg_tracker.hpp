#pragma once

// Continuous-argument accumulation along straight segments: the winding-safe
// way to follow arg(f) without trusting any global branch. The segment is
// first cut into pieces no longer than max_step (so a bounded rotation rate
// cannot hide a full turn inside one step), then each piece is halved until
// its principal-argument increment is below max_jump.

#include <cmath>
#include <complex>
#include <cstddef>

#include "zetachi/errors.hpp"

namespace zetachi {

namespace detail {

template <class F>
double track_arg_impl(F& f, std::complex<double> a, std::complex<double> b,
                      std::complex<double> fa, std::complex<double> fb, double max_jump,
                      int depth) {
  const double d = std::arg(fb / fa);
  if (std::abs(d) <= max_jump) return d;
  if (depth <= 0) {
    throw EvalError(ErrorKind::non_convergence,
                    "argument tracking exhausted subdivision (value near zero on path?)",
                    0.5 * (a + b));
  }
  const std::complex<double> mid = 0.5 * (a + b);
  const std::complex<double> fm = f(mid);
  return track_arg_impl(f, a, mid, fa, fm, max_jump, depth - 1) +
         track_arg_impl(f, mid, b, fm, fb, max_jump, depth - 1);
}

}  // namespace detail

/// Total change of arg(f) from a to b along the straight segment. max_step
/// bounds the initial piece length; it must be small enough that f cannot
/// rotate by more than ~3*pi/2 within one piece (0.25 is conservative for
/// the chi and zeta rotation rates at t <= 1e3).
template <class F>
double track_arg_change(F&& f, std::complex<double> a, std::complex<double> b,
                        double max_jump = 1.5707963267948966, double max_step = 0.25,
                        int max_depth = 48) {
  const std::size_t pieces =
      std::max<std::size_t>(1, std::size_t(std::ceil(std::abs(b - a) / max_step)));
  double total = 0.0;
  std::complex<double> prev = a;
  std::complex<double> fprev = f(a);
  for (std::size_t i = 1; i <= pieces; ++i) {
    const std::complex<double> next =
        (i == pieces) ? b : a + (b - a) * (double(i) / double(pieces));
    const std::complex<double> fnext = f(next);
    total += detail::track_arg_impl(f, prev, next, fprev, fnext, max_jump, max_depth);
    prev = next;
    fprev = fnext;
  }
  return total;
}

}  // namespace zetachi
