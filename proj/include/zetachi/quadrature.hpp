#pragma once

// Adaptive Gauss-Kronrod (G7, K15) quadrature along straight complex
// segments. The error estimate is |K15 - G7|; intervals are bisected until
// each carries its share of the absolute tolerance.

#include <array>
#include <complex>
#include <cstddef>

#include "zetachi/errors.hpp"

namespace zetachi {

struct QuadResult {
  std::complex<double> value{};
  double error_estimate = 0.0;
  std::size_t evals = 0;
};

namespace detail {

// 15-point Kronrod abscissae on [-1, 1] (positive half) and weights; the
// Gauss-7 weights sit at indices 1, 3, 5, 7.
inline constexpr std::array<double, 8> kKronrodX = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(F& f, std::complex<double> a, std::complex<double> b, QuadResult& out) {
  const std::complex<double> mid = 0.5 * (a + b);
  const std::complex<double> half = 0.5 * (b - a);
  const std::complex<double> f0 = f(mid);
  std::complex<double> k15 = kKronrodW[7] * f0;
  std::complex<double> g7 = kGaussW[3] * f0;
  for (int j = 0; j < 7; ++j) {
    const std::complex<double> fp = f(mid + half * kKronrodX[std::size_t(j)]);
    const std::complex<double> fm = f(mid - half * kKronrodX[std::size_t(j)]);
    k15 += kKronrodW[std::size_t(j)] * (fp + fm);
    if (j % 2 == 1) g7 += kGaussW[std::size_t(j / 2)] * (fp + fm);
  }
  out.value = half * k15;
  out.error_estimate = std::abs(half) * std::abs(k15 - g7);
  out.evals = 15;
}

template <class F>
QuadResult adapt(F& f, std::complex<double> a, std::complex<double> b, double abs_tol,
                 int depth) {
  QuadResult r;
  gk15(f, a, b, r);
  if (r.error_estimate <= abs_tol || depth <= 0) {
    if (depth <= 0 && r.error_estimate > abs_tol) {
      throw EvalError(ErrorKind::non_convergence,
                      "quadrature failed to converge on a segment", 0.5 * (a + b));
    }
    return r;
  }
  const std::complex<double> mid = 0.5 * (a + b);
  const QuadResult left = adapt(f, a, mid, 0.5 * abs_tol, depth - 1);
  const QuadResult right = adapt(f, mid, b, 0.5 * abs_tol, depth - 1);
  return {left.value + right.value, left.error_estimate + right.error_estimate,
          left.evals + right.evals + r.evals};
}

}  // namespace detail

/// Integrates f along the straight segment from a to b.
template <class F>
QuadResult integrate_segment(F&& f, std::complex<double> a, std::complex<double> b,
                             double abs_tol, int max_depth = 30) {
  return detail::adapt(f, a, b, abs_tol, max_depth);
}

}  // namespace zetachi
