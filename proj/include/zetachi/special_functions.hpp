#pragma once

// Double-precision building blocks: complex log-gamma and digamma, the
// Riemann zeta function and its derivative by Euler-Maclaurin summation,
// the functional-equation factor chi, its logarithm, and the closed-form
// asymptotics of |chi| and arg(chi).

#include <complex>
#include <utility>

#include "zetachi/errors.hpp"

namespace zetachi {

using Complex = std::complex<double>;

/// Shared evaluation knobs. All functions taking a config treat it as
/// immutable; defaults are tuned for |Im s| <= 1e3.
struct EvalConfig {
  /// Minimum main-sum length N; the effective N also scales with |Im s|.
  int euler_maclaurin_terms = 20;
  /// Number of Bernoulli tail terms K (uses B_2 .. B_{2K}), at most 14.
  int bernoulli_order = 12;
  /// Requested relative accuracy for zeta, in [1e-14, 1e-6].
  double target_tol = 1e-12;
  /// Minimum height |Im s| for the asymptotic/argument machinery, >= 2.
  double t_floor = 10.0;

  /// Throws ErrorKind::invalid_argument when a field is out of range.
  void validate() const;
};

struct ZetaResult {
  Complex value{};
  double abs_error_estimate = 0.0;
  /// False signals precision loss: the estimate exceeds the requested
  /// tolerance times the value magnitude.
  bool tolerance_met = true;
};

/// Principal branch of log Gamma on the half-plane Re(s) > 0, continued by
/// the recurrence log Gamma(s) = log Gamma(s+1) - log(s) elsewhere (the
/// recurrence never crosses the real axis, so each half-plane carries one
/// continuous branch). Relative accuracy ~1e-13 for |s| <= 1e3 away from
/// the poles at 0, -1, -2, ...
Complex log_gamma(Complex s);

/// Logarithmic derivative of Gamma, same continuation scheme as log_gamma.
Complex digamma(Complex s);

/// Euler-Maclaurin evaluation of zeta(s) with a Bernoulli tail. For
/// Re(s) < -6 the value is reflected through the functional equation; the
/// direct sum is used everywhere else so that both sides of the functional
/// equation exercise independent code paths across the critical strip.
ZetaResult zeta_full(Complex s, const EvalConfig& cfg = {});
Complex zeta(Complex s, const EvalConfig& cfg = {});

/// zeta'(s) by term-wise differentiation of the same Euler-Maclaurin sum
/// (no finite differences on the production path).
Complex zeta_deriv(Complex s, const EvalConfig& cfg = {});

/// (zeta(s), zeta'(s)) sharing one pass over the main sum.
std::pair<Complex, Complex> zeta_pair(Complex s, const EvalConfig& cfg = {});

/// zeta'(s)/zeta(s). Throws near_zero_of_zeta when |zeta(s)| < 1e-6 and
/// pole_of_zeta at s = 1.
Complex zeta_log_deriv(Complex s, const EvalConfig& cfg = {});

/// The factor chi(s) of the functional equation zeta(s) = chi(s) zeta(1-s).
/// Off the real axis it is exp(log_chi(s)); on the axis it falls back to a
/// gamma-ratio product, with poles at s = 1, 3, 5, ... and zeros at
/// s = 0, -2, -4, ...
Complex chi(Complex s);

/// log chi(s) as the four-term sum
///   s log 2 + (s-1) log pi + log sin(pi s/2) + log Gamma(1-s),
/// with the sine term in its exponential form
///   -log 2 + i pi/2 - i pi s/2 + log1p(-e^{i pi s})   (Im s > 0),
/// which never overflows and keeps each term smooth on the half-plane.
/// Consequence: Im(log_chi) is one continuous branch of arg(chi) there.
/// The lower half-plane is the conjugate. Throws real_axis for Im(s) = 0.
Complex log_chi(Complex s);

/// d/ds log chi(s) (so chi'(s) = chi(s) * chi_log_deriv(s)).
Complex chi_log_deriv(Complex s);

/// Closed form t - t log(t/2pi) + pi/4 for the large-t argument of chi.
/// The sigma argument is accepted for interface symmetry; the closed form
/// is sigma-free. Requires t > 0.
double arg_chi_asymptotic(double sigma, double t);

/// Leading asymptotic term of |chi(sigma+it)|:
///   sqrt(2pi) 2^sigma pi^(sigma-1)
///     * sqrt((sin^2(pi sigma/2) + sinh^2(pi t/2)) / e^(pi t)) * t^(1/2-sigma),
/// evaluated in overflow-safe form. Requires t > 0.
double abs_chi_asymptotic(double sigma, double t);

/// Bernoulli number B_{2k} for k = 1..15 (constant table).
double bernoulli_b2k(int k);

}  // namespace zetachi
