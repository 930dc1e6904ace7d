#pragma once

// Continuous (unwrapped) argument of chi, argument-preserving arcs t(sigma),
// and the horizontal strip decomposition indexed by the branch integer m.

#include <vector>

#include "zetachi/special_functions.hpp"

namespace zetachi {

/// A continuous, non-mod-2pi argument value of chi along the upper
/// half-plane branch. Kept as a distinct type so winding bookkeeping is
/// never confused with a principal argument.
struct UnwrappedArg {
  double phi = 0.0;
};

struct ArcSample {
  double sigma = 0.0;
  double t = 0.0;
};

/// An argument-preserving arc: the curve t(sigma) on which the unwrapped
/// argument of chi equals phi. Samples are strictly increasing in sigma.
struct ArgArc {
  UnwrappedArg phi;
  std::vector<ArcSample> samples;
  double sigma_lo = 0.0;
  double sigma_hi = 0.0;

  /// Piecewise-linear height of the arc at sigma (samples interpolated).
  double height_at(double sigma) const;
};

enum class Cut { positive_real, negative_real };

/// The strip between two argument-preserving arcs. The arcs are named by
/// their phi values: upper_arc is the arc at phi_upper, which is the
/// geometrically *lower* boundary (the argument decreases with t).
struct StripRegion {
  int m = 0;
  Cut cut = Cut::positive_real;
  double phi_upper = 0.0;
  double phi_lower = 0.0;  // = phi_upper - 2*pi
  ArgArc upper_arc;        // traced at phi_upper (bottom of the strip)
  ArgArc lower_arc;        // traced at phi_lower (top of the strip)
};

/// One continuous branch of arg(chi(s)) on Im(s) >= t_floor, normalized so
/// the difference to arg_chi_asymptotic vanishes as t grows. Evaluated
/// directly as Im(log_chi); the path-continuation route is kept as a test
/// oracle (see track_arg_change).
UnwrappedArg unwrapped_arg_chi(Complex s, const EvalConfig& cfg = {});

/// Solves t - t log(t/2pi) + pi/4 = phi for t (the sigma-free seed height).
double arg_chi_closed_form_inverse(double phi);

/// Height t solving unwrapped_arg_chi(sigma + i t) = phi; monotone bracketed
/// bisection refined by secant steps. Throws bracket_failure when phi lies
/// above the admissible range for the configured floor.
double solve_arc_height(double phi, double sigma, const EvalConfig& cfg = {});

/// Traces the argument-preserving arc at phi over [sigma_lo, sigma_hi] with
/// the given sigma step (refined wherever consecutive heights jump by more
/// than 0.5). Every sample satisfies |unwrapped - phi| < 1e-9.
ArgArc trace_arg_arc(UnwrappedArg phi, double sigma_lo, double sigma_hi, double step = 0.05,
                     const EvalConfig& cfg = {});

/// Bounding arcs of strip m for the chosen cut: phi_upper = -2*pi*m for the
/// positive-real cut, pi - 2*pi*m for the negative-real cut.
StripRegion strip_region(int m, Cut cut, double sigma_lo, double sigma_hi,
                         double step = 0.05, const EvalConfig& cfg = {});

/// Strip index of s for the chosen cut. Points within 1e-9 (in phi) of a
/// defining boundary throw on_boundary instead of being assigned.
int classify_point(Complex s, Cut cut, const EvalConfig& cfg = {});

}  // namespace zetachi
