#pragma once

// Oriented piecewise-smooth contours in the s-plane and the logarithmic
// integral of zeta'/zeta along them, with winding extracted both from the
// integral and from direct argument tracking.

#include <vector>

#include "zetachi/chi_geometry.hpp"
#include "zetachi/special_functions.hpp"

namespace zetachi {

/// A polyline piece of a contour; a straight edge is a two-node segment.
struct Segment {
  std::vector<Complex> nodes;
};

struct ContourPath {
  std::vector<Segment> segments;
  bool closed = false;

  /// Consecutive endpoints must coincide within 1e-12; closed paths return
  /// to the start. Throws invalid_argument otherwise.
  void validate() const;
  /// All nodes in traversal order (shared endpoints deduplicated).
  std::vector<Complex> flatten() const;
};

enum class ContourKind { type_one, type_two };
enum class ContourShape { arc_hugging, rectangle_blend };

/// Parameters of the symmetric contours around one argument interval.
/// type_one spans the full interval (heights t_m + eps .. t_{m+1} - eps);
/// type_two straddles the single division height t_m (t_m - eps .. t_m + eps).
struct SimpleDomainSpec {
  ContourKind kind = ContourKind::type_one;
  int m = 0;
  double epsilon = 1e-3;
  ContourShape shape = ContourShape::arc_hugging;
  double sigma_lo = -1.0;
  double sigma_hi = 2.0;  // must equal 1 - sigma_lo

  void validate(const EvalConfig& cfg = {}) const;
};

struct LogIntegralResult {
  Complex value{};
  double quadrature_error_estimate = 0.0;
  /// Nearest integer to Im(value) / 2pi.
  int winding = 0;
  /// Distance of Im(value) / 2pi from that integer.
  double winding_residual = 0.0;
  /// Winding obtained independently by tracking arg(zeta) along the path.
  int tracked_winding = 0;
  /// True when winding_residual < 0.25 and both winding extractions agree.
  bool reliable = false;
};

/// Counterclockwise closed contour for the full argument interval of strip m
/// (positive-real cut). Segment order: bottom boundary (sigma ascending),
/// right closure (up), top boundary (sigma descending), left closure (down).
/// The bottom and top pieces meet sigma = 1/2 exactly at t_m + eps and
/// t_{m+1} - eps. Throws guard_violation when |zeta| dips below the guard on
/// the boundary.
ContourPath build_type_one(const SimpleDomainSpec& spec, const EvalConfig& cfg = {});

/// Counterclockwise closed contour straddling the division height t_m
/// (negative-real cut strip), meeting sigma = 1/2 at t_m - eps and t_m + eps.
ContourPath build_type_two(const SimpleDomainSpec& spec, const EvalConfig& cfg = {});

/// Counterclockwise rectangle [sigma1, sigma2] x [t1, t2]; the classical
/// zero-counting oracle contour. Guard-checked like the strip contours.
ContourPath rectangle_contour(double sigma1, double sigma2, double t1, double t2,
                              const EvalConfig& cfg = {});

/// Minimum |zeta| over a pre-scan of the path (512 samples per segment).
/// Throws guard_violation, carrying the offending point, if the minimum
/// falls below guard_radius or the path passes within guard_radius of s = 1.
double guard_scan(const ContourPath& path, double guard_radius = 1e-4,
                  const EvalConfig& cfg = {});

/// Adaptive integral of zeta'/zeta along the path (absolute tolerance tol
/// split across segments), plus continuous tracking of arg(zeta); a closed
/// path is accepted only when the quadrature winding and the tracked winding
/// agree and the residual is below 0.25.
LogIntegralResult integrate_log_deriv(const ContourPath& path, double tol = 1e-8,
                                      const EvalConfig& cfg = {});

/// Winding number of zeta around the counterclockwise rectangle; convenience
/// wrapper used by the zero census. Throws count_mismatch if unreliable.
int rectangle_winding(double sigma1, double sigma2, double t1, double t2,
                      const EvalConfig& cfg = {});

}  // namespace zetachi
