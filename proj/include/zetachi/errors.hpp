#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zetachi {

/// Classification of evaluation failures. The CLI maps these onto exit codes
/// (validation / numerical / mismatch), so every throw site picks the kind
/// deliberately.
enum class ErrorKind {
  invalid_argument,    // bad config, ranges, parse failures
  pole_of_gamma,       // log_gamma at 0, -1, -2, ...
  pole_of_zeta,        // zeta at s = 1
  pole_of_chi,         // chi at odd positive integers on the real axis
  real_axis,           // log_chi requested with Im(s) = 0
  below_t_floor,       // argument machinery used under the configured floor
  precision_loss,      // requested tolerance not attainable
  near_zero_of_zeta,   // zeta too small for a safe logarithmic derivative
  bracket_failure,     // root finder could not bracket a solution
  on_cut,              // branch inversion requested exactly on the cut
  on_boundary,         // point sits on a strip boundary within tolerance
  non_convergence,     // iteration exhausted (last iterate attached)
  guard_violation,     // contour passes too close to a zero or the pole
  count_mismatch,      // sign-change census disagrees with contour winding
  unreliable_integral, // quadrature and argument-tracking windings disagree
};

class EvalError : public std::runtime_error {
public:
  EvalError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  EvalError(ErrorKind kind, const std::string& what, std::complex<double> where)
      : std::runtime_error(what), kind_(kind), where_(where), has_where_(true) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Offending point or last iterate, when the failure has a location.
  bool has_where() const noexcept { return has_where_; }
  std::complex<double> where() const noexcept { return where_; }

private:
  ErrorKind kind_;
  std::complex<double> where_{0.0, 0.0};
  bool has_where_ = false;
};

}  // namespace zetachi
