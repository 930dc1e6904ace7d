#include "zetachi/tau_inverse.hpp"

#include <cmath>

namespace zetachi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// sigma seed from the modulus law: log|chi| ~ (1/2 - sigma) log(t/2pi).
double sigma_from_modulus(double log_abs_z, double t) {
  const double slope = std::log(t / kTwoPi);
  return 0.5 - log_abs_z / slope;
}

}  // namespace

std::pair<double, double> BranchSpec::admissible_range() const {
  if (sign == BranchSign::plus) {
    if (cut == Cut::positive_real) return {-kTwoPi * (m + 1), -kTwoPi * m};
    return {-kPi - kTwoPi * m, kPi - kTwoPi * m};
  }
  if (cut == Cut::positive_real) return {kTwoPi * m, kTwoPi * (m + 1)};
  return {-kPi + kTwoPi * m, kPi + kTwoPi * m};
}

BranchSpec BranchSpec::conjugate_partner() const {
  return {m, cut, sign == BranchSign::plus ? BranchSign::minus : BranchSign::plus};
}

double branch_argument(Complex z, const BranchSpec& spec) {
  if (z == Complex(0.0, 0.0)) {
    throw EvalError(ErrorKind::invalid_argument, "branch inversion undefined at z = 0");
  }
  const auto [lo, hi] = spec.admissible_range();
  const double a = std::arg(z);
  // Unique representative a + 2*pi*k inside (lo, hi); the interval has
  // width exactly 2*pi, so only endpoint coincidences can fail.
  double k = std::ceil((lo - a) / kTwoPi);
  double phi = a + kTwoPi * k;
  if (phi >= hi) phi -= kTwoPi;
  if (phi <= lo + 1e-12 || phi >= hi - 1e-12) {
    throw EvalError(ErrorKind::on_cut, "z lies on the branch cut", z);
  }
  return phi;
}

Complex tau(Complex z, const BranchSpec& spec, const EvalConfig& cfg) {
  cfg.validate();
  if (spec.sign != BranchSign::plus) {
    throw EvalError(ErrorKind::invalid_argument, "tau expects a plus-branch spec");
  }
  const double phi = branch_argument(z, spec);
  const double log_abs = std::log(std::abs(z));
  const Complex target(log_abs, phi);

  // Seed from the closed-form asymptotics.
  const double t0 = arg_chi_closed_form_inverse(phi);
  const double s0 = sigma_from_modulus(log_abs, t0);
  Complex s(s0, t0);

  for (int iter = 0; iter < 60; ++iter) {
    const Complex f = log_chi(s) - target;
    if (std::abs(f) < 1e-12) return s;
    Complex step = f / chi_log_deriv(s);
    // Keep iterates safely inside the upper half-plane.
    while (s.imag() - step.imag() < 0.5 * cfg.t_floor && std::abs(step) > 1e-15) {
      step *= 0.5;
    }
    s -= step;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(s))) {
      if (std::abs(log_chi(s) - target) < 1e-10) return s;
    }
  }
  throw EvalError(ErrorKind::non_convergence, "branch inversion did not converge", s);
}

Complex tau_conjugate(Complex z, const BranchSpec& spec, const EvalConfig& cfg) {
  if (spec.sign != BranchSign::minus) {
    throw EvalError(ErrorKind::invalid_argument, "tau_conjugate expects a minus-branch spec");
  }
  return std::conj(tau(std::conj(z), spec.conjugate_partner(), cfg));
}

Complex g_value(Complex z, const BranchSpec& spec, const EvalConfig& cfg) {
  const Complex s = (spec.sign == BranchSign::plus) ? tau(z, spec, cfg)
                                                    : tau_conjugate(z, spec, cfg);
  return zeta(s, cfg);
}

double functional_residual(Complex z, const BranchSpec& spec, const EvalConfig& cfg) {
  if (spec.sign != BranchSign::plus) {
    throw EvalError(ErrorKind::invalid_argument,
                    "functional_residual expects the plus-branch spec");
  }
  const Complex g = g_value(z, spec, cfg);
  const Complex g_minus = g_value(1.0 / z, spec.conjugate_partner(), cfg);
  return std::abs(g - z * g_minus) / std::max(1.0, std::abs(g));
}

}  // namespace zetachi
