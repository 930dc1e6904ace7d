#pragma once

// Numerical branch inversion s = tau(z) of z = chi(s), the conjugated
// branch tau_minus, the composite G = zeta(tau(.)), and the residual of the
// z-plane functional equation G(z) = z * G_minus(1/z).

#include <utility>

#include "zetachi/chi_geometry.hpp"
#include "zetachi/special_functions.hpp"

namespace zetachi {

enum class BranchSign { plus, minus };

/// One branch of the inverse: strip index m, slit choice, and whether the
/// plus branch (image in the upper strip D_m) or its conjugated reflection
/// is requested.
struct BranchSpec {
  int m = 0;
  Cut cut = Cut::positive_real;
  BranchSign sign = BranchSign::plus;

  /// Admissible unwrapped-argument interval (lo, hi) for z on this branch:
  ///   plus,  positive_real: (-2pi(m+1), -2pi m)
  ///   plus,  negative_real: (-pi - 2pi m, pi - 2pi m)
  ///   minus, positive_real: (2pi m, 2pi(m+1))
  ///   minus, negative_real: (-pi + 2pi m, pi + 2pi m)
  std::pair<double, double> admissible_range() const;

  /// The plus-branch spec whose conjugate realizes this minus branch.
  BranchSpec conjugate_partner() const;
};

/// Representative of arg(z) inside the branch's admissible interval.
/// Throws on_cut when arg(z) coincides with an interval endpoint to 1e-12.
double branch_argument(Complex z, const BranchSpec& spec);

/// Inverse of chi on the branch: the s in strip D_m with chi(s) = z, found
/// by Newton iteration on log_chi(s) = log|z| + i * branch_argument(z),
/// seeded from the closed-form asymptotics (t from the argument law, sigma
/// from the modulus law). Throws non_convergence with the last iterate
/// attached after 60 steps.
Complex tau(Complex z, const BranchSpec& spec, const EvalConfig& cfg = {});

/// Conjugated branch: tau_minus(z) = conj(tau(conj(z))) over the paired
/// plus branch. spec.sign must be minus.
Complex tau_conjugate(Complex z, const BranchSpec& spec, const EvalConfig& cfg = {});

/// zeta at the branch inverse: G for the plus sign, G_minus for minus.
Complex g_value(Complex z, const BranchSpec& spec, const EvalConfig& cfg = {});

/// |G(z) - z * G_minus(1/z)| / max(1, |G(z)|), evaluating G on spec (which
/// must be a plus branch) and G_minus on the paired minus branch.
double functional_residual(Complex z, const BranchSpec& spec, const EvalConfig& cfg = {});

}  // namespace zetachi
