#pragma once

// Grid and sample sweeps over the identities the library maintains. These
// are the OpenMP kernels; every one also runs under Exec::serial as the
// reference schedule, producing bitwise-identical results (per-item values
// are computed independently and merged in a fixed order).

#include <cstdint>
#include <span>
#include <vector>

#include "zetachi/parallel.hpp"
#include "zetachi/special_functions.hpp"
#include "zetachi/tau_inverse.hpp"

namespace zetachi::sweeps {

struct MaxStat {
  double max_value = 0.0;
  std::size_t argmax = 0;
};

/// Deterministic seeded samples in the rectangle [sigma_lo, sigma_hi] x
/// [t_lo, t_hi]; the mapping from the generator stream is fixed, so a seed
/// pins the sample bytes across runs.
std::vector<Complex> seeded_strip_samples(std::uint64_t seed, std::size_t n,
                                          double sigma_lo, double sigma_hi, double t_lo,
                                          double t_hi);

/// Seeded z samples on a branch: |z| log-uniform in [r_lo, r_hi], argument
/// uniform in the admissible interval shrunk by margin (radians) per side.
std::vector<Complex> seeded_branch_samples(std::uint64_t seed, std::size_t n,
                                           const BranchSpec& spec, double r_lo, double r_hi,
                                           double margin);

/// max over samples of |zeta(s) - chi(s) zeta(1-s)| / max(1, |zeta(s)|).
MaxStat functional_equation_residual(std::span<const Complex> samples,
                                     const EvalConfig& cfg = {}, Exec mode = Exec::parallel);

/// max over samples of |chi(s) chi(1-s) - 1|.
MaxStat chi_reciprocity_residual(std::span<const Complex> samples,
                                 Exec mode = Exec::parallel);

/// max over an n-point t-grid of ||chi(1/2 + i t)| - 1|.
MaxStat critical_line_modulus_deviation(double t_lo, double t_hi, std::size_t n,
                                        Exec mode = Exec::parallel);

/// max over samples of |exp(log_chi(s)) - chi(s)| / |chi(s)|.
MaxStat exp_log_chi_consistency(std::span<const Complex> samples,
                                Exec mode = Exec::parallel);

/// Index of the first sigma grid point where |chi(sigma + i t)| fails to
/// decrease strictly, or -1 when the whole grid is monotone.
long modulus_sigma_monotonicity(double t, double sigma_lo, double sigma_hi, double step,
                                Exec mode = Exec::parallel);

/// Index of the first t grid point where the unwrapped argument fails to
/// decrease strictly, or -1 when the whole grid is monotone.
long arg_t_monotonicity(double t_lo, double t_hi, double step, const EvalConfig& cfg = {},
                        Exec mode = Exec::parallel);

/// max over a (t, sigma) grid of 8 t |unwrapped_arg_chi - closed form|;
/// the asymptotic envelope holds when the max stays below 1.
MaxStat scaled_arg_asymptotic_deviation(std::span<const double> sigmas, double t_lo,
                                        double t_hi, std::size_t n,
                                        const EvalConfig& cfg = {},
                                        Exec mode = Exec::parallel);

struct InversionGridReport {
  MaxStat max_roundtrip_residual;   // |chi(tau(z)) - z| / |z|
  double min_abs_chi_deriv = 0.0;   // |chi'| at the inverse, over the grid
  std::size_t out_of_range = 0;     // inverses outside the admissible interval
  std::size_t points = 0;
};

/// Round-trip sweep over an n_r x n_phi log-polar grid of the branch.
InversionGridReport inversion_grid(const BranchSpec& spec, std::size_t n_r,
                                   std::size_t n_phi, double r_lo, double r_hi,
                                   double margin, const EvalConfig& cfg = {},
                                   Exec mode = Exec::parallel);

/// max of functional_residual over seeded z samples of a plus branch.
MaxStat functional_residual_sweep(std::span<const Complex> zs, const BranchSpec& spec,
                                  const EvalConfig& cfg = {}, Exec mode = Exec::parallel);

}  // namespace zetachi::sweeps
