#include "zetachi/sweeps.hpp"

#include <cmath>
#include <exception>
#include <random>

#include "zetachi/chi_geometry.hpp"

namespace zetachi::sweeps {

namespace {

double unit_double(std::mt19937_64& rng) {
  // Fixed 53-bit mapping; keeps sample streams identical across platforms.
  return double(rng() >> 11) * 0x1.0p-53;
}

// Per-item evaluation into a buffer (parallel), max-merge in index order.
template <class F>
MaxStat max_sweep(std::size_t n, Exec mode, F&& item) {
  std::vector<double> vals(n);
  std::vector<std::exception_ptr> failures(n);
  for_each_index(n, mode, [&](std::size_t i) {
    try {
      vals[i] = item(i);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  MaxStat stat;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || vals[i] > stat.max_value) {
      stat.max_value = vals[i];
      stat.argmax = i;
    }
  }
  return stat;
}

template <class F>
std::vector<double> fill_sweep(std::size_t n, Exec mode, F&& item) {
  std::vector<double> vals(n);
  std::vector<std::exception_ptr> failures(n);
  for_each_index(n, mode, [&](std::size_t i) {
    try {
      vals[i] = item(i);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return vals;
}

}  // namespace

std::vector<Complex> seeded_strip_samples(std::uint64_t seed, std::size_t n,
                                          double sigma_lo, double sigma_hi, double t_lo,
                                          double t_hi) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sigma = sigma_lo + (sigma_hi - sigma_lo) * unit_double(rng);
    const double t = t_lo + (t_hi - t_lo) * unit_double(rng);
    out.emplace_back(sigma, t);
  }
  return out;
}

std::vector<Complex> seeded_branch_samples(std::uint64_t seed, std::size_t n,
                                           const BranchSpec& spec, double r_lo, double r_hi,
                                           double margin) {
  const auto [lo, hi] = spec.admissible_range();
  std::mt19937_64 rng(seed);
  std::vector<Complex> out;
  out.reserve(n);
  const double log_lo = std::log(r_lo), log_hi = std::log(r_hi);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::exp(log_lo + (log_hi - log_lo) * unit_double(rng));
    const double phi = (lo + margin) + (hi - lo - 2.0 * margin) * unit_double(rng);
    out.push_back(r * Complex(std::cos(phi), std::sin(phi)));
  }
  return out;
}

MaxStat functional_equation_residual(std::span<const Complex> samples,
                                     const EvalConfig& cfg, Exec mode) {
  return max_sweep(samples.size(), mode, [&](std::size_t i) {
    const Complex s = samples[i];
    const Complex lhs = zeta(s, cfg);
    const Complex rhs = chi(s) * zeta(1.0 - s, cfg);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
  });
}

MaxStat chi_reciprocity_residual(std::span<const Complex> samples, Exec mode) {
  return max_sweep(samples.size(), mode, [&](std::size_t i) {
    return std::abs(chi(samples[i]) * chi(1.0 - samples[i]) - 1.0);
  });
}

MaxStat critical_line_modulus_deviation(double t_lo, double t_hi, std::size_t n,
                                        Exec mode) {
  return max_sweep(n, mode, [&](std::size_t i) {
    const double t =
        (n == 1) ? t_lo : t_lo + (t_hi - t_lo) * double(i) / double(n - 1);
    return std::abs(std::abs(chi(Complex(0.5, t))) - 1.0);
  });
}

MaxStat exp_log_chi_consistency(std::span<const Complex> samples, Exec mode) {
  return max_sweep(samples.size(), mode, [&](std::size_t i) {
    const Complex c = chi(samples[i]);
    return std::abs(std::exp(log_chi(samples[i])) - c) / std::abs(c);
  });
}

long modulus_sigma_monotonicity(double t, double sigma_lo, double sigma_hi, double step,
                                Exec mode) {
  const std::size_t n = std::size_t(std::floor((sigma_hi - sigma_lo) / step)) + 1;
  const std::vector<double> vals = fill_sweep(n, mode, [&](std::size_t i) {
    return std::abs(chi(Complex(sigma_lo + double(i) * step, t)));
  });
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(vals[i + 1] < vals[i])) return long(i + 1);
  }
  return -1;
}

long arg_t_monotonicity(double t_lo, double t_hi, double step, const EvalConfig& cfg,
                        Exec mode) {
  const std::size_t n = std::size_t(std::floor((t_hi - t_lo) / step)) + 1;
  const std::vector<double> vals = fill_sweep(n, mode, [&](std::size_t i) {
    return unwrapped_arg_chi(Complex(0.5, t_lo + double(i) * step), cfg).phi;
  });
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(vals[i + 1] < vals[i])) return long(i + 1);
  }
  return -1;
}

MaxStat scaled_arg_asymptotic_deviation(std::span<const double> sigmas, double t_lo,
                                        double t_hi, std::size_t n, const EvalConfig& cfg,
                                        Exec mode) {
  const std::size_t total = sigmas.size() * n;
  return max_sweep(total, mode, [&](std::size_t idx) {
    const double sigma = sigmas[idx / n];
    const std::size_t i = idx % n;
    const double t = (n == 1) ? t_lo : t_lo + (t_hi - t_lo) * double(i) / double(n - 1);
    const double diff =
        unwrapped_arg_chi(Complex(sigma, t), cfg).phi - arg_chi_asymptotic(sigma, t);
    return 8.0 * t * std::abs(diff);
  });
}

InversionGridReport inversion_grid(const BranchSpec& spec, std::size_t n_r,
                                   std::size_t n_phi, double r_lo, double r_hi,
                                   double margin, const EvalConfig& cfg, Exec mode) {
  const auto [lo, hi] = spec.admissible_range();
  const std::size_t total = n_r * n_phi;
  struct Item {
    double residual = 0.0;
    double abs_deriv = 0.0;
    bool in_range = false;
  };
  std::vector<Item> items(total);
  std::vector<std::exception_ptr> failures(total);
  for_each_index(total, mode, [&](std::size_t idx) {
    try {
      const std::size_t ir = idx / n_phi;
      const std::size_t ip = idx % n_phi;
      const double r = std::exp(std::log(r_lo) + (std::log(r_hi) - std::log(r_lo)) *
                                                     double(ir) / double(n_r - 1));
      const double phi =
          (lo + margin) + (hi - lo - 2.0 * margin) * double(ip) / double(n_phi - 1);
      const Complex z = r * Complex(std::cos(phi), std::sin(phi));
      const Complex s = (spec.sign == BranchSign::plus) ? tau(z, spec, cfg)
                                                        : tau_conjugate(z, spec, cfg);
      items[idx].residual = std::abs(chi(s) - z) / std::abs(z);
      items[idx].abs_deriv = std::abs(chi(s) * chi_log_deriv(s));
      // For either sign the continuous argument of chi at the inverse must
      // land in the branch's own admissible interval (the lower half-plane
      // branch of log_chi is the conjugate, so this covers minus branches).
      const double arg_s = log_chi(s).imag();
      items[idx].in_range = arg_s > lo && arg_s < hi;
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  InversionGridReport report;
  report.points = total;
  report.min_abs_chi_deriv = items.empty() ? 0.0 : items[0].abs_deriv;
  for (std::size_t i = 0; i < total; ++i) {
    if (items[i].residual > report.max_roundtrip_residual.max_value || i == 0) {
      report.max_roundtrip_residual = {items[i].residual, i};
    }
    report.min_abs_chi_deriv = std::min(report.min_abs_chi_deriv, items[i].abs_deriv);
    if (!items[i].in_range) ++report.out_of_range;
  }
  return report;
}

MaxStat functional_residual_sweep(std::span<const Complex> zs, const BranchSpec& spec,
                                  const EvalConfig& cfg, Exec mode) {
  return max_sweep(zs.size(), mode, [&](std::size_t i) {
    return functional_residual(zs[i], spec, cfg);
  });
}

}  // namespace zetachi::sweeps
