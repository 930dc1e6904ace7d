#include "zetachi/zero_census.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "zetachi/contour.hpp"

namespace zetachi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

// Sign-change brackets of rotated_zeta over [t1, t2] at the given step.
std::vector<Bracket> scan_brackets(double t1, double t2, double step,
                                   const EvalConfig& cfg, Exec mode) {
  const std::size_t n = std::size_t(std::ceil((t2 - t1) / step));
  std::vector<double> ts(n + 1);
  std::vector<double> zs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    ts[i] = (i == n) ? t2 : t1 + (t2 - t1) * double(i) / double(n);
  }
  std::vector<std::exception_ptr> failures(n + 1);
  for_each_index(n + 1, mode, [&](std::size_t i) {
    try {
      zs[i] = rotated_zeta(ts[i], cfg);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  for (double& z : zs) {
    if (z == 0.0) z = 5e-324;  // a grid point exactly on a zero: break the tie
  }
  std::vector<Bracket> brackets;
  for (std::size_t i = 0; i + 1 <= n; ++i) {
    if (zs[i] * zs[i + 1] < 0.0) brackets.push_back({ts[i], ts[i + 1]});
  }
  return brackets;
}

ZeroRecord refine_bracket(Bracket b, const EvalConfig& cfg) {
  double lo = b.lo, hi = b.hi;
  double flo = rotated_zeta(lo, cfg);
  for (int i = 0; i < 80 && hi - lo > 2e-10; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = rotated_zeta(mid, cfg);
    if (fm == 0.0) {
      lo = mid - 1e-12;
      hi = mid + 1e-12;
      break;
    }
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  ZeroRecord rec;
  rec.t = 0.5 * (lo + hi);
  rec.half_width = 0.5 * (hi - lo);
  rec.zeta_abs = std::abs(zeta(Complex(0.5, rec.t), cfg));
  rec.interval_index = int(std::floor(-log_chi(Complex(0.5, rec.t)).imag() / kTwoPi));
  return rec;
}

struct LocatedZeros {
  std::vector<ZeroRecord> records;
  int winding = 0;
};

LocatedZeros locate_zeros_impl(double t1, double t2, const EvalConfig& cfg, Exec mode) {
  cfg.validate();
  if (!(cfg.t_floor <= t1 && t1 < t2 && t2 <= 1000.0)) {
    throw EvalError(ErrorKind::invalid_argument,
                    "locate_zeros range must satisfy t_floor <= t1 < t2 <= 1000");
  }
  const int winding = rectangle_winding(-1.0, 2.0, t1, t2, cfg);

  std::vector<Bracket> brackets;
  for (const double step : {0.05, 0.0025}) {
    brackets = scan_brackets(t1, t2, step, cfg, mode);
    if (int(brackets.size()) == winding) break;
  }
  if (int(brackets.size()) != winding) {
    throw EvalError(ErrorKind::count_mismatch,
                    "sign-change count disagrees with the contour winding "
                    "(missed close pair or zero off the line)");
  }

  std::vector<ZeroRecord> records(brackets.size());
  std::vector<std::exception_ptr> failures(brackets.size());
  for_each_index(brackets.size(), mode, [&](std::size_t i) {
    try {
      records[i] = refine_bracket(brackets[i], cfg);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  std::sort(records.begin(), records.end(),
            [](const ZeroRecord& a, const ZeroRecord& b) { return a.t < b.t; });

  // Close-pair policy: a finer scan around near-coincident zeros, looking
  // for an extra pair the coarse grid could have merged.
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    if (records[i + 1].t - records[i].t < 1e-3) {
      const double lo = std::max(t1, records[i].t - 1e-3);
      const double hi = std::min(t2, records[i + 1].t + 1e-3);
      const auto fine = scan_brackets(lo, hi, 1e-6, cfg, mode);
      if (int(fine.size()) != 2) {
        throw EvalError(ErrorKind::count_mismatch,
                        "close-pair refinement changed the local zero count");
      }
    }
  }
  return {std::move(records), winding};
}

}  // namespace

GramPoint gram_point(int m, const EvalConfig& cfg) {
  cfg.validate();
  const double phi = -kTwoPi * m;
  double t;
  try {
    t = solve_arc_height(phi, 0.5, cfg);
  } catch (const EvalError& e) {
    if (e.kind() == ErrorKind::bracket_failure) {
      throw EvalError(ErrorKind::below_t_floor,
                      "division point lies below the configured floor");
    }
    throw;
  }
  GramPoint g;
  g.m = m;
  g.t = t;
  g.arg_residual = std::abs(log_chi(Complex(0.5, t)).imag() + kTwoPi * m);
  return g;
}

std::vector<GramPoint> gram_points(int m_start, int m_end, const EvalConfig& cfg, Exec mode) {
  if (m_end < m_start) {
    throw EvalError(ErrorKind::invalid_argument, "empty division-point range");
  }
  const std::size_t n = std::size_t(m_end - m_start) + 1;
  std::vector<GramPoint> out(n);
  std::vector<std::exception_ptr> failures(n);
  for_each_index(n, mode, [&](std::size_t i) {
    try {
      out[i] = gram_point(m_start + int(i), cfg);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return out;
}

double rotated_zeta(double t, const EvalConfig& cfg) {
  const double theta = -0.5 * unwrapped_arg_chi(Complex(0.5, t), cfg).phi;
  const Complex z = zeta(Complex(0.5, t), cfg);
  return (std::exp(Complex(0.0, theta)) * z).real();
}

std::vector<ZeroRecord> locate_zeros(double t1, double t2, const EvalConfig& cfg, Exec mode) {
  return locate_zeros_impl(t1, t2, cfg, mode).records;
}

CensusReport census(int m_start, int m_end, const EvalConfig& cfg, Exec mode) {
  if (m_end < m_start) {
    throw EvalError(ErrorKind::invalid_argument, "empty census range");
  }
  const std::vector<GramPoint> grams = gram_points(m_start, m_end + 1, cfg, mode);
  const LocatedZeros located =
      locate_zeros_impl(grams.front().t, grams.back().t, cfg, mode);

  CensusReport report;
  report.m_start = m_start;
  report.m_end = m_end;
  report.zeros = located.records;
  report.winding_total = located.winding;
  report.total_zeros = int(located.records.size());
  for (int m = m_start; m <= m_end; ++m) report.counts[m] = 0;
  for (const ZeroRecord& z : report.zeros) {
    if (report.counts.count(z.interval_index)) ++report.counts[z.interval_index];
    for (const GramPoint& g : grams) {
      const double d = std::abs(z.t - g.t);
      if (d < 1e-6) report.boundary.push_back({z.t, g.m, d});
    }
  }
  for (const auto& [m, count] : report.counts) {
    if (count != 1) report.violations.push_back(m);
  }
  return report;
}

MainTermCheck count_vs_main_term(double T, const EvalConfig& cfg) {
  cfg.validate();
  if (!(T > cfg.t_floor && T <= 1000.0)) {
    throw EvalError(ErrorKind::invalid_argument,
                    "count_vs_main_term requires t_floor < T <= 1000");
  }
  long below = 0;
  for (const double t : known_low_zero_ordinates()) {
    if (t < cfg.t_floor) ++below;
  }
  if (cfg.t_floor > 30.0) {
    throw EvalError(ErrorKind::invalid_argument,
                    "frozen low-zero table only covers floors up to 30");
  }
  MainTermCheck out;
  out.count = below + rectangle_winding(-1.0, 2.0, cfg.t_floor, T, cfg);
  out.main_term = (T / kTwoPi) * std::log(T / kTwoPi) - T / kTwoPi;
  out.deviation = double(out.count) - out.main_term;
  return out;
}

const std::vector<double>& known_low_zero_ordinates() {
  // First zeros on the critical line, re-derived by the bisection oracle in
  // the tests; covers every admissible floor (2 <= t_floor <= 30).
  static const std::vector<double> table = {
      14.134725141734694,
      21.022039638771555,
      25.010857580145688,
  };
  return table;
}

}  // namespace zetachi
