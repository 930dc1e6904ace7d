#include "zetachi/chi_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace zetachi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kArcTol = 1e-9;

void require_above_floor(Complex s, const EvalConfig& cfg) {
  if (!(s.imag() >= cfg.t_floor)) {
    throw EvalError(ErrorKind::below_t_floor, "point below the configured t_floor", s);
  }
}

}  // namespace

double ArgArc::height_at(double sigma) const {
  const auto it = std::lower_bound(
      samples.begin(), samples.end(), sigma,
      [](const ArcSample& a, double x) { return a.sigma < x; });
  if (it == samples.begin()) return samples.front().t;
  if (it == samples.end()) return samples.back().t;
  const ArcSample& hi = *it;
  const ArcSample& lo = *(it - 1);
  const double w = (sigma - lo.sigma) / (hi.sigma - lo.sigma);
  return lo.t + w * (hi.t - lo.t);
}

UnwrappedArg unwrapped_arg_chi(Complex s, const EvalConfig& cfg) {
  require_above_floor(s, cfg);
  return {log_chi(s).imag()};
}

double arg_chi_closed_form_inverse(double phi) {
  // g(t) = t - t log(t/2pi) + pi/4 is strictly decreasing for t > 2pi with
  // g'(t) = -log(t/2pi). Newton from a crude exponential guess.
  if (!(phi <= kTwoPi + kPi / 4.0)) {
    throw EvalError(ErrorKind::bracket_failure,
                    "closed-form argument inverse requires phi <= 2pi + pi/4");
  }
  double t = kTwoPi * std::exp(1.0);  // start right of the maximum at t = 2pi
  for (int i = 0; i < 200; ++i) {
    const double g = t - t * std::log(t / kTwoPi) + kPi / 4.0 - phi;
    const double dg = -std::log(t / kTwoPi);
    double step = g / dg;
    if (t - step <= kTwoPi) step = (t - kTwoPi) * 0.5;  // keep right of the peak
    t -= step;
    if (std::abs(step) < 1e-13 * t) break;
  }
  return t;
}

double solve_arc_height(double phi, double sigma, const EvalConfig& cfg) {
  cfg.validate();
  const auto value = [&](double t) {
    return log_chi(Complex(sigma, t)).imag() - phi;
  };
  if (value(cfg.t_floor) < 0.0) {
    throw EvalError(ErrorKind::bracket_failure,
                    "phi above the admissible range at t_floor",
                    Complex(sigma, cfg.t_floor));
  }
  double guess = cfg.t_floor + 1.0;
  if (phi < kTwoPi + kPi / 4.0) guess = std::max(guess, arg_chi_closed_form_inverse(phi));

  // The argument decreases with t, so grow the bracket until it straddles 0.
  double lo = std::max(cfg.t_floor, guess - 1.0);
  double hi = guess + 1.0;
  double step = 1.0;
  while (value(lo) < 0.0 && lo > cfg.t_floor) {
    lo = std::max(cfg.t_floor, lo - step);
    step *= 2.0;
  }
  step = 1.0;
  while (value(hi) > 0.0) {
    hi += step;
    step *= 2.0;
    if (hi > 1e7) {
      throw EvalError(ErrorKind::bracket_failure, "arc height bracket grew unbounded");
    }
  }
  double flo = value(lo);
  double fhi = value(hi);
  if (flo < 0.0) {
    throw EvalError(ErrorKind::bracket_failure, "phi above the admissible range",
                    Complex(sigma, lo));
  }
  for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, lo); ++i) {
    // Bisection with a secant refinement once the bracket is tight.
    double mid;
    if (hi - lo < 1e-3 && fhi != flo) {
      mid = lo + flo * (hi - lo) / (flo - fhi);
      if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
    } else {
      mid = 0.5 * (lo + hi);
    }
    const double fm = value(mid);
    if (fm >= 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

ArgArc trace_arg_arc(UnwrappedArg phi, double sigma_lo, double sigma_hi, double step,
                     const EvalConfig& cfg) {
  if (!(sigma_lo < sigma_hi) || !(step > 0.0)) {
    throw EvalError(ErrorKind::invalid_argument, "trace_arg_arc: bad sigma range or step");
  }
  if (log_chi(Complex(0.5, cfg.t_floor)).imag() < phi.phi) {
    throw EvalError(ErrorKind::bracket_failure,
                    "phi above the admissible range at t_floor");
  }
  ArgArc arc;
  arc.phi = phi;
  arc.sigma_lo = sigma_lo;
  arc.sigma_hi = sigma_hi;
  const int n = std::max(1, int(std::ceil((sigma_hi - sigma_lo) / step)));
  arc.samples.reserve(std::size_t(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double sigma =
        (i == n) ? sigma_hi : sigma_lo + (sigma_hi - sigma_lo) * double(i) / double(n);
    arc.samples.push_back({sigma, solve_arc_height(phi.phi, sigma, cfg)});
  }
  // Refine wherever the height jumps; the arcs are nearly horizontal, so
  // this rarely triggers.
  for (std::size_t i = 0; i + 1 < arc.samples.size();) {
    const ArcSample& a = arc.samples[i];
    const ArcSample& b = arc.samples[i + 1];
    if (std::abs(b.t - a.t) > 0.5 && b.sigma - a.sigma > 1e-6) {
      const double mid = 0.5 * (a.sigma + b.sigma);
      arc.samples.insert(arc.samples.begin() + long(i) + 1,
                         {mid, solve_arc_height(phi.phi, mid, cfg)});
    } else {
      ++i;
    }
  }
  return arc;
}

StripRegion strip_region(int m, Cut cut, double sigma_lo, double sigma_hi, double step,
                         const EvalConfig& cfg) {
  StripRegion strip;
  strip.m = m;
  strip.cut = cut;
  strip.phi_upper = (cut == Cut::positive_real) ? -kTwoPi * m : kPi - kTwoPi * m;
  strip.phi_lower = strip.phi_upper - kTwoPi;
  strip.upper_arc = trace_arg_arc({strip.phi_upper}, sigma_lo, sigma_hi, step, cfg);
  strip.lower_arc = trace_arg_arc({strip.phi_lower}, sigma_lo, sigma_hi, step, cfg);
  return strip;
}

int classify_point(Complex s, Cut cut, const EvalConfig& cfg) {
  const double phi = unwrapped_arg_chi(s, cfg).phi;
  if (cut == Cut::positive_real) {
    const double x = -phi / kTwoPi;  // boundaries at integers
    if (std::abs(phi + kTwoPi * std::round(x)) < 1e-9) {
      throw EvalError(ErrorKind::on_boundary, "point lies on a strip boundary", s);
    }
    return int(std::floor(x));
  }
  const double y = (kPi - phi) / kTwoPi;  // boundaries at integers
  if (std::abs((y - std::round(y)) * kTwoPi) < 1e-9) {
    throw EvalError(ErrorKind::on_boundary, "point lies on a strip boundary", s);
  }
  return int(std::round(-phi / kTwoPi));
}

}  // namespace zetachi
