#include "zetachi/contour.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "zetachi/arg_tracker.hpp"
#include "zetachi/parallel.hpp"
#include "zetachi/quadrature.hpp"

namespace zetachi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

Segment line(Complex a, Complex b) { return Segment{{a, b}}; }

Segment arc_to_segment(const ArgArc& arc, bool reversed) {
  Segment seg;
  seg.nodes.reserve(arc.samples.size());
  if (reversed) {
    for (auto it = arc.samples.rbegin(); it != arc.samples.rend(); ++it) {
      seg.nodes.emplace_back(it->sigma, it->t);
    }
  } else {
    for (const ArcSample& s : arc.samples) seg.nodes.emplace_back(s.sigma, s.t);
  }
  return seg;
}

// Pins a node at sigma exactly to the given height (replacing a coincident
// sample or inserting one), so contours meet the critical line on the nose.
void pin_node(ArgArc& arc, double sigma, double t) {
  auto it = std::lower_bound(arc.samples.begin(), arc.samples.end(), sigma,
                             [](const ArcSample& a, double x) { return a.sigma < x; });
  if (it != arc.samples.end() && std::abs(it->sigma - sigma) < 1e-9) {
    *it = {sigma, t};
  } else {
    arc.samples.insert(it, {sigma, t});
  }
}

// The integral claims assume zeta does not vanish at the division heights
// themselves; check explicitly and report instead of assuming.
void check_division_point(double t, const EvalConfig& cfg) {
  const Complex s(0.5, t);
  if (std::abs(zeta(s, cfg)) < 1e-4) {
    throw EvalError(ErrorKind::guard_violation,
                    "zeta nearly vanishes at a division height; perturb epsilon or m", s);
  }
}

struct SubLine {
  Complex a;
  Complex b;
  double budget;
};

std::vector<SubLine> sublines_of(const ContourPath& path, double tol) {
  std::vector<SubLine> lines;
  const double seg_budget = tol / double(std::max<std::size_t>(path.segments.size(), 1));
  for (const Segment& seg : path.segments) {
    const std::size_t pieces = seg.nodes.size() - 1;
    for (std::size_t i = 0; i + 1 < seg.nodes.size(); ++i) {
      lines.push_back({seg.nodes[i], seg.nodes[i + 1], seg_budget / double(pieces)});
    }
  }
  return lines;
}

}  // namespace

void ContourPath::validate() const {
  if (segments.empty()) {
    throw EvalError(ErrorKind::invalid_argument, "contour has no segments");
  }
  for (const Segment& seg : segments) {
    if (seg.nodes.size() < 2) {
      throw EvalError(ErrorKind::invalid_argument, "contour segment has fewer than 2 nodes");
    }
  }
  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    if (std::abs(segments[i].nodes.back() - segments[i + 1].nodes.front()) > 1e-12) {
      throw EvalError(ErrorKind::invalid_argument, "contour segments do not join");
    }
  }
  if (closed &&
      std::abs(segments.back().nodes.back() - segments.front().nodes.front()) > 1e-12) {
    throw EvalError(ErrorKind::invalid_argument, "closed contour does not return to start");
  }
}

std::vector<Complex> ContourPath::flatten() const {
  std::vector<Complex> nodes;
  for (const Segment& seg : segments) {
    for (const Complex& p : seg.nodes) {
      if (!nodes.empty() && std::abs(nodes.back() - p) < 1e-15) continue;
      nodes.push_back(p);
    }
  }
  return nodes;
}

void SimpleDomainSpec::validate(const EvalConfig& cfg) const {
  cfg.validate();
  if (!(epsilon > 0.0)) {
    throw EvalError(ErrorKind::invalid_argument, "epsilon must be positive");
  }
  if (!(sigma_lo < 0.5 && 0.5 < sigma_hi)) {
    throw EvalError(ErrorKind::invalid_argument, "sigma extent must straddle 1/2");
  }
  if (std::abs(sigma_hi - (1.0 - sigma_lo)) > 1e-12) {
    throw EvalError(ErrorKind::invalid_argument,
                    "sigma extent must be symmetric: sigma_hi = 1 - sigma_lo");
  }
}

double guard_scan(const ContourPath& path, double guard_radius, const EvalConfig& cfg) {
  path.validate();
  double min_abs = std::numeric_limits<double>::infinity();
  Complex argmin;
  for (const Segment& seg : path.segments) {
    // 512 samples spread over the segment, at least one per polyline piece.
    double length = 0.0;
    for (std::size_t i = 0; i + 1 < seg.nodes.size(); ++i) {
      length += std::abs(seg.nodes[i + 1] - seg.nodes[i]);
    }
    if (length == 0.0) continue;
    for (std::size_t i = 0; i + 1 < seg.nodes.size(); ++i) {
      const Complex a = seg.nodes[i];
      const Complex b = seg.nodes[i + 1];
      const double piece = std::abs(b - a);
      const int n = std::max(1, int(std::lround(512.0 * piece / length)));
      for (int j = 0; j <= n; ++j) {
        const Complex s = a + (b - a) * (double(j) / double(n));
        if (std::abs(s - Complex(1.0, 0.0)) < guard_radius) {
          throw EvalError(ErrorKind::guard_violation,
                          "contour passes within the guard radius of s = 1", s);
        }
        const double az = std::abs(zeta(s, cfg));
        if (az < min_abs) {
          min_abs = az;
          argmin = s;
        }
      }
    }
  }
  if (min_abs < guard_radius) {
    throw EvalError(ErrorKind::guard_violation,
                    "|zeta| below the guard radius on the contour boundary", argmin);
  }
  return min_abs;
}

ContourPath build_type_one(const SimpleDomainSpec& spec, const EvalConfig& cfg) {
  spec.validate(cfg);
  if (spec.kind != ContourKind::type_one) {
    throw EvalError(ErrorKind::invalid_argument, "spec.kind must be type_one");
  }
  const double t_lo = solve_arc_height(-kTwoPi * spec.m, 0.5, cfg);
  const double t_hi = solve_arc_height(-kTwoPi * (spec.m + 1), 0.5, cfg);
  check_division_point(t_lo, cfg);
  check_division_point(t_hi, cfg);
  if (!(spec.epsilon < 0.5 * (t_hi - t_lo))) {
    throw EvalError(ErrorKind::invalid_argument,
                    "epsilon must be below half the interval height");
  }
  const double bottom_t = t_lo + spec.epsilon;
  const double top_t = t_hi - spec.epsilon;

  ContourPath path;
  path.closed = true;
  if (spec.shape == ContourShape::arc_hugging) {
    const double phi_bottom = unwrapped_arg_chi(Complex(0.5, bottom_t), cfg).phi;
    const double phi_top = unwrapped_arg_chi(Complex(0.5, top_t), cfg).phi;
    ArgArc bottom = trace_arg_arc({phi_bottom}, spec.sigma_lo, spec.sigma_hi, 0.05, cfg);
    ArgArc top = trace_arg_arc({phi_top}, spec.sigma_lo, spec.sigma_hi, 0.05, cfg);
    pin_node(bottom, 0.5, bottom_t);
    pin_node(top, 0.5, top_t);
    path.segments.push_back(arc_to_segment(bottom, false));
    path.segments.push_back(line(Complex(spec.sigma_hi, bottom.samples.back().t),
                                 Complex(spec.sigma_hi, top.samples.back().t)));
    path.segments.push_back(arc_to_segment(top, true));
    path.segments.push_back(line(Complex(spec.sigma_lo, top.samples.front().t),
                                 Complex(spec.sigma_lo, bottom.samples.front().t)));
  } else {
    const Complex bl(spec.sigma_lo, bottom_t), br(spec.sigma_hi, bottom_t);
    const Complex tr(spec.sigma_hi, top_t), tl(spec.sigma_lo, top_t);
    path.segments = {line(bl, br), line(br, tr), line(tr, tl), line(tl, bl)};
  }
  guard_scan(path, 1e-4, cfg);
  return path;
}

ContourPath build_type_two(const SimpleDomainSpec& spec, const EvalConfig& cfg) {
  spec.validate(cfg);
  if (spec.kind != ContourKind::type_two) {
    throw EvalError(ErrorKind::invalid_argument, "spec.kind must be type_two");
  }
  const double t_mid = solve_arc_height(-kTwoPi * spec.m, 0.5, cfg);
  const double t_next = solve_arc_height(-kTwoPi * (spec.m + 1), 0.5, cfg);
  check_division_point(t_mid, cfg);
  if (!(spec.epsilon < 0.5 * (t_next - t_mid))) {
    throw EvalError(ErrorKind::invalid_argument,
                    "epsilon must be below half the interval height");
  }
  const double bottom_t = t_mid - spec.epsilon;
  const double top_t = t_mid + spec.epsilon;

  ContourPath path;
  path.closed = true;
  if (spec.shape == ContourShape::arc_hugging) {
    const double phi_bottom = unwrapped_arg_chi(Complex(0.5, bottom_t), cfg).phi;
    const double phi_top = unwrapped_arg_chi(Complex(0.5, top_t), cfg).phi;
    ArgArc bottom = trace_arg_arc({phi_bottom}, spec.sigma_lo, spec.sigma_hi, 0.05, cfg);
    ArgArc top = trace_arg_arc({phi_top}, spec.sigma_lo, spec.sigma_hi, 0.05, cfg);
    pin_node(bottom, 0.5, bottom_t);
    pin_node(top, 0.5, top_t);
    path.segments.push_back(arc_to_segment(bottom, false));
    path.segments.push_back(line(Complex(spec.sigma_hi, bottom.samples.back().t),
                                 Complex(spec.sigma_hi, top.samples.back().t)));
    path.segments.push_back(arc_to_segment(top, true));
    path.segments.push_back(line(Complex(spec.sigma_lo, top.samples.front().t),
                                 Complex(spec.sigma_lo, bottom.samples.front().t)));
  } else {
    const Complex bl(spec.sigma_lo, bottom_t), br(spec.sigma_hi, bottom_t);
    const Complex tr(spec.sigma_hi, top_t), tl(spec.sigma_lo, top_t);
    path.segments = {line(bl, br), line(br, tr), line(tr, tl), line(tl, bl)};
  }
  guard_scan(path, 1e-4, cfg);
  return path;
}

ContourPath rectangle_contour(double sigma1, double sigma2, double t1, double t2,
                              const EvalConfig& cfg) {
  if (!(sigma1 < sigma2) || !(t1 < t2)) {
    throw EvalError(ErrorKind::invalid_argument, "rectangle corners out of order");
  }
  if (t1 <= 0.0) {
    throw EvalError(ErrorKind::invalid_argument,
                    "rectangle must stay in the upper half-plane");
  }
  ContourPath path;
  path.closed = true;
  const Complex bl(sigma1, t1), br(sigma2, t1), tr(sigma2, t2), tl(sigma1, t2);
  path.segments = {line(bl, br), line(br, tr), line(tr, tl), line(tl, bl)};
  guard_scan(path, 1e-4, cfg);
  return path;
}

LogIntegralResult integrate_log_deriv(const ContourPath& path, double tol,
                                      const EvalConfig& cfg) {
  path.validate();
  if (!(tol > 0.0)) {
    throw EvalError(ErrorKind::invalid_argument, "tolerance must be positive");
  }
  const auto integrand = [&cfg](Complex s) { return zeta_log_deriv(s, cfg); };

  const std::vector<SubLine> lines = sublines_of(path, tol);
  std::vector<Complex> values(lines.size());
  std::vector<double> errors(lines.size());
  std::vector<std::exception_ptr> failures(lines.size());
  for_each_index(lines.size(), Exec::parallel, [&](std::size_t i) {
    try {
      const QuadResult r = integrate_segment(integrand, lines[i].a, lines[i].b,
                                             lines[i].budget);
      values[i] = r.value;
      errors[i] = r.error_estimate;
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  LogIntegralResult out;
  out.value = pairwise_sum(values);
  out.quadrature_error_estimate = pairwise_sum(errors);

  // Independent winding: continuous argument of zeta along the node chain.
  const auto zeta_here = [&cfg](Complex s) { return zeta(s, cfg); };
  const std::vector<Complex> nodes = path.flatten();
  double total_arg = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    total_arg += track_arg_change(zeta_here, nodes[i], nodes[i + 1]);
  }
  out.tracked_winding = int(std::lround(total_arg / kTwoPi));

  const double w = out.value.imag() / kTwoPi;
  out.winding = int(std::lround(w));
  out.winding_residual = std::abs(w - double(out.winding));
  out.reliable = out.winding_residual < 0.25 &&
                 (!path.closed || out.tracked_winding == out.winding);
  return out;
}

int rectangle_winding(double sigma1, double sigma2, double t1, double t2,
                      const EvalConfig& cfg) {
  const ContourPath rect = rectangle_contour(sigma1, sigma2, t1, t2, cfg);
  const LogIntegralResult r = integrate_log_deriv(rect, 1e-6, cfg);
  if (!r.reliable) {
    throw EvalError(ErrorKind::unreliable_integral,
                    "rectangle winding failed the dual extraction check");
  }
  return r.winding;
}

}  // namespace zetachi
