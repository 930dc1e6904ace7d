#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "zetachi/arg_tracker.hpp"
#include "zetachi/contour.hpp"

using namespace zetachi;
using oracles::kPi;

namespace {

ContourPath reversed(const ContourPath& path) {
  ContourPath out;
  out.closed = path.closed;
  for (auto seg = path.segments.rbegin(); seg != path.segments.rend(); ++seg) {
    Segment r;
    r.nodes.assign(seg->nodes.rbegin(), seg->nodes.rend());
    out.segments.push_back(std::move(r));
  }
  return out;
}

// Unwrapped chi argument change along the right half of a strip contour,
// walked from the top critical-line crossing through sigma > 1/2 down to the
// bottom crossing (segment layout: bottom arc, right closure, top arc
// reversed, left closure). Every chain node is checked to stay on the sheet;
// the per-step increments then telescope without winding ambiguity.
double right_half_arg_sweep(const ContourPath& path) {
  std::vector<Complex> chain;
  // top crossing -> right end along the top arc (stored sigma-descending)
  const auto& top = path.segments[2].nodes;
  for (auto it = top.rbegin(); it != top.rend(); ++it) {
    if (it->real() >= 0.5) chain.push_back(*it);
  }
  // down the right closure, sampled finely enough to watch the full turn
  const Complex closure_top = path.segments[1].nodes.back();
  const Complex closure_bottom = path.segments[1].nodes.front();
  for (int k = 1; k <= 64; ++k) {
    chain.push_back(closure_top + (closure_bottom - closure_top) * (double(k) / 64.0));
  }
  // right end -> bottom crossing along the bottom arc
  const auto& bottom = path.segments[0].nodes;
  for (auto it = bottom.rbegin(); it != bottom.rend(); ++it) {
    if (it->real() >= 0.5) chain.push_back(*it);
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const double step =
        unwrapped_arg_chi(chain[i + 1]).phi - unwrapped_arg_chi(chain[i]).phi;
    CHECK(std::abs(step) < kPi);  // no winding hides between samples
    total += step;
  }
  return total;
}

}  // namespace

TEST_CASE("type-one contour geometry") {
  SimpleDomainSpec spec;
  spec.kind = ContourKind::type_one;
  spec.m = 40;
  spec.epsilon = 1e-3;
  const ContourPath path = build_type_one(spec);
  path.validate();

  const double t40 = solve_arc_height(-2.0 * kPi * 40, 0.5);
  const double t41 = solve_arc_height(-2.0 * kPi * 41, 0.5);

  // meets the critical line exactly twice, at the inset heights
  int crossings = 0;
  for (const Segment& seg : path.segments) {
    for (const Complex& p : seg.nodes) {
      if (p.real() == 0.5) {
        ++crossings;
        const bool at_bottom = std::abs(p.imag() - (t40 + spec.epsilon)) < 1e-12;
        const bool at_top = std::abs(p.imag() - (t41 - spec.epsilon)) < 1e-12;
        CHECK((at_bottom || at_top));
      }
    }
  }
  CHECK(crossings == 2);

  // symmetric under s -> 1 - conj(s): reflected node set matches the path
  const auto height_on = [](const Segment& seg, double sigma) {
    double best = 1e300, h = 0.0;
    for (const Complex& p : seg.nodes) {
      if (std::abs(p.real() - sigma) < best) {
        best = std::abs(p.real() - sigma);
        h = p.imag();
      }
    }
    return h;
  };
  for (const Complex& p : path.segments[0].nodes) {
    CHECK(std::abs(height_on(path.segments[0], 1.0 - p.real()) - p.imag()) < 1e-8);
  }
}

TEST_CASE("type-one right half sweeps one full turn of chi") {
  SimpleDomainSpec spec;
  spec.kind = ContourKind::type_one;
  spec.m = 40;
  spec.epsilon = 1e-2;
  const ContourPath path = build_type_one(spec);
  const double sweep = right_half_arg_sweep(path);
  CHECK(sweep > 2.0 * kPi - 0.2);
  CHECK(sweep < 2.0 * kPi);
  // every node stays on the sheet: unwrapped argument within the open strip
  for (const Segment& seg : path.segments) {
    for (const Complex& p : seg.nodes) {
      const double phi = unwrapped_arg_chi(p).phi;
      CHECK(phi < -2.0 * kPi * 40);
      CHECK(phi > -2.0 * kPi * 41);
    }
  }
}

TEST_CASE("type-two contour straddles its division point off the cut") {
  SimpleDomainSpec spec;
  spec.kind = ContourKind::type_two;
  spec.m = 40;
  spec.epsilon = 1e-3;
  const ContourPath path = build_type_two(spec);
  const double t40 = solve_arc_height(-2.0 * kPi * 40, 0.5);
  const double t39 = solve_arc_height(-2.0 * kPi * 39, 0.5);
  const double t41 = solve_arc_height(-2.0 * kPi * 41, 0.5);

  // the contour brackets its division height on the critical line, and the
  // whole path keeps the neighbouring division arcs outside
  const auto at_half = [](const Segment& seg) {
    for (const Complex& p : seg.nodes) {
      if (p.real() == 0.5) return p.imag();
    }
    REQUIRE(false);
    return 0.0;
  };
  const double bottom = at_half(path.segments[0]);
  const double top = at_half(path.segments[2]);
  CHECK(bottom == doctest::Approx(t40 - spec.epsilon).epsilon(1e-12));
  CHECK(top == doctest::Approx(t40 + spec.epsilon).epsilon(1e-12));
  for (const Segment& seg : path.segments) {
    for (const Complex& p : seg.nodes) {
      CHECK(p.imag() > t39);
      CHECK(p.imag() < t41);
    }
  }

  // the chi image never approaches the negative-real cut: its argument
  // stays within (pi - 2 pi m, -pi - 2 pi m) with a wide margin
  double min_distance = 1e300;
  for (const Segment& seg : path.segments) {
    for (const Complex& p : seg.nodes) {
      const double phi = unwrapped_arg_chi(p).phi;
      const double to_cut = std::min(std::abs(phi - (kPi - 2.0 * kPi * 40)),
                                     std::abs(phi - (-kPi - 2.0 * kPi * 40)));
      min_distance = std::min(min_distance, to_cut);
    }
  }
  CHECK(min_distance > 1.0);

  // epsilon shrink nests strictly inside, sample by sample
  SimpleDomainSpec half = spec;
  half.epsilon = 5e-4;
  const ContourPath inner = build_type_two(half);
  REQUIRE(inner.segments[0].nodes.size() == path.segments[0].nodes.size());
  for (std::size_t k = 0; k < inner.segments[0].nodes.size(); ++k) {
    CHECK(inner.segments[0].nodes[k].imag() > path.segments[0].nodes[k].imag());
    CHECK(inner.segments[2].nodes[k].imag() < path.segments[2].nodes[k].imag());
  }
}

TEST_CASE("rectangle windings against the sign-change oracle") {
  CHECK(oracles::sign_change_count_oracle(10.0, 20.0, 0.05) == 1);
  CHECK(rectangle_winding(-1.0, 2.0, 10.0, 20.0) == 1);
  CHECK(oracles::sign_change_count_oracle(20.0, 25.0, 0.05) == 1);
  CHECK(rectangle_winding(-1.0, 2.0, 20.0, 25.0) == 1);
  CHECK(oracles::sign_change_count_oracle(15.0, 20.0, 0.05) == 0);
  CHECK(rectangle_winding(-1.0, 2.0, 15.0, 20.0) == 0);
}

TEST_CASE("closed contour around a zero-free region integrates to zero") {
  const ContourPath rect = rectangle_contour(2.0, 3.0, 5.0, 8.0);
  const LogIntegralResult r = integrate_log_deriv(rect, 1e-9);
  CHECK(std::abs(r.value) < 1e-9);
  CHECK(r.winding == 0);
  CHECK(r.reliable);
}

TEST_CASE("type-one integral is one full residue") {
  SimpleDomainSpec spec;
  spec.kind = ContourKind::type_one;
  spec.m = 40;
  spec.epsilon = 1e-3;
  const LogIntegralResult r = integrate_log_deriv(build_type_one(spec), 1e-8);
  CHECK(r.winding == 1);
  CHECK(r.tracked_winding == 1);
  CHECK(r.reliable);
  CHECK(std::abs(r.value.imag() - 2.0 * kPi) < 1e-6);
  CHECK(std::abs(r.value.real()) < 1e-6);
}

TEST_CASE("type-two integral vanishes") {
  SimpleDomainSpec spec;
  spec.kind = ContourKind::type_two;
  spec.m = 40;
  spec.epsilon = 1e-3;
  const LogIntegralResult r = integrate_log_deriv(build_type_two(spec), 1e-8);
  CHECK(r.winding == 0);
  CHECK(r.tracked_winding == 0);
  CHECK(r.reliable);
  CHECK(std::abs(r.value) < 1e-6);
}

TEST_CASE("rectangle blend shape agrees with the arc-hugging integral") {
  SimpleDomainSpec spec;
  spec.kind = ContourKind::type_one;
  spec.m = 40;
  spec.epsilon = 1e-2;
  spec.shape = ContourShape::rectangle_blend;
  const LogIntegralResult r = integrate_log_deriv(build_type_one(spec), 1e-8);
  CHECK(r.winding == 1);
  CHECK(std::abs(r.value.imag() - 2.0 * kPi) < 1e-6);
}

TEST_CASE("orientation reversal negates the integral") {
  const ContourPath rect = rectangle_contour(-1.0, 2.0, 10.0, 20.0);
  const LogIntegralResult fwd = integrate_log_deriv(rect, 1e-9);
  const LogIntegralResult bwd = integrate_log_deriv(reversed(rect), 1e-9);
  CHECK(std::abs(fwd.value + bwd.value) < 1e-8);
  CHECK(bwd.winding == -fwd.winding);
}

TEST_CASE("winding is additive over stacked rectangles") {
  const int whole = rectangle_winding(-1.0, 2.0, 10.0, 30.0);
  const int lower = rectangle_winding(-1.0, 2.0, 10.0, 20.0);
  const int upper = rectangle_winding(-1.0, 2.0, 20.0, 30.0);
  CHECK(whole == lower + upper);
}

TEST_CASE("guard rejects contours passing near a zero") {
  const double rho = oracles::zero_ordinate_oracle(14.0, 14.2);
  CHECK_THROWS_AS(rectangle_contour(-1.0, 2.0, rho - 5e-5, 15.0), EvalError);
  try {
    rectangle_contour(-1.0, 2.0, rho - 5e-5, 15.0);
  } catch (const EvalError& e) {
    CHECK(e.kind() == ErrorKind::guard_violation);
    CHECK(e.has_where());
  }
}

TEST_CASE("contour and spec validation") {
  ContourPath bad;
  bad.segments.push_back(Segment{{Complex(0, 10), Complex(1, 10)}});
  bad.segments.push_back(Segment{{Complex(2, 10), Complex(2, 11)}});
  CHECK_THROWS_AS(bad.validate(), EvalError);

  SimpleDomainSpec spec;
  spec.kind = ContourKind::type_one;
  spec.m = 40;
  spec.sigma_lo = -1.0;
  spec.sigma_hi = 1.5;  // not symmetric
  CHECK_THROWS_AS(build_type_one(spec), EvalError);
  spec.sigma_hi = 2.0;
  spec.epsilon = 10.0;  // taller than the interval
  CHECK_THROWS_AS(build_type_one(spec), EvalError);
}
