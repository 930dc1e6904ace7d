#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zetachi/arg_tracker.hpp"
#include "zetachi/chi_geometry.hpp"
#include "zetachi/sweeps.hpp"

using namespace zetachi;
using oracles::kPi;

namespace {
const auto chi_fn = [](Complex s) { return chi(s); };
}

TEST_CASE("unwrapped argument pins to the closed form") {
  const double u = unwrapped_arg_chi(Complex(0.5, 200.0)).phi;
  CHECK(std::abs(u - arg_chi_asymptotic(0.5, 200.0)) < 1.0 / (8.0 * 200.0));
}

TEST_CASE("unwrapped argument agrees with the log-gamma oracle route") {
  for (const double t : {15.0, 50.0, 333.3, 1000.0}) {
    CHECK(std::abs(unwrapped_arg_chi(Complex(0.5, t)).phi -
                   oracles::critical_line_arg_oracle(t)) < 1e-10);
  }
}

TEST_CASE("unwrapped argument reflection across the critical line") {
  const double a = unwrapped_arg_chi(Complex(0.3, 100.0)).phi;
  const double b = unwrapped_arg_chi(Complex(0.7, 100.0)).phi;
  CHECK(std::abs(a - b) < 1e-8);
}

TEST_CASE("unwrapped argument decreases with t") {
  CHECK(unwrapped_arg_chi(Complex(0.5, 100.0)).phi >
        unwrapped_arg_chi(Complex(0.5, 110.0)).phi);
  CHECK(sweeps::arg_t_monotonicity(20.0, 120.0, 0.05) == -1);
}

TEST_CASE("unwrapped argument floor") {
  CHECK_THROWS_AS(unwrapped_arg_chi(Complex(0.5, 5.0)), EvalError);
}

TEST_CASE("no winding loss against the continuation oracle") {
  // The direct branch must match step-summed principal-argument increments
  // along arbitrary paths (the continuation route has no access to the
  // global branch).
  const struct {
    Complex a, b;
  } paths[] = {
      {Complex(0.5, 50.0), Complex(0.5, 180.0)},
      {Complex(-1.0, 77.0), Complex(2.0, 77.0)},
      {Complex(-0.5, 40.0), Complex(1.8, 260.0)},
  };
  for (const auto& p : paths) {
    const double tracked = track_arg_change(chi_fn, p.a, p.b);
    const double direct = unwrapped_arg_chi(p.b).phi - unwrapped_arg_chi(p.a).phi;
    CHECK(std::abs(tracked - direct) < 1e-8);
  }
}

TEST_CASE("asymptotic envelope") {
  // Exact on sigma in [0, 1]: the sigma drift (sigma-1/2)^2/(2t) plus the
  // 1/(24t) closed-form defect stays below 1/(8t).
  const double sig01[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  CHECK(sweeps::scaled_arg_asymptotic_deviation(sig01, 50.0, 1000.0, 120).max_value < 1.0);
  // On the wider strip the drift is quadratic in (sigma-1/2); check against
  // that envelope instead.
  for (const double sigma : {-1.0, 2.0}) {
    for (const double t : {50.0, 200.0, 800.0}) {
      const double diff =
          std::abs(unwrapped_arg_chi(Complex(sigma, t)).phi - arg_chi_asymptotic(sigma, t));
      const double bound = ((sigma - 0.5) * (sigma - 0.5) / 2.0 + 1.0 / 24.0) / t;
      CHECK(diff < 1.15 * bound);
    }
  }
}

TEST_CASE("arc through a division point") {
  const double g7 = oracles::division_point_oracle(7, 0.5);
  const ArgArc arc = trace_arg_arc({-2.0 * kPi * 7}, -1.0, 2.0, 0.05);
  CHECK(std::abs(arc.height_at(0.5) - g7) < 1e-9);
  // arc samples keep the argument constant
  for (const ArcSample& s : arc.samples) {
    CHECK(std::abs(unwrapped_arg_chi(Complex(s.sigma, s.t)).phi + 2.0 * kPi * 7) < 1e-9);
  }
  // strictly ordered in sigma
  for (std::size_t i = 0; i + 1 < arc.samples.size(); ++i) {
    CHECK(arc.samples[i].sigma < arc.samples[i + 1].sigma);
  }
}

TEST_CASE("arc symmetry under s -> 1 - conj(s)") {
  const double phi = unwrapped_arg_chi(Complex(0.5, 91.3)).phi;
  const ArgArc arc = trace_arg_arc({phi}, -1.0, 2.0, 0.05);
  for (const ArcSample& s : arc.samples) {
    CHECK(std::abs(arc.height_at(1.0 - s.sigma) - s.t) < 1e-8);
  }
}

TEST_CASE("arcs at different phi do not intersect") {
  const double phi = unwrapped_arg_chi(Complex(0.5, 120.0)).phi;
  const ArgArc a = trace_arg_arc({phi}, -1.0, 2.0, 0.05);
  const ArgArc b = trace_arg_arc({phi - 0.1}, -1.0, 2.0, 0.05);
  double min_gap = 1e300;
  for (const ArcSample& s : a.samples) {
    min_gap = std::min(min_gap, b.height_at(s.sigma) - s.t);
  }
  CHECK(min_gap > 0.0);
}

TEST_CASE("arc above the admissible range fails to bracket") {
  CHECK_THROWS_AS(trace_arg_arc({100.0}, -1.0, 2.0, 0.1), EvalError);
}

TEST_CASE("strips share boundary arcs and contain their division point") {
  const StripRegion s40 = strip_region(40, Cut::positive_real, -1.0, 2.0, 0.1);
  const StripRegion s39 = strip_region(39, Cut::positive_real, -1.0, 2.0, 0.1);
  REQUIRE(s40.upper_arc.samples.size() == s39.lower_arc.samples.size());
  for (std::size_t i = 0; i < s40.upper_arc.samples.size(); ++i) {
    CHECK(std::abs(s40.upper_arc.samples[i].t - s39.lower_arc.samples[i].t) < 1e-9);
  }
  const double g40 = oracles::division_point_oracle(40, 0.5);
  CHECK(std::abs(s40.upper_arc.height_at(0.5) - g40) < 1e-9);
}

TEST_CASE("strip width follows the argument decay rate") {
  const StripRegion s = strip_region(100, Cut::positive_real, -1.0, 2.0, 0.5);
  const double lo = s.upper_arc.height_at(0.5);
  const double hi = s.lower_arc.height_at(0.5);
  const double predicted = 2.0 * kPi / std::log(0.5 * (lo + hi) / (2.0 * kPi));
  CHECK(std::abs((hi - lo) / predicted - 1.0) < 0.05);
}

TEST_CASE("classification of interior, reflected, and boundary points") {
  const double g25 = oracles::division_point_oracle(25, 0.5);
  // interior of strip 25 along the arc midway through it
  const Complex inside(0.5, g25 + 0.3);
  const int m = classify_point(inside, Cut::positive_real);
  CHECK(m == 25);
  CHECK(classify_point(Complex(1.0, 0.0) - std::conj(inside), Cut::positive_real) == m);
  CHECK_THROWS_AS(classify_point(Complex(0.5, g25), Cut::positive_real), EvalError);
  try {
    classify_point(Complex(0.5, g25), Cut::positive_real);
  } catch (const EvalError& e) {
    CHECK(e.kind() == ErrorKind::on_boundary);
  }
  // the same height is interior for the negative-real cut
  CHECK(classify_point(Complex(0.5, g25), Cut::negative_real) == 25);
}
