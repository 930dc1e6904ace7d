#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "zetachi/contour.hpp"
#include "zetachi/special_functions.hpp"
#include "zetachi/sweeps.hpp"

using namespace zetachi;
using oracles::kPi;

TEST_CASE("log_gamma at classical points") {
  CHECK(std::abs(log_gamma(Complex(1.0, 0.0))) < 1e-14);
  CHECK(std::abs(log_gamma(Complex(0.5, 0.0)) - Complex(0.5 * std::log(kPi), 0.0)) < 1e-14);
  // recurrence consistency off the axis
  const Complex z(0.3, 7.0);
  CHECK(std::abs(log_gamma(z + 1.0) - log_gamma(z) - std::log(z)) < 1e-13);
}

TEST_CASE("log_gamma matches the modulus asymptotics high in the strip") {
  // |Gamma(x+iy)| ~ sqrt(2 pi) |y|^{x-1/2} e^{-pi |y|/2} at x=0.3, y=200,
  // compared in logs; the remainder is O(1/y).
  const double lhs = log_gamma(Complex(0.3, 200.0)).real();
  const double rhs = 0.5 * std::log(2.0 * kPi) + (0.3 - 0.5) * std::log(200.0) -
                     kPi * 100.0;
  CHECK(std::abs(lhs - rhs) < 1e-3);
}

TEST_CASE("log_gamma pole error") {
  CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), EvalError);
  CHECK_THROWS_AS(log_gamma(Complex(-3.0, 0.0)), EvalError);
  try {
    log_gamma(Complex(-2.0, 0.0));
  } catch (const EvalError& e) {
    CHECK(e.kind() == ErrorKind::pole_of_gamma);
  }
}

TEST_CASE("zeta at 2 against direct summation with integral tail") {
  const double oracle = oracles::zeta_two_direct_summation();
  CHECK(oracle == doctest::Approx(1.6449340668482264).epsilon(1e-12));
  CHECK(std::abs(zeta(Complex(2.0, 0.0)) - Complex(oracle, 0.0)) < 1e-12);
}

TEST_CASE("zeta at 0 via two independent term counts") {
  EvalConfig a;
  a.euler_maclaurin_terms = 24;
  EvalConfig b;
  b.euler_maclaurin_terms = 57;
  b.bernoulli_order = 9;
  const Complex va = zeta(Complex(0.0, 0.0), a);
  const Complex vb = zeta(Complex(0.0, 0.0), b);
  CHECK(std::abs(va - vb) < 1e-12);
  CHECK(va.real() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("zeta vanishes at the first critical-line zero ordinate") {
  // ordinate from the rotated-combination bisection oracle
  const double rho = oracles::zero_ordinate_oracle(14.0, 14.2);
  CHECK(rho == doctest::Approx(14.134725141734693).epsilon(1e-10));
  CHECK(std::abs(zeta(Complex(0.5, rho))) < 1e-6);
}

TEST_CASE("zeta pole and precision-loss signalling") {
  CHECK_THROWS_AS(zeta(Complex(1.0, 0.0)), EvalError);
  EvalConfig low;
  low.bernoulli_order = 1;
  low.target_tol = 1e-14;
  CHECK_FALSE(zeta_full(Complex(-5.0, 3.0), low).tolerance_met);
  CHECK(zeta_full(Complex(2.0, 0.0)).tolerance_met);
}

TEST_CASE("zeta_log_deriv against the finite-difference oracle") {
  const Complex fd = oracles::finite_difference_log_deriv(
      [](Complex s) { return zeta(s); }, Complex(2.0, 0.0), 1e-6);
  const Complex ld = zeta_log_deriv(Complex(2.0, 0.0));
  CHECK(std::abs(ld - fd) < 1e-6);
  CHECK(ld.real() == doctest::Approx(-0.56996099309453285).epsilon(1e-9));
}

TEST_CASE("zeta_log_deriv conjugate symmetry") {
  const Complex s(0.3, 42.0);
  CHECK(std::abs(zeta_log_deriv(std::conj(s)) - std::conj(zeta_log_deriv(s))) < 1e-10);
}

TEST_CASE("zeta_log_deriv residue around the pole at s = 1") {
  // 64-gon of radius 0.3 around s = 1: the simple pole contributes -2 pi i.
  ContourPath poly;
  poly.closed = true;
  Segment seg;
  for (int k = 0; k <= 64; ++k) {
    const double a = 2.0 * kPi * k / 64.0;
    seg.nodes.push_back(Complex(1.0 + 0.3 * std::cos(a), 0.3 * std::sin(a)));
  }
  poly.segments.push_back(seg);
  const LogIntegralResult r = integrate_log_deriv(poly, 1e-10);
  CHECK(std::abs(r.value - Complex(0.0, -2.0 * kPi)) < 1e-8);
  CHECK(r.winding == -1);
  CHECK(r.tracked_winding == -1);
}

TEST_CASE("zeta_log_deriv guards near zeros") {
  const double rho = oracles::zero_ordinate_oracle(14.0, 14.2);
  CHECK_THROWS_AS(zeta_log_deriv(Complex(0.5, rho)), EvalError);
}

TEST_CASE("chi at real points") {
  CHECK(chi(Complex(0.5, 0.0)).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(chi(Complex(-2.0, 0.0)) == Complex(0.0, 0.0));
  CHECK(chi(Complex(2.0, 0.0)).real() ==
        doctest::Approx(-2.0 * kPi * kPi).epsilon(1e-12));
  CHECK_THROWS_AS(chi(Complex(3.0, 0.0)), EvalError);
}

TEST_CASE("chi reciprocity and reflection") {
  const Complex s(0.3, 50.0);
  CHECK(std::abs(chi(s) * chi(1.0 - s) - 1.0) < 1e-10);
  CHECK(std::abs(chi(std::conj(s)) - std::conj(chi(s))) < 1e-10);
  CHECK(std::abs(zeta(std::conj(s)) - std::conj(zeta(s))) < 1e-10);
}

TEST_CASE("log_chi critical-line modulus and exp consistency") {
  CHECK(std::abs(log_chi(Complex(0.5, 100.0)).real()) < 1e-10);
  const Complex s(0.3, 60.0);
  CHECK(std::abs(std::exp(log_chi(s)) - chi(s)) < 1e-10 * std::abs(chi(s)));
  CHECK_THROWS_AS(log_chi(Complex(0.3, 0.0)), EvalError);
}

TEST_CASE("log_chi sine term imaginary part") {
  const Complex s(0.4, 30.0);
  const Complex sin_term =
      log_chi(s) - s * std::log(2.0) - (s - 1.0) * std::log(kPi) - log_gamma(1.0 - s);
  CHECK(std::abs(sin_term.imag() - kPi * (1.0 - 0.4) / 2.0) < 1e-12);
}

TEST_CASE("arg_chi_asymptotic closed form") {
  CHECK(arg_chi_asymptotic(0.5, 2.0 * kPi) ==
        doctest::Approx(2.0 * kPi + kPi / 4.0).epsilon(1e-15));
  CHECK(arg_chi_asymptotic(0.1, 77.0) == arg_chi_asymptotic(0.9, 77.0));
  CHECK(arg_chi_asymptotic(0.5, 100.0) > arg_chi_asymptotic(0.5, 101.0));
  CHECK_THROWS_AS(arg_chi_asymptotic(0.5, -1.0), EvalError);
}

TEST_CASE("abs_chi_asymptotic against chi") {
  CHECK(std::abs(abs_chi_asymptotic(0.5, 200.0) - 1.0) < 1e-3);
  CHECK(std::abs(std::abs(chi(Complex(0.2, 300.0))) / abs_chi_asymptotic(0.2, 300.0) -
                 1.0) < 1e-2);
  CHECK(abs_chi_asymptotic(0.3, 100.0) > abs_chi_asymptotic(0.7, 100.0));
}

TEST_CASE("functional equation residual over seeded strip samples") {
  const auto pts = sweeps::seeded_strip_samples(7571, 120, -4.0, 5.0, 10.0, 500.0);
  const auto stat = sweeps::functional_equation_residual(pts);
  CHECK(stat.max_value < 1e-8);
  const auto rec = sweeps::chi_reciprocity_residual(pts);
  CHECK(rec.max_value < 1e-9);
}

TEST_CASE("critical-line modulus of chi stays on the unit circle") {
  const auto stat = sweeps::critical_line_modulus_deviation(10.0, 1000.0, 200);
  CHECK(stat.max_value < 1e-9);
}

TEST_CASE("modulus of chi strictly decreasing in sigma") {
  for (const double t : {50.0, 100.0, 500.0}) {
    CHECK(sweeps::modulus_sigma_monotonicity(t, -3.0, 4.0, 0.1) == -1);
  }
}

TEST_CASE("exp(log_chi) equals chi wherever both are defined") {
  const auto pts = sweeps::seeded_strip_samples(1823, 60, -4.0, 5.0, 2.0, 900.0);
  CHECK(sweeps::exp_log_chi_consistency(pts).max_value < 1e-10);
}

TEST_CASE("config validation") {
  EvalConfig cfg;
  cfg.bernoulli_order = 15;
  CHECK_THROWS_AS(cfg.validate(), EvalError);
  cfg = EvalConfig{};
  cfg.target_tol = 1e-3;
  CHECK_THROWS_AS(cfg.validate(), EvalError);
  cfg = EvalConfig{};
  cfg.t_floor = 1.0;
  CHECK_THROWS_AS(cfg.validate(), EvalError);
  CHECK_NOTHROW(EvalConfig{}.validate());
}
