#include "zetachi/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace zetachi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLogPi = 1.14472988584940017414;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2
constexpr double kEps = 2.220446049250313e-16;

// B_2 .. B_30 as doubles (exact rationals rounded once).
constexpr std::array<double, 16> kBern2k = {
    0.0,  // unused [0]
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

// Stirling series coefficients B_{2n} / ((2n)(2n-1)) for log Gamma.
constexpr std::array<double, 16> kStirling = [] {
  std::array<double, 16> c{};
  for (int n = 1; n <= 15; ++n) c[n] = kBern2k[n] / double((2 * n) * (2 * n - 1));
  return c;
}();

// B_{2n} / (2n) for the digamma series.
constexpr std::array<double, 16> kDigammaC = [] {
  std::array<double, 16> c{};
  for (int n = 1; n <= 15; ++n) c[n] = kBern2k[n] / double(2 * n);
  return c;
}();

// B_{2k} / (2k)! for the Euler-Maclaurin tail.
const std::array<double, 16> kEmCoeff = [] {
  std::array<double, 16> c{};
  long double fact = 1.0L;
  for (int k = 1; k <= 15; ++k) {
    fact *= (2.0L * k - 1.0L) * (2.0L * k);
    c[k] = double((long double)kBern2k[k] / fact);
  }
  return c;
}();

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Stirling expansion, intended for Re(z) >= 12.
Complex log_gamma_stirling(Complex z) {
  const Complex lz = std::log(z);
  Complex sum = (z - 0.5) * lz - z + kHalfLog2Pi;
  const Complex z2 = z * z;
  Complex zp = z;
  for (int n = 1; n <= 15; ++n) {
    const Complex term = kStirling[n] / zp;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
    zp *= z2;
  }
  return sum;
}

Complex digamma_stirling(Complex z) {
  Complex sum = std::log(z) - 0.5 / z;
  const Complex z2 = z * z;
  Complex zp = z2;
  for (int n = 1; n <= 15; ++n) {
    const Complex term = kDigammaC[n] / zp;
    sum -= term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
    zp *= z2;
  }
  return sum;
}

// log n for small n, built once.
double log_int(long n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(4096);
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = std::log(double(i));
    return t;
  }();
  return n < long(table.size()) ? table[std::size_t(n)] : std::log(double(n));
}

struct EmOut {
  Complex f{};
  Complex df{};
  double err = 0.0;
  double abs_accum = 0.0;  // magnitude actually summed, for rounding estimates
};

// Euler-Maclaurin core: zeta and optionally zeta' at s, main sum length N,
// K Bernoulli tail terms. Caller screens s = 1 and picks N, K.
EmOut euler_maclaurin(Complex s, long N, int K, bool want_deriv) {
  EmOut out;
  Complex f = 1.0;  // n = 1
  Complex df = 0.0;
  double acc = 1.0;
  for (long n = 2; n < N; ++n) {
    const double ln = log_int(n);
    const Complex p = std::exp(-s * ln);
    f += p;
    acc += std::abs(p);
    if (want_deriv) df -= ln * p;
  }
  const double lnN = log_int(N);
  const Complex pN = std::exp(-s * lnN);  // N^{-s}
  f += 0.5 * pN;
  if (want_deriv) df -= lnN * 0.5 * pN;

  const Complex sm1 = s - 1.0;
  const Complex tail0 = pN * double(N) / sm1;  // N^{1-s}/(s-1)
  f += tail0;
  acc += std::abs(tail0);
  if (want_deriv) df += tail0 * (-lnN) - tail0 / sm1;

  // Bernoulli tail: T_k = e_k * prod_{j=0}^{2k-2}(s+j) * N^{1-s-2k}.
  Complex poch = s;
  Complex dpoch = 1.0;
  Complex scale = pN * double(N);
  const double N2 = double(N) * double(N);
  for (int k = 1; k <= K; ++k) {
    scale /= N2;
    const Complex T = kEmCoeff[k] * poch * scale;
    f += T;
    acc += std::abs(T);
    if (want_deriv) df += kEmCoeff[k] * scale * (dpoch - poch * lnN);
    const Complex a = s + double(2 * k - 1);
    const Complex b = s + double(2 * k);
    dpoch = dpoch * a * b + poch * (a + b);
    poch *= a * b;
  }
  // Truncation: first omitted term, scaled by the standard growth factor.
  scale /= N2;
  double trunc = std::abs(kEmCoeff[K + 1] * poch * scale);
  const double denom = s.real() + 2.0 * K + 1.0;
  if (denom > 0.0) {
    trunc *= std::max(1.0, std::abs(s + (2.0 * K + 1.0)) / denom);
  } else {
    trunc = std::numeric_limits<double>::infinity();
  }
  out.f = f;
  out.df = df;
  out.abs_accum = acc;
  out.err = trunc + 4.0 * kEps * acc;
  return out;
}

long choose_main_sum_length(Complex s, const EvalConfig& cfg) {
  const double t = std::abs(s.imag());
  long n = long(std::ceil(1.3 * t));
  n = std::max<long>(n, cfg.euler_maclaurin_terms);
  n = std::max<long>(n, 20);
  return std::min<long>(n, 2'000'000);
}

void check_not_pole_of_zeta(Complex s) {
  if (s == Complex(1.0, 0.0)) {
    throw EvalError(ErrorKind::pole_of_zeta, "zeta has a pole at s = 1", s);
  }
}

// sign of Gamma(x) and log|Gamma(x)| for real non-pole x.
std::pair<double, double> real_log_abs_gamma(double x) {
  if (x > 0.0) return {log_gamma(Complex(x, 0.0)).real(), 1.0};
  // reflection: |Gamma(x)| = pi / (|sin(pi x)| |Gamma(1-x)|)
  const double lg = kLogPi - std::log(std::abs(std::sin(kPi * x))) -
                    log_gamma(Complex(1.0 - x, 0.0)).real();
  const int k = int(std::floor(-x)) + 1;  // x in (-k, -k+1)
  return {lg, (k % 2 == 0) ? 1.0 : -1.0};
}

Complex chi_real_axis(double x) {
  if (x > 0.0 && std::fmod(x, 2.0) == 1.0) {
    throw EvalError(ErrorKind::pole_of_chi, "chi has a pole at odd positive integers",
                    Complex(x, 0.0));
  }
  if (x <= 0.0 && std::fmod(x, 2.0) == 0.0) return {0.0, 0.0};
  // chi(s) = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2), same product analytically
  // but free of the 0*inf cancellation at even integers.
  const auto [la, sa] = real_log_abs_gamma((1.0 - x) / 2.0);
  const auto [lb, sb] = real_log_abs_gamma(x / 2.0);
  return {sa * sb * std::exp((x - 0.5) * kLogPi + la - lb), 0.0};
}

}  // namespace

void EvalConfig::validate() const {
  if (euler_maclaurin_terms < 1) {
    throw EvalError(ErrorKind::invalid_argument, "euler_maclaurin_terms must be positive");
  }
  if (bernoulli_order < 1 || bernoulli_order > 14) {
    throw EvalError(ErrorKind::invalid_argument, "bernoulli_order must be in [1, 14]");
  }
  if (!(target_tol >= 1e-14 && target_tol <= 1e-6)) {
    throw EvalError(ErrorKind::invalid_argument, "target_tol must be in [1e-14, 1e-6]");
  }
  if (!(t_floor >= 2.0)) {
    throw EvalError(ErrorKind::invalid_argument, "t_floor must be >= 2");
  }
}

double bernoulli_b2k(int k) {
  if (k < 1 || k > 15) {
    throw EvalError(ErrorKind::invalid_argument, "bernoulli_b2k defined for k in [1, 15]");
  }
  return kBern2k[std::size_t(k)];
}

Complex log_gamma(Complex s) {
  if (is_nonpositive_integer(s)) {
    throw EvalError(ErrorKind::pole_of_gamma, "log_gamma pole at nonpositive integer", s);
  }
  if (s.imag() < 0.0) return std::conj(log_gamma(std::conj(s)));
  Complex shift = 0.0;
  Complex z = s;
  while (z.real() < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return log_gamma_stirling(z) - shift;
}

Complex digamma(Complex s) {
  if (is_nonpositive_integer(s)) {
    throw EvalError(ErrorKind::pole_of_gamma, "digamma pole at nonpositive integer", s);
  }
  if (s.imag() < 0.0) return std::conj(digamma(std::conj(s)));
  Complex shift = 0.0;
  Complex z = s;
  while (z.real() < 12.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  return digamma_stirling(z) - shift;
}

ZetaResult zeta_full(Complex s, const EvalConfig& cfg) {
  cfg.validate();
  check_not_pole_of_zeta(s);
  if (s.real() < -6.0) {
    // Reflect through the functional equation; the direct sum degrades here
    // while 1-s sits comfortably in the summation region.
    const Complex c = chi(s);
    const ZetaResult right = zeta_full(1.0 - s, cfg);
    ZetaResult out;
    out.value = c * right.value;
    out.abs_error_estimate =
        std::abs(c) * right.abs_error_estimate + 1e-11 * std::abs(out.value);
    out.tolerance_met = right.tolerance_met;
    return out;
  }
  const long N = choose_main_sum_length(s, cfg);
  const EmOut em = euler_maclaurin(s, N, cfg.bernoulli_order, false);
  ZetaResult out;
  out.value = em.f;
  out.abs_error_estimate = em.err;
  out.tolerance_met = em.err <= cfg.target_tol * std::max(std::abs(em.f), 0.01);
  return out;
}

Complex zeta(Complex s, const EvalConfig& cfg) { return zeta_full(s, cfg).value; }

std::pair<Complex, Complex> zeta_pair(Complex s, const EvalConfig& cfg) {
  cfg.validate();
  check_not_pole_of_zeta(s);
  if (s.real() < -6.0) {
    const Complex c = chi(s);
    const Complex cld = chi_log_deriv(s);
    const auto [z1, dz1] = zeta_pair(1.0 - s, cfg);
    return {c * z1, c * (cld * z1 - dz1)};
  }
  const long N = choose_main_sum_length(s, cfg);
  const EmOut em = euler_maclaurin(s, N, cfg.bernoulli_order, true);
  return {em.f, em.df};
}

Complex zeta_deriv(Complex s, const EvalConfig& cfg) { return zeta_pair(s, cfg).second; }

Complex zeta_log_deriv(Complex s, const EvalConfig& cfg) {
  const auto [f, df] = zeta_pair(s, cfg);
  if (std::abs(f) < 1e-6) {
    throw EvalError(ErrorKind::near_zero_of_zeta,
                    "zeta too small for a reliable logarithmic derivative", s);
  }
  return df / f;
}

Complex log_chi(Complex s) {
  if (s.imag() == 0.0) {
    throw EvalError(ErrorKind::real_axis, "log_chi requires Im(s) != 0", s);
  }
  if (s.imag() < 0.0) return std::conj(log_chi(std::conj(s)));
  const Complex i(0.0, 1.0);
  // log sin(pi s/2) = -log 2 + i pi/2 - i pi s/2 + log(1 - e^{i pi s}),
  // smooth on the upper half-plane (|e^{i pi s}| = e^{-pi t} < 1).
  const Complex sin_term =
      -kLog2 + i * (kPi / 2.0) - i * (kPi / 2.0) * s + std::log(1.0 - std::exp(i * kPi * s));
  return s * kLog2 + (s - 1.0) * kLogPi + sin_term + log_gamma(1.0 - s);
}

Complex chi_log_deriv(Complex s) {
  if (s.imag() == 0.0) {
    // Gamma-ratio form: chi = pi^{s-1/2} Gamma((1-s)/2) / Gamma(s/2).
    return Complex(kLogPi, 0.0) - 0.5 * digamma((1.0 - s) / 2.0) - 0.5 * digamma(s / 2.0);
  }
  if (s.imag() < 0.0) return std::conj(chi_log_deriv(std::conj(s)));
  const Complex i(0.0, 1.0);
  const Complex w = std::exp(i * kPi * s);
  return kLog2 + kLogPi - i * (kPi / 2.0) - i * kPi * w / (1.0 - w) - digamma(1.0 - s);
}

Complex chi(Complex s) {
  if (s.imag() == 0.0) return chi_real_axis(s.real());
  return std::exp(log_chi(s));
}

double arg_chi_asymptotic(double /*sigma*/, double t) {
  if (!(t > 0.0)) {
    throw EvalError(ErrorKind::invalid_argument, "arg_chi_asymptotic requires t > 0");
  }
  return t - t * std::log(t / (2.0 * kPi)) + kPi / 4.0;
}

double abs_chi_asymptotic(double sigma, double t) {
  if (!(t > 0.0)) {
    throw EvalError(ErrorKind::invalid_argument, "abs_chi_asymptotic requires t > 0");
  }
  const double e = std::exp(-kPi * t);
  const double si = std::sin(kPi * sigma / 2.0);
  const double inner = si * si * e + 0.25 * (1.0 - e) * (1.0 - e);
  return std::sqrt(2.0 * kPi) * std::pow(2.0, sigma) * std::pow(kPi, sigma - 1.0) *
         std::sqrt(inner) * std::pow(t, 0.5 - sigma);
}

}  // namespace zetachi
