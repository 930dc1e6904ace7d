// Command-line surface: evaluation, arc tracing, branch inversion, contour
// integrals, zero location, the interval census, and the zero-distribution
// plot data. Reports are deterministic: fixed key order, 17-significant-digit
// numbers, and no wall-clock content unless --timings is given.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetachi/chi_geometry.hpp"
#include "zetachi/contour.hpp"
#include "zetachi/report.hpp"
#include "zetachi/special_functions.hpp"
#include "zetachi/sweeps.hpp"
#include "zetachi/tau_inverse.hpp"
#include "zetachi/zero_census.hpp"

namespace {

using namespace zetachi;
using report::CsvWriter;
using report::format_number;
using report::JsonWriter;

constexpr double kTwoPi = 6.283185307179586476925;

// Exit codes: 0 success, 1 validation/usage, 2 numerical failure,
// 3 internal mismatch (winding vs census), 4 findings present.
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitFindings = 4;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument:
    case ErrorKind::below_t_floor:
      return kExitValidation;
    case ErrorKind::count_mismatch:
    case ErrorKind::unreliable_integral:
      return kExitMismatch;
    default:
      return kExitNumerical;
  }
}

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::pole_of_gamma: return "pole_of_gamma";
    case ErrorKind::pole_of_zeta: return "pole_of_zeta";
    case ErrorKind::pole_of_chi: return "pole_of_chi";
    case ErrorKind::real_axis: return "real_axis";
    case ErrorKind::below_t_floor: return "below_t_floor";
    case ErrorKind::precision_loss: return "precision_loss";
    case ErrorKind::near_zero_of_zeta: return "near_zero_of_zeta";
    case ErrorKind::bracket_failure: return "bracket_failure";
    case ErrorKind::on_cut: return "on_cut";
    case ErrorKind::on_boundary: return "on_boundary";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::guard_violation: return "guard_violation";
    case ErrorKind::count_mismatch: return "count_mismatch";
    case ErrorKind::unreliable_integral: return "unreliable_integral";
  }
  return "unknown";
}

// "a+bi" (also "a", "bi", "a-bi", exponents allowed).
Complex parse_complex(const std::string& text) {
  const std::string err = "cannot parse complex value '" + text + "'";
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw EvalError(ErrorKind::invalid_argument, err);
  const bool has_i = s.back() == 'i' || s.back() == 'I';
  if (!has_i) {
    std::size_t pos = 0;
    double re = 0.0;
    try {
      re = std::stod(s, &pos);
    } catch (...) {
      throw EvalError(ErrorKind::invalid_argument, err);
    }
    if (pos != s.size()) throw EvalError(ErrorKind::invalid_argument, err);
    return {re, 0.0};
  }
  s.pop_back();
  // Split at the sign separating real and imaginary parts (not an exponent
  // sign and not the leading sign).
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  try {
    if (split == std::string::npos) {
      if (s.empty() || s == "+") return {0.0, 1.0};
      if (s == "-") return {0.0, -1.0};
      std::size_t pos = 0;
      const double im = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(err);
      return {0.0, im};
    }
    std::size_t pos = 0;
    const double re = std::stod(s.substr(0, split), &pos);
    if (pos != split) throw std::invalid_argument(err);
    const std::string imtext = s.substr(split);
    if (imtext == "+") return {re, 1.0};
    if (imtext == "-") return {re, -1.0};
    const double im = std::stod(imtext, &pos);
    if (pos != imtext.size()) throw std::invalid_argument(err);
    return {re, im};
  } catch (const EvalError&) {
    throw;
  } catch (...) {
    throw EvalError(ErrorKind::invalid_argument, err);
  }
}

struct CommonOpts {
  double tol = 1e-8;
  double t_floor = 10.0;
  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 123456789;
  bool timings = false;

  EvalConfig config() const {
    EvalConfig cfg;
    cfg.t_floor = t_floor;
    return cfg;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--tol", o.tol, "quadrature tolerance");
  cmd->add_option("--t-floor", o.t_floor, "minimum height for the argument machinery");
  cmd->add_option("--format", o.format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out_path, "report file path (stdout when omitted)");
  cmd->add_option("--seed", o.seed, "seed for the pseudorandom sample suites");
  cmd->add_flag("--timings", o.timings,
                "include wall-clock timings (breaks byte-identical reports)");
}

void emit(const CommonOpts& o, const std::string& content) {
  if (o.out_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
    if (!content.empty() && content.back() != '\n') std::fputc('\n', stdout);
  } else {
    report::atomic_write_file(o.out_path, content);
  }
}

class Timer {
public:
  double elapsed_ms() const {
    using namespace std::chrono;
    return double(duration_cast<microseconds>(steady_clock::now() - start_).count()) /
           1000.0;
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_envelope_open(JsonWriter& w, const std::string& command) {
  w.begin_object();
  w.key("schema_version");
  w.value(report::kSchemaVersion);
  w.key("command");
  w.value(command);
}

void write_timings_and_close(JsonWriter& w, const CommonOpts& o, const Timer& timer) {
  w.key("timings");
  w.begin_object();
  if (o.timings) {
    w.key("wall_ms");
    w.value(timer.elapsed_ms());
  }
  w.end_object();
  w.end_object();
}

void write_empty_findings(JsonWriter& w) {
  w.key("findings");
  w.begin_array();
  w.end_array();
}

void write_common_config(JsonWriter& w, const CommonOpts& o) {
  w.key("tol");
  w.value(o.tol);
  w.key("t_floor");
  w.value(o.t_floor);
  w.key("format");
  w.value(o.format);
  w.key("seed");
  w.value(static_cast<long long>(o.seed));
}

Cut parse_cut(const std::string& name) {
  if (name == "positive_real") return Cut::positive_real;
  if (name == "negative_real") return Cut::negative_real;
  throw EvalError(ErrorKind::invalid_argument, "cut must be positive_real or negative_real");
}

// ---------------------------------------------------------------- eval ----

struct EvalOpts {
  CommonOpts common;
  std::vector<std::string> points;
  std::string suite;
  std::size_t samples = 500;
  int branch_m = 30;
  std::string cut = "positive_real";
};

int run_eval(const EvalOpts& o) {
  Timer timer;
  const EvalConfig cfg = o.common.config();
  JsonWriter w;
  CsvWriter csv;
  write_envelope_open(w, "eval");
  w.key("config_echo");
  w.begin_object();
  write_common_config(w, o.common);
  w.key("suite");
  w.value(o.suite.empty() ? "none" : o.suite);
  w.key("samples");
  w.value(o.samples);
  w.key("branch_m");
  w.value(o.branch_m);
  w.key("cut");
  w.value(o.cut);
  w.end_object();

  w.key("results");
  if (!o.suite.empty()) {
    sweeps::MaxStat stat;
    const std::size_t n = o.samples;
    if (o.suite == "functional_equation") {
      const auto pts = sweeps::seeded_strip_samples(o.common.seed, n, -4.0, 5.0, 10.0, 500.0);
      stat = sweeps::functional_equation_residual(pts, cfg);
    } else if (o.suite == "chi_reciprocity") {
      const auto pts = sweeps::seeded_strip_samples(o.common.seed, n, -4.0, 5.0, 10.0, 500.0);
      stat = sweeps::chi_reciprocity_residual(pts);
    } else if (o.suite == "critical_line_modulus") {
      stat = sweeps::critical_line_modulus_deviation(10.0, 1000.0, n);
    } else if (o.suite == "functional_residual") {
      const BranchSpec spec{o.branch_m, parse_cut(o.cut), BranchSign::plus};
      const auto zs = sweeps::seeded_branch_samples(o.common.seed, n, spec, 0.2, 5.0, 0.05);
      stat = sweeps::functional_residual_sweep(zs, spec, cfg);
    } else {
      throw EvalError(ErrorKind::invalid_argument, "unknown suite '" + o.suite + "'");
    }
    w.begin_object();
    w.key("max_residual");
    w.value(stat.max_value);
    w.key("argmax_index");
    w.value(stat.argmax);
    w.end_object();
    csv.header({"suite", "samples", "max_residual", "argmax_index"});
    csv.row({o.suite, std::to_string(n), format_number(stat.max_value),
             std::to_string(stat.argmax)});
  } else {
    if (o.points.empty()) {
      throw EvalError(ErrorKind::invalid_argument, "eval needs --s points or --suite");
    }
    w.begin_array();
    csv.header({"s_re", "s_im", "zeta_re", "zeta_im", "chi_re", "chi_im", "abs_chi",
                "log_chi_re", "log_chi_im", "unwrapped_arg", "arg_closed_form",
                "abs_chi_asymptotic"});
    for (const std::string& text : o.points) {
      const Complex s = parse_complex(text);
      const Complex z = zeta(s, cfg);
      const Complex c = chi(s);
      w.begin_object();
      w.key("s_re");
      w.value(s.real());
      w.key("s_im");
      w.value(s.imag());
      w.key("zeta_re");
      w.value(z.real());
      w.key("zeta_im");
      w.value(z.imag());
      w.key("chi_re");
      w.value(c.real());
      w.key("chi_im");
      w.value(c.imag());
      w.key("abs_chi");
      w.value(std::abs(c));
      std::vector<std::string> cells = {
          format_number(s.real()),  format_number(s.imag()), format_number(z.real()),
          format_number(z.imag()),  format_number(c.real()), format_number(c.imag()),
          format_number(std::abs(c))};
      if (s.imag() != 0.0) {
        const Complex lc = log_chi(s);
        w.key("log_chi_re");
        w.value(lc.real());
        w.key("log_chi_im");
        w.value(lc.imag());
        cells.push_back(format_number(lc.real()));
        cells.push_back(format_number(lc.imag()));
      } else {
        w.key("log_chi_re");
        w.raw("null");
        w.key("log_chi_im");
        w.raw("null");
        cells.push_back("");
        cells.push_back("");
      }
      if (s.imag() >= cfg.t_floor) {
        const double ua = unwrapped_arg_chi(s, cfg).phi;
        w.key("unwrapped_arg");
        w.value(ua);
        w.key("arg_closed_form");
        w.value(arg_chi_asymptotic(s.real(), s.imag()));
        w.key("abs_chi_asymptotic");
        w.value(abs_chi_asymptotic(s.real(), s.imag()));
        cells.push_back(format_number(ua));
        cells.push_back(format_number(arg_chi_asymptotic(s.real(), s.imag())));
        cells.push_back(format_number(abs_chi_asymptotic(s.real(), s.imag())));
      } else {
        w.key("unwrapped_arg");
        w.raw("null");
        w.key("arg_closed_form");
        w.raw("null");
        w.key("abs_chi_asymptotic");
        w.raw("null");
        cells.push_back("");
        cells.push_back("");
        cells.push_back("");
      }
      w.end_object();
      csv.row(cells);
    }
    w.end_array();
  }
  write_empty_findings(w);
  write_timings_and_close(w, o.common, timer);
  emit(o.common, o.common.format == "json" ? w.str() : csv.str());
  return 0;
}

// ----------------------------------------------------------------- arc ----

struct ArcOpts {
  CommonOpts common;
  std::optional<double> phi;
  std::string through;
  double sigma_lo = -1.0;
  double sigma_hi = 2.0;
  double step = 0.05;
};

int run_arc(const ArcOpts& o) {
  Timer timer;
  const EvalConfig cfg = o.common.config();
  double phi;
  if (o.phi.has_value()) {
    phi = *o.phi;
  } else if (!o.through.empty()) {
    phi = unwrapped_arg_chi(parse_complex(o.through), cfg).phi;
  } else {
    throw EvalError(ErrorKind::invalid_argument, "arc needs --phi or --through");
  }
  const ArgArc arc = trace_arg_arc({phi}, o.sigma_lo, o.sigma_hi, o.step, cfg);

  JsonWriter w;
  write_envelope_open(w, "arc");
  w.key("config_echo");
  w.begin_object();
  write_common_config(w, o.common);
  w.key("phi");
  w.value(phi);
  w.key("sigma_lo");
  w.value(o.sigma_lo);
  w.key("sigma_hi");
  w.value(o.sigma_hi);
  w.key("step");
  w.value(o.step);
  w.end_object();
  w.key("results");
  w.begin_object();
  w.key("samples");
  w.begin_array();
  CsvWriter csv;
  csv.header({"sigma", "t"});
  for (const ArcSample& s : arc.samples) {
    w.begin_object();
    w.key("sigma");
    w.value(s.sigma);
    w.key("t");
    w.value(s.t);
    w.end_object();
    csv.row({format_number(s.sigma), format_number(s.t)});
  }
  w.end_array();
  w.end_object();
  write_empty_findings(w);
  write_timings_and_close(w, o.common, timer);
  emit(o.common, o.common.format == "json" ? w.str() : csv.str());
  return 0;
}

// ----------------------------------------------------------------- tau ----

struct TauOpts {
  CommonOpts common;
  std::string z_text;
  int m = 30;
  std::string cut = "positive_real";
  std::string sign = "plus";
};

int run_tau(const TauOpts& o) {
  Timer timer;
  const EvalConfig cfg = o.common.config();
  const Complex z = parse_complex(o.z_text);
  BranchSpec spec;
  spec.m = o.m;
  spec.cut = parse_cut(o.cut);
  if (o.sign == "plus") {
    spec.sign = BranchSign::plus;
  } else if (o.sign == "minus") {
    spec.sign = BranchSign::minus;
  } else {
    throw EvalError(ErrorKind::invalid_argument, "sign must be plus or minus");
  }
  const Complex s =
      (spec.sign == BranchSign::plus) ? tau(z, spec, cfg) : tau_conjugate(z, spec, cfg);
  const double roundtrip = std::abs(chi(s) - z) / std::abs(z);
  const double fres = (spec.sign == BranchSign::plus)
                          ? functional_residual(z, spec, cfg)
                          : functional_residual(std::conj(z), spec.conjugate_partner(), cfg);

  JsonWriter w;
  write_envelope_open(w, "tau");
  w.key("config_echo");
  w.begin_object();
  write_common_config(w, o.common);
  w.key("z_re");
  w.value(z.real());
  w.key("z_im");
  w.value(z.imag());
  w.key("m");
  w.value(spec.m);
  w.key("cut");
  w.value(o.cut);
  w.key("sign");
  w.value(o.sign);
  w.end_object();
  w.key("results");
  w.begin_object();
  w.key("s_re");
  w.value(s.real());
  w.key("s_im");
  w.value(s.imag());
  w.key("roundtrip_residual");
  w.value(roundtrip);
  w.key("functional_residual");
  w.value(fres);
  w.end_object();
  write_empty_findings(w);
  write_timings_and_close(w, o.common, timer);
  CsvWriter csv;
  csv.header({"s_re", "s_im", "roundtrip_residual", "functional_residual"});
  csv.row({format_number(s.real()), format_number(s.imag()), format_number(roundtrip),
           format_number(fres)});
  emit(o.common, o.common.format == "json" ? w.str() : csv.str());
  return 0;
}

// ------------------------------------------------------------- contour ----

struct ContourOpts {
  CommonOpts common;
  std::string type = "one";
  int m = 30;
  std::vector<double> eps_list = {1e-2, 1e-3, 1e-4};
  std::string shape = "arc_hugging";
  double sigma_lo = -1.0;
  double sigma_hi = 2.0;
  double sigma1 = -1.0, sigma2 = 2.0, t1 = 10.0, t2 = 20.0;
};

int run_contour(const ContourOpts& o) {
  Timer timer;
  const EvalConfig cfg = o.common.config();
  JsonWriter w;
  CsvWriter csv;
  write_envelope_open(w, "contour");
  w.key("config_echo");
  w.begin_object();
  write_common_config(w, o.common);
  w.key("type");
  w.value(o.type);
  w.key("m");
  w.value(o.m);
  w.key("shape");
  w.value(o.shape);
  w.key("sigma_lo");
  w.value(o.sigma_lo);
  w.key("sigma_hi");
  w.value(o.sigma_hi);
  w.end_object();
  w.key("results");
  w.begin_object();
  w.key("rows");
  w.begin_array();
  csv.header({"epsilon", "value_re", "value_im", "winding", "tracked_winding",
              "winding_residual", "quadrature_error", "reliable"});

  const auto emit_row = [&](double eps, const LogIntegralResult& r) {
    w.begin_object();
    w.key("epsilon");
    w.value(eps);
    w.key("value_re");
    w.value(r.value.real());
    w.key("value_im");
    w.value(r.value.imag());
    w.key("winding");
    w.value(r.winding);
    w.key("tracked_winding");
    w.value(r.tracked_winding);
    w.key("winding_residual");
    w.value(r.winding_residual);
    w.key("quadrature_error");
    w.value(r.quadrature_error_estimate);
    w.key("reliable");
    w.value_bool(r.reliable);
    w.end_object();
    csv.row({format_number(eps), format_number(r.value.real()),
             format_number(r.value.imag()), std::to_string(r.winding),
             std::to_string(r.tracked_winding), format_number(r.winding_residual),
             format_number(r.quadrature_error_estimate), r.reliable ? "true" : "false"});
  };

  if (o.type == "rectangle") {
    const ContourPath rect = rectangle_contour(o.sigma1, o.sigma2, o.t1, o.t2, cfg);
    emit_row(0.0, integrate_log_deriv(rect, o.common.tol, cfg));
  } else if (o.type == "one" || o.type == "two") {
    for (const double eps : o.eps_list) {
      SimpleDomainSpec spec;
      spec.kind = (o.type == "one") ? ContourKind::type_one : ContourKind::type_two;
      spec.m = o.m;
      spec.epsilon = eps;
      spec.shape = (o.shape == "rectangle_blend") ? ContourShape::rectangle_blend
                                                  : ContourShape::arc_hugging;
      spec.sigma_lo = o.sigma_lo;
      spec.sigma_hi = o.sigma_hi;
      const ContourPath path =
          (o.type == "one") ? build_type_one(spec, cfg) : build_type_two(spec, cfg);
      emit_row(eps, integrate_log_deriv(path, o.common.tol, cfg));
    }
  } else {
    throw EvalError(ErrorKind::invalid_argument, "type must be one, two, or rectangle");
  }
  w.end_array();
  w.end_object();
  write_empty_findings(w);
  write_timings_and_close(w, o.common, timer);
  emit(o.common, o.common.format == "json" ? w.str() : csv.str());
  return 0;
}

// --------------------------------------------------------------- zeros ----

struct ZerosOpts {
  CommonOpts common;
  double t1 = 10.0;
  double t2 = 100.0;
};

void write_zero_record(JsonWriter& w, CsvWriter& csv, const ZeroRecord& z) {
  w.begin_object();
  w.key("t");
  w.value(z.t);
  w.key("half_width");
  w.value(z.half_width);
  w.key("interval_index");
  w.value(z.interval_index);
  w.key("zeta_abs");
  w.value(z.zeta_abs);
  w.end_object();
  csv.row({format_number(z.t), format_number(z.half_width),
           std::to_string(z.interval_index), format_number(z.zeta_abs)});
}

int run_zeros(const ZerosOpts& o) {
  Timer timer;
  const EvalConfig cfg = o.common.config();
  const std::vector<ZeroRecord> zs = locate_zeros(o.t1, o.t2, cfg);
  JsonWriter w;
  CsvWriter csv;
  write_envelope_open(w, "zeros");
  w.key("config_echo");
  w.begin_object();
  write_common_config(w, o.common);
  w.key("t1");
  w.value(o.t1);
  w.key("t2");
  w.value(o.t2);
  w.end_object();
  w.key("results");
  w.begin_object();
  w.key("count");
  w.value(zs.size());
  w.key("zeros");
  w.begin_array();
  csv.header({"t", "half_width", "interval_index", "zeta_abs"});
  for (const ZeroRecord& z : zs) write_zero_record(w, csv, z);
  w.end_array();
  w.end_object();
  write_empty_findings(w);
  write_timings_and_close(w, o.common, timer);
  emit(o.common, o.common.format == "json" ? w.str() : csv.str());
  return 0;
}

// -------------------------------------------------------------- census ----

struct CensusOpts {
  CommonOpts common;
  int m_start = 0;
  int m_end = 99;
};

int run_census(const CensusOpts& o) {
  Timer timer;
  const EvalConfig cfg = o.common.config();
  const CensusReport rep = census(o.m_start, o.m_end, cfg);
  const std::vector<GramPoint> grams = gram_points(o.m_start, o.m_end + 1, cfg);

  JsonWriter w;
  CsvWriter csv;
  write_envelope_open(w, "census");
  w.key("config_echo");
  w.begin_object();
  write_common_config(w, o.common);
  w.key("m_start");
  w.value(o.m_start);
  w.key("m_end");
  w.value(o.m_end);
  w.end_object();
  w.key("results");
  w.begin_object();
  w.key("total_zeros");
  w.value(rep.total_zeros);
  w.key("winding_total");
  w.value(rep.winding_total);
  w.key("counts");
  w.begin_array();
  csv.header({"m", "count", "t_lo", "t_hi"});
  for (const auto& [m, count] : rep.counts) {
    const double t_lo = grams[std::size_t(m - o.m_start)].t;
    const double t_hi = grams[std::size_t(m - o.m_start) + 1].t;
    w.begin_object();
    w.key("m");
    w.value(m);
    w.key("count");
    w.value(count);
    w.key("t_lo");
    w.value(t_lo);
    w.key("t_hi");
    w.value(t_hi);
    w.end_object();
    csv.row({std::to_string(m), std::to_string(count), format_number(t_lo),
             format_number(t_hi)});
  }
  w.end_array();
  w.key("zeros");
  w.begin_array();
  CsvWriter scratch;
  for (const ZeroRecord& z : rep.zeros) write_zero_record(w, scratch, z);
  w.end_array();
  w.key("boundary");
  w.begin_array();
  for (const BoundaryFinding& b : rep.boundary) {
    w.begin_object();
    w.key("t");
    w.value(b.t);
    w.key("m");
    w.value(b.m);
    w.key("distance");
    w.value(b.distance);
    w.end_object();
  }
  w.end_array();
  w.end_object();

  w.key("findings");
  w.begin_array();
  for (const int m : rep.violations) {
    w.begin_object();
    w.key("kind");
    w.value("interval_count");
    w.key("m");
    w.value(m);
    w.key("count");
    w.value(rep.counts.at(m));
    w.key("t_lo");
    w.value(grams[std::size_t(m - o.m_start)].t);
    w.key("t_hi");
    w.value(grams[std::size_t(m - o.m_start) + 1].t);
    w.end_object();
  }
  for (const BoundaryFinding& b : rep.boundary) {
    w.begin_object();
    w.key("kind");
    w.value("boundary_proximity");
    w.key("t");
    w.value(b.t);
    w.key("m");
    w.value(b.m);
    w.end_object();
  }
  w.end_array();
  write_timings_and_close(w, o.common, timer);
  emit(o.common, o.common.format == "json" ? w.str() : csv.str());
  return (rep.violations.empty() && rep.boundary.empty()) ? 0 : kExitFindings;
}

// ------------------------------------------------------------- figure2 ----

struct Figure2Opts {
  CommonOpts common;
  int count = 12;
};

int run_figure2(const Figure2Opts& o) {
  Timer timer;
  const EvalConfig cfg = o.common.config();
  // Locate the first `count` zeros above the floor, widening the window
  // until enough are found.
  double t2 = std::max(cfg.t_floor + 10.0, 60.0);
  std::vector<ZeroRecord> zs;
  while (true) {
    zs = locate_zeros(cfg.t_floor, t2, cfg);
    if (int(zs.size()) >= o.count || t2 >= 1000.0) break;
    t2 = std::min(1000.0, t2 * 1.5);
  }
  if (int(zs.size()) < o.count) {
    throw EvalError(ErrorKind::invalid_argument,
                    "not enough zeros below the t <= 1000 ceiling");
  }
  zs.resize(std::size_t(o.count));

  JsonWriter w;
  CsvWriter csv;
  write_envelope_open(w, "figure2");
  w.key("config_echo");
  w.begin_object();
  write_common_config(w, o.common);
  w.key("count");
  w.value(o.count);
  w.key("x_convention");
  w.value("unwrapped_arg_chi(1/2+it)/(2*pi)");
  w.end_object();
  w.key("results");
  w.begin_object();
  w.key("rows");
  w.begin_array();
  csv.header({"index", "t", "x"});
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const double x = unwrapped_arg_chi(Complex(0.5, zs[i].t), cfg).phi / kTwoPi;
    w.begin_object();
    w.key("index");
    w.value(i + 1);
    w.key("t");
    w.value(zs[i].t);
    w.key("x");
    w.value(x);
    w.end_object();
    csv.row({std::to_string(i + 1), format_number(zs[i].t), format_number(x)});
  }
  w.end_array();
  w.end_object();
  write_empty_findings(w);
  write_timings_and_close(w, o.common, timer);
  emit(o.common, o.common.format == "json" ? w.str() : csv.str());
  return 0;
}

void write_error_record(const EvalError& e) {
  JsonWriter w;
  w.begin_object();
  w.key("error");
  w.begin_object();
  w.key("kind");
  w.value(kind_name(e.kind()));
  w.key("message");
  w.value(e.what());
  if (e.has_where()) {
    w.key("where_re");
    w.value(e.where().real());
    w.key("where_im");
    w.value(e.where().imag());
  }
  w.end_object();
  w.end_object();
  std::cerr << w.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critical-strip toolkit: chi-factor geometry, branch inversion, "
               "contour integrals, and the critical-line zero census"};
  app.require_subcommand(1);

  EvalOpts eval_opts;
  auto* eval_cmd = app.add_subcommand(
      "eval", "evaluate zeta/chi at points or run a seeded identity suite");
  add_common(eval_cmd, eval_opts.common);
  eval_cmd->add_option("--s", eval_opts.points, "point(s) s, e.g. 0.5+100i");
  eval_cmd->add_option("--suite", eval_opts.suite,
                       "functional_equation | chi_reciprocity | critical_line_modulus | "
                       "functional_residual");
  eval_cmd->add_option("--samples", eval_opts.samples, "suite sample count");
  eval_cmd->add_option("--m", eval_opts.branch_m, "branch index for functional_residual");
  eval_cmd->add_option("--cut", eval_opts.cut, "branch cut for functional_residual");

  ArcOpts arc_opts;
  auto* arc_cmd = app.add_subcommand("arc", "trace an argument-preserving arc");
  add_common(arc_cmd, arc_opts.common);
  double arc_phi = 0.0;
  auto* phi_opt = arc_cmd->add_option("--phi", arc_phi, "unwrapped argument value");
  arc_cmd->add_option("--through", arc_opts.through, "point the arc passes through");
  arc_cmd->add_option("--sigma-lo", arc_opts.sigma_lo, "left end of the sigma range");
  arc_cmd->add_option("--sigma-hi", arc_opts.sigma_hi, "right end of the sigma range");
  arc_cmd->add_option("--step", arc_opts.step, "sigma sampling step");

  TauOpts tau_opts;
  auto* tau_cmd = app.add_subcommand("tau", "invert chi on a branch");
  add_common(tau_cmd, tau_opts.common);
  tau_cmd->add_option("--z", tau_opts.z_text, "target z value")->required();
  tau_cmd->add_option("--m", tau_opts.m, "branch index");
  tau_cmd->add_option("--cut", tau_opts.cut, "positive_real or negative_real");
  tau_cmd->add_option("--sign", tau_opts.sign, "plus or minus");

  ContourOpts contour_opts;
  auto* contour_cmd =
      app.add_subcommand("contour", "log-derivative integral along strip contours");
  add_common(contour_cmd, contour_opts.common);
  contour_cmd->add_option("--type", contour_opts.type, "one, two, or rectangle");
  contour_cmd->add_option("--m", contour_opts.m, "branch index");
  contour_cmd->add_option("--eps", contour_opts.eps_list, "epsilon family");
  contour_cmd->add_option("--shape", contour_opts.shape, "arc_hugging or rectangle_blend");
  contour_cmd->add_option("--sigma-lo", contour_opts.sigma_lo, "strip sigma extent (left)");
  contour_cmd->add_option("--sigma-hi", contour_opts.sigma_hi, "strip sigma extent (right)");
  contour_cmd->add_option("--sigma1", contour_opts.sigma1, "rectangle left edge");
  contour_cmd->add_option("--sigma2", contour_opts.sigma2, "rectangle right edge");
  contour_cmd->add_option("--t1", contour_opts.t1, "rectangle bottom edge");
  contour_cmd->add_option("--t2", contour_opts.t2, "rectangle top edge");

  ZerosOpts zeros_opts;
  auto* zeros_cmd = app.add_subcommand("zeros", "locate critical-line zeros in (t1, t2)");
  add_common(zeros_cmd, zeros_opts.common);
  zeros_cmd->add_option("--t1", zeros_opts.t1, "lower height")->required();
  zeros_cmd->add_option("--t2", zeros_opts.t2, "upper height")->required();

  CensusOpts census_opts;
  auto* census_cmd =
      app.add_subcommand("census", "per-interval zero counts between division points");
  add_common(census_cmd, census_opts.common);
  census_cmd->add_option("--m-start", census_opts.m_start, "first interval index");
  census_cmd->add_option("--m-end", census_opts.m_end, "last interval index");

  Figure2Opts fig_opts;
  auto* fig_cmd = app.add_subcommand(
      "figure2", "zero ordinates against the normalized unwrapped argument");
  add_common(fig_cmd, fig_opts.common);
  fig_cmd->add_option("--count", fig_opts.count, "number of zeros");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(eval_cmd)) return run_eval(eval_opts);
    if (app.got_subcommand(arc_cmd)) {
      if (phi_opt->count() > 0) arc_opts.phi = arc_phi;
      return run_arc(arc_opts);
    }
    if (app.got_subcommand(tau_cmd)) return run_tau(tau_opts);
    if (app.got_subcommand(contour_cmd)) return run_contour(contour_opts);
    if (app.got_subcommand(zeros_cmd)) return run_zeros(zeros_opts);
    if (app.got_subcommand(census_cmd)) return run_census(census_opts);
    if (app.got_subcommand(fig_cmd)) return run_figure2(fig_opts);
  } catch (const EvalError& e) {
    write_error_record(e);
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":{\"kind\":\"internal\",\"message\":\"" << e.what() << "\"}}\n";
    return kExitNumerical;
  }
  return kExitValidation;
}
