#pragma once

// Division points t_m on the critical line (unwrapped arg chi = -2 pi m),
// critical-line zero location by sign changes of the rotated combination,
// per-interval census, and the classical counting cross-checks.

#include <map>
#include <vector>

#include "zetachi/chi_geometry.hpp"
#include "zetachi/parallel.hpp"
#include "zetachi/special_functions.hpp"

namespace zetachi {

struct GramPoint {
  int m = 0;
  double t = 0.0;
  /// |unwrapped_arg_chi(1/2 + i t) + 2 pi m| after refinement.
  double arg_residual = 0.0;
};

struct ZeroRecord {
  double t = 0.0;
  double half_width = 0.0;  // bracket radius after refinement (< 1e-9)
  int interval_index = 0;   // the m with t_m < t < t_{m+1}
  double zeta_abs = 0.0;    // |zeta(1/2 + i t)| at the located point
};

struct BoundaryFinding {
  double t = 0.0;       // zero ordinate
  int m = 0;            // division index it nearly touches
  double distance = 0.0;
};

struct CensusReport {
  int m_start = 0;
  int m_end = 0;
  std::map<int, int> counts;
  std::vector<int> violations;  // interval indices with count != 1
  int total_zeros = 0;
  int winding_total = 0;  // contour cross-check over the same t-range
  std::vector<ZeroRecord> zeros;
  std::vector<BoundaryFinding> boundary;  // zeros within 1e-6 of a division height
};

struct MainTermCheck {
  long count = 0;
  double main_term = 0.0;
  double deviation = 0.0;
};

/// Division point t_m: solves unwrapped_arg_chi(1/2 + i t) = -2 pi m.
/// Throws below_t_floor when the solution would sit under the floor.
GramPoint gram_point(int m, const EvalConfig& cfg = {});

/// Division points m_start .. m_end inclusive (parallel fill, ordered).
std::vector<GramPoint> gram_points(int m_start, int m_end, const EvalConfig& cfg = {},
                                   Exec mode = Exec::parallel);

/// The rotated combination e^{i theta(t)} zeta(1/2 + i t) with
/// theta = -unwrapped_arg_chi / 2; real on the critical line, so its sign
/// changes locate the zeros there.
double rotated_zeta(double t, const EvalConfig& cfg = {});

/// All critical-line zeros in (t1, t2), each bracketed to half_width < 1e-9.
/// Completeness is cross-checked against the rectangle winding over
/// [-1, 2] x [t1, t2]; a disagreement that survives grid refinement throws
/// count_mismatch rather than resolving silently.
std::vector<ZeroRecord> locate_zeros(double t1, double t2, const EvalConfig& cfg = {},
                                     Exec mode = Exec::parallel);

/// Per-interval zero counts between consecutive division points
/// m_start .. m_end. Zeros within 1e-6 of a division height are also listed
/// as boundary findings. Interval counts != 1 are findings, not failures.
CensusReport census(int m_start, int m_end, const EvalConfig& cfg = {},
                    Exec mode = Exec::parallel);

/// Zero count N(T) from the contour winding (plus the frozen count below the
/// floor) against the main term (T/2pi) log(T/2pi) - T/2pi.
MainTermCheck count_vs_main_term(double T, const EvalConfig& cfg = {});

/// Frozen ordinates of the first few critical-line zeros (each re-derived by
/// the bisection oracle in the test suite); used only to count zeros below
/// the configured floor.
const std::vector<double>& known_low_zero_ordinates();

}  // namespace zetachi
