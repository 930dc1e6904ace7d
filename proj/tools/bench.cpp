// Timings for the data-parallel kernels under the serial reference schedule
// and the OpenMP schedule, with a bitwise agreement check between the two.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "zetachi/parallel.hpp"
#include "zetachi/sweeps.hpp"
#include "zetachi/zero_census.hpp"

using namespace zetachi;

namespace {

double wall_ms(const std::chrono::steady_clock::time_point& start) {
  using namespace std::chrono;
  return double(duration_cast<microseconds>(steady_clock::now() - start).count()) / 1000.0;
}

template <class F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return wall_ms(start);
}

void report_line(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-34s serial %9.1f ms   openmp %9.1f ms   speedup %5.2fx   %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  std::printf("threads available: %d (openmp %s)\n\n", omp_get_max_threads(),
              openmp_enabled ? "enabled" : "disabled");

  {
    const auto pts = sweeps::seeded_strip_samples(2024, 4000, -4.0, 5.0, 10.0, 500.0);
    sweeps::MaxStat a, b;
    const double ts = timed([&] { a = sweeps::functional_equation_residual(pts, {}, Exec::serial); });
    const double tp = timed([&] { b = sweeps::functional_equation_residual(pts, {}, Exec::parallel); });
    report_line("functional-equation residuals", ts, tp,
                a.max_value == b.max_value && a.argmax == b.argmax);
  }

  {
    BranchSpec spec{60, Cut::positive_real, BranchSign::plus};
    sweeps::InversionGridReport a, b;
    const double ts =
        timed([&] { a = sweeps::inversion_grid(spec, 60, 60, 0.2, 5.0, 0.3, {}, Exec::serial); });
    const double tp =
        timed([&] { b = sweeps::inversion_grid(spec, 60, 60, 0.2, 5.0, 0.3, {}, Exec::parallel); });
    report_line("branch inversion grid 60x60", ts, tp,
                a.max_roundtrip_residual.max_value == b.max_roundtrip_residual.max_value &&
                    a.min_abs_chi_deriv == b.min_abs_chi_deriv);
  }

  {
    std::vector<ZeroRecord> a, b;
    const double ts = timed([&] { a = locate_zeros(20.0, 260.0, {}, Exec::serial); });
    const double tp = timed([&] { b = locate_zeros(20.0, 260.0, {}, Exec::parallel); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].t == b[i].t;
    report_line("zero location t in (20, 260)", ts, tp, same);
  }

  {
    CensusReport a, b;
    const double ts = timed([&] { a = census(0, 60, {}, Exec::serial); });
    const double tp = timed([&] { b = census(0, 60, {}, Exec::parallel); });
    report_line("census m = 0..60", ts, tp,
                a.total_zeros == b.total_zeros && a.counts == b.counts);
  }
  return 0;
}
