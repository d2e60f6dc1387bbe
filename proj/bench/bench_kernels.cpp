#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oscdyn/kernels.hpp"
#include "oscdyn/oracle/fock.hpp"

// Times each parallel kernel against its serial reference and checks the
// results stay bitwise identical.

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool identical) {
  std::printf("%-28s serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  %s\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "bitwise-equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  using namespace oscdyn;

  {
    SystemParams params;
    params.omega0 = 1.1;
    params.coupling = 0.8;
    params.omega_drive = 0.7;
    params.drive = DriveSpec::constant(0.6);
    params.nbar_b = 0.4;
    params.nbar_c = 0.2;
    const DampingEnvelope env = DampingEnvelope::markovian(0.3);
    std::vector<double> times(400);
    for (size_t i = 0; i < times.size(); ++i)
      times[i] = 25.0 * static_cast<double>(i) / (times.size() - 1);

    auto t0 = Clock::now();
    const auto serial =
        pair_energy_series_serial(params, env, 1.0, 0.5, times);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    const auto parallel = pair_energy_series(params, env, 1.0, 0.5, times);
    const double parallel_ms = ms_since(t0);
    bool same = true;
    for (size_t i = 0; i < times.size(); ++i)
      same = same && serial[i].first == parallel[i].first &&
             serial[i].second == parallel[i].second;
    report("pair_energy_series", serial_ms, parallel_ms, same);
  }

  {
    SystemParams params;
    params.drive = DriveSpec::constant(0.5);
    params.omega_drive = 0.8;
    const DampingEnvelope env = DampingEnvelope::markovian(0.4);
    const NumberStateContext ctx = number_state_context(params, env, 0.4, 1.3);
    GridSpec grid;
    grid.points = 301;

    auto t0 = Clock::now();
    const Eigen::MatrixXd serial =
        husimi_number_reduced_grid_serial(ctx, 2, grid);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    const Eigen::MatrixXd parallel = husimi_number_reduced_grid(ctx, 2, grid);
    const double parallel_ms = ms_since(t0);
    report("husimi_number_reduced_grid", serial_ms, parallel_ms,
           serial == parallel);
  }

  {
    const std::vector<int> dims{12, 12, 8, 8};
    long size = 1;
    for (int d : dims) size *= d;
    Eigen::VectorXcd x(size), ys(size), yp(size);
    for (long i = 0; i < size; ++i)
      x(i) = std::complex<double>(std::sin(0.1 * static_cast<double>(i)),
                                  std::cos(0.2 * static_cast<double>(i)));
    const std::complex<double> drive{0.4, -0.1};
    const int repeats = 200;

    auto t0 = Clock::now();
    for (int r = 0; r < repeats; ++r)
      oracle::apply_hamiltonian_serial(dims, x.data(), ys.data(), 1.0, 0.9,
                                       0.35, drive);
    const double serial_ms = ms_since(t0);
    t0 = Clock::now();
    for (int r = 0; r < repeats; ++r)
      oracle::apply_hamiltonian(dims, x.data(), yp.data(), 1.0, 0.9, 0.35,
                                drive);
    const double parallel_ms = ms_since(t0);
    report("fock apply_hamiltonian", serial_ms, parallel_ms, ys == yp);
  }

  return 0;
}
