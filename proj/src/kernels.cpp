#include "oscdyn/kernels.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

// Every kernel computes slot i by an expression that depends only on i, so
// the parallel sweep reproduces the serial one bit for bit at any thread
// count.  Exceptions thrown inside a parallel region are captured and
// rethrown once on the calling thread.

namespace oscdyn {
namespace {

struct LoopGuard {
  std::atomic<bool> failed{false};
  std::exception_ptr error = nullptr;

  template <typename Fn>
  void run(int count, Fn&& body) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < count; ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        body(i);
      } catch (...) {
#pragma omp critical(oscdyn_loop_guard)
        {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    }
    if (error) std::rethrow_exception(error);
  }
};

double coherent_marginal(const CoherentContext& ctx,
                         std::complex<double> center,
                         std::complex<double> at) {
  return std::exp(-std::norm(at - center) / ctx.sigma) /
         (std::numbers::pi * ctx.sigma);
}

std::complex<double> grid_point(const GridSpec& grid, int i, int j) {
  return {grid.re_at(j), grid.im_at(i)};
}

}  // namespace

void GridSpec::check() const {
  if (points < 2) throw std::invalid_argument("GridSpec: points must be >= 2");
  if (!(re_max > re_min) || !(im_max > im_min))
    throw std::invalid_argument("GridSpec: empty axis range");
  if (!std::isfinite(re_min) || !std::isfinite(re_max) ||
      !std::isfinite(im_min) || !std::isfinite(im_max))
    throw std::invalid_argument("GridSpec: bounds must be finite");
}

std::vector<PairEnergies> pair_energy_series_serial(
    const SystemParams& params, const DampingEnvelope& env, double n1_init,
    double n2_init, const std::vector<double>& times,
    const QuadratureConfig& quad) {
  std::vector<PairEnergies> out(times.size());
  for (size_t i = 0; i < times.size(); ++i)
    out[i] = pair_energies(params, env, n1_init, n2_init, times[i], quad);
  return out;
}

std::vector<PairEnergies> pair_energy_series(
    const SystemParams& params, const DampingEnvelope& env, double n1_init,
    double n2_init, const std::vector<double>& times,
    const QuadratureConfig& quad) {
  std::vector<PairEnergies> out(times.size());
  LoopGuard guard;
  guard.run(static_cast<int>(times.size()), [&](int i) {
    out[static_cast<size_t>(i)] = pair_energies(
        params, env, n1_init, n2_init, times[static_cast<size_t>(i)], quad);
  });
  return out;
}

std::vector<PhasePoint> maxima_series_serial(const SystemParams& params,
                                             const DampingEnvelope& env,
                                             const CoherentInit& init,
                                             const std::vector<double>& times,
                                             const QuadratureConfig& quad) {
  std::vector<PhasePoint> out(times.size());
  for (size_t i = 0; i < times.size(); ++i)
    out[i] = maxima_trajectory(params, env, init, times[i], quad);
  return out;
}

std::vector<PhasePoint> maxima_series(const SystemParams& params,
                                      const DampingEnvelope& env,
                                      const CoherentInit& init,
                                      const std::vector<double>& times,
                                      const QuadratureConfig& quad) {
  std::vector<PhasePoint> out(times.size());
  LoopGuard guard;
  guard.run(static_cast<int>(times.size()), [&](int i) {
    out[static_cast<size_t>(i)] = maxima_trajectory(
        params, env, init, times[static_cast<size_t>(i)], quad);
  });
  return out;
}

Eigen::MatrixXd chain_excitation_series_serial(const SystemParams& params,
                                               const DampingEnvelope& env,
                                               const std::vector<double>& times,
                                               const QuadratureConfig& quad) {
  Eigen::MatrixXd out(static_cast<int>(times.size()), params.chain_size);
  for (size_t i = 0; i < times.size(); ++i)
    out.row(static_cast<int>(i)) =
        chain_excitations(params, env, times[i], quad).transpose();
  return out;
}

Eigen::MatrixXd chain_excitation_series(const SystemParams& params,
                                        const DampingEnvelope& env,
                                        const std::vector<double>& times,
                                        const QuadratureConfig& quad) {
  Eigen::MatrixXd out(static_cast<int>(times.size()), params.chain_size);
  LoopGuard guard;
  guard.run(static_cast<int>(times.size()), [&](int i) {
    out.row(i) =
        chain_excitations(params, env, times[static_cast<size_t>(i)], quad)
            .transpose();
  });
  return out;
}

Eigen::MatrixXd husimi_coherent_grid_serial(const CoherentContext& ctx,
                                            int oscillator,
                                            const GridSpec& grid) {
  grid.check();
  if (oscillator != 1 && oscillator != 2)
    throw std::invalid_argument("husimi_coherent_grid: oscillator must be 1 or 2");
  const std::complex<double> center =
      oscillator == 1 ? ctx.center1 : ctx.center2;
  Eigen::MatrixXd out(grid.points, grid.points);
  for (int i = 0; i < grid.points; ++i)
    for (int j = 0; j < grid.points; ++j)
      out(i, j) = coherent_marginal(ctx, center, grid_point(grid, i, j));
  return out;
}

Eigen::MatrixXd husimi_coherent_grid(const CoherentContext& ctx, int oscillator,
                                     const GridSpec& grid) {
  grid.check();
  if (oscillator != 1 && oscillator != 2)
    throw std::invalid_argument("husimi_coherent_grid: oscillator must be 1 or 2");
  const std::complex<double> center =
      oscillator == 1 ? ctx.center1 : ctx.center2;
  Eigen::MatrixXd out(grid.points, grid.points);
  LoopGuard guard;
  guard.run(grid.points, [&](int i) {
    for (int j = 0; j < grid.points; ++j)
      out(i, j) = coherent_marginal(ctx, center, grid_point(grid, i, j));
  });
  return out;
}

Eigen::MatrixXd husimi_number_reduced_grid_serial(const NumberStateContext& ctx,
                                                  int photons,
                                                  const GridSpec& grid) {
  grid.check();
  Eigen::MatrixXd out(grid.points, grid.points);
  for (int i = 0; i < grid.points; ++i)
    for (int j = 0; j < grid.points; ++j)
      out(i, j) = husimi_number_reduced(ctx, photons, grid_point(grid, i, j));
  return out;
}

Eigen::MatrixXd husimi_number_reduced_grid(const NumberStateContext& ctx,
                                           int photons, const GridSpec& grid) {
  grid.check();
  Eigen::MatrixXd out(grid.points, grid.points);
  LoopGuard guard;
  guard.run(grid.points, [&](int i) {
    for (int j = 0; j < grid.points; ++j)
      out(i, j) = husimi_number_reduced(ctx, photons, grid_point(grid, i, j));
  });
  return out;
}

}  // namespace oscdyn
