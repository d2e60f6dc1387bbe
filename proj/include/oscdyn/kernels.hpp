#pragma once

#include <Eigen/Dense>
#include <vector>

#include "oscdyn/chain.hpp"
#include "oscdyn/pair.hpp"
#include "oscdyn/phase_space.hpp"

// Data-parallel sweep kernels.  Each has a serial reference twin used by the
// tests (results must match bit for bit; every slot is computed by an
// identical expression independent of thread count) and timed against the
// parallel version by tools/bench.

namespace oscdyn {

struct GridSpec {
  double re_min = -3.0, re_max = 3.0;
  double im_min = -3.0, im_max = 3.0;
  int points = 201;  // per axis

  void check() const;
  double re_at(int j) const {
    return re_min + (re_max - re_min) * j / (points - 1);
  }
  double im_at(int i) const {
    return im_min + (im_max - im_min) * i / (points - 1);
  }
};

std::vector<PairEnergies> pair_energy_series(
    const SystemParams& params, const DampingEnvelope& env, double n1_init,
    double n2_init, const std::vector<double>& times,
    const QuadratureConfig& quad = {});
std::vector<PairEnergies> pair_energy_series_serial(
    const SystemParams& params, const DampingEnvelope& env, double n1_init,
    double n2_init, const std::vector<double>& times,
    const QuadratureConfig& quad = {});

std::vector<PhasePoint> maxima_series(const SystemParams& params,
                                      const DampingEnvelope& env,
                                      const CoherentInit& init,
                                      const std::vector<double>& times,
                                      const QuadratureConfig& quad = {});
std::vector<PhasePoint> maxima_series_serial(const SystemParams& params,
                                             const DampingEnvelope& env,
                                             const CoherentInit& init,
                                             const std::vector<double>& times,
                                             const QuadratureConfig& quad = {});

// Rows follow the time grid, one column per site.
Eigen::MatrixXd chain_excitation_series(const SystemParams& params,
                                        const DampingEnvelope& env,
                                        const std::vector<double>& times,
                                        const QuadratureConfig& quad = {});
Eigen::MatrixXd chain_excitation_series_serial(
    const SystemParams& params, const DampingEnvelope& env,
    const std::vector<double>& times, const QuadratureConfig& quad = {});

// Marginal Q of one oscillator (1 or 2) for a coherent scenario, sampled on
// grid(i, j) = Q(re_at(j) + i im_at(i)).
Eigen::MatrixXd husimi_coherent_grid(const CoherentContext& ctx,
                                     int oscillator, const GridSpec& grid);
Eigen::MatrixXd husimi_coherent_grid_serial(const CoherentContext& ctx,
                                            int oscillator,
                                            const GridSpec& grid);

Eigen::MatrixXd husimi_number_reduced_grid(const NumberStateContext& ctx,
                                           int photons, const GridSpec& grid);
Eigen::MatrixXd husimi_number_reduced_grid_serial(const NumberStateContext& ctx,
                                                  int photons,
                                                  const GridSpec& grid);

}  // namespace oscdyn
