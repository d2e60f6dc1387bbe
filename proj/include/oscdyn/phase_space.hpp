#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "oscdyn/envelope.hpp"
#include "oscdyn/pair.hpp"
#include "oscdyn/params.hpp"
#include "oscdyn/quadrature.hpp"

namespace oscdyn {

struct PhasePoint {
  std::complex<double> alpha1;
  std::complex<double> alpha2;
};

struct CoherentInit {
  std::complex<double> alpha0;  // oscillator 1
  std::complex<double> beta0;   // oscillator 2
};

// Center of the Q distribution for coherent initial states: the drive
// response displaced by the exchanged initial amplitudes.
PhasePoint maxima_trajectory(const SystemParams& params,
                             const DampingEnvelope& env,
                             const CoherentInit& init, double t,
                             const QuadratureConfig& quad = {});

// ---------------------------------------------------------------------------
// Coherent initial states.  Q is a product of two round Gaussians of width
// sigma = 1 + nbar sin^2 G centered on the maxima trajectory.

struct CoherentContext {
  double sigma;
  std::complex<double> center1;
  std::complex<double> center2;
};

CoherentContext coherent_context(const SystemParams& params,
                                 const DampingEnvelope& env,
                                 const CoherentInit& init, double nbar,
                                 double t, const QuadratureConfig& quad = {});

double husimi_coherent(const CoherentContext& ctx, const PhasePoint& at);
double husimi_coherent(const SystemParams& params, const DampingEnvelope& env,
                       const CoherentInit& init, double nbar, double t,
                       const PhasePoint& at, const QuadratureConfig& quad = {});

// ---------------------------------------------------------------------------
// Number initial state |N> on oscillator 1, vacuum on oscillator 2,
// reservoirs at occupation nbar.

struct NumberStateContext {
  double sigma;            // blurred width 1 + nbar sin^2 G
  double thermal_weight;   // 1 - cos^2 G / sigma, in [0, 1)
  std::complex<double> f1, f2;        // drive response
  std::complex<double> retained;      // one-quantum survival amplitude
  std::complex<double> exchanged;     // one-quantum transfer amplitude

  // Overlap amplitude between the displaced phase point and the migrating
  // quantum; the Q value depends on the point only through |w|^2 and the
  // Gaussian factor.
  std::complex<double> cross_amplitude(const PhasePoint& at) const {
    return ((at.alpha1 - f1) * std::conj(retained) +
            (at.alpha2 - f2) * std::conj(exchanged)) /
           sigma;
  }
};

NumberStateContext number_state_context(const SystemParams& params,
                                        const DampingEnvelope& env,
                                        double nbar, double t,
                                        const QuadratureConfig& quad = {});

double husimi_number(const NumberStateContext& ctx, int photons,
                     const PhasePoint& at);
double husimi_number(const SystemParams& params, const DampingEnvelope& env,
                     int photons, double nbar, double t, const PhasePoint& at,
                     const QuadratureConfig& quad = {});

// Reduced (oscillator-2) distribution, marginalized in closed form.
double husimi_number_reduced(const NumberStateContext& ctx, int photons,
                             std::complex<double> alpha2);
double husimi_number_reduced(const SystemParams& params,
                             const DampingEnvelope& env, int photons,
                             double nbar, double t,
                             std::complex<double> alpha2,
                             const QuadratureConfig& quad = {});

// Generating functions in the bookkeeping variable y: Taylor coefficients in
// y at order N give the N-quantum distributions above.  Exposed for tests
// and cross-checks; valid while sigma - y (thermal_weight sigma + |retained|^2)
// stays positive.
double husimi_generating(const NumberStateContext& ctx, double y,
                         const PhasePoint& at);
double husimi_reduced_generating(const NumberStateContext& ctx, double y,
                                 std::complex<double> alpha2);

// ---------------------------------------------------------------------------
// Number-basis reconstruction for one oscillator whose Q is a round Gaussian
// of width sigma >= 1 centered at `center` (a displaced thermal state).

struct DensityMatrix {
  Eigen::MatrixXcd entries;
  double trace_deficit = 0.0;  // 1 - trace of the truncated matrix
  bool truncated = false;      // deficit exceeded 1e-8

  int dim() const { return static_cast<int>(entries.rows()); }
};

DensityMatrix reduced_density_matrix(std::complex<double> center, double sigma,
                                     int dim);

// Occupation distribution P_n, n = 0 .. count-1, for the same state.
// Matches the diagonal of reduced_density_matrix exactly.
std::vector<double> populations(std::complex<double> center, double nbar,
                                const DampingEnvelope& env, double t,
                                int count);

}  // namespace oscdyn
