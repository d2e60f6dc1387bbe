#include "oscdyn/chain.hpp"

#include <cmath>
#include <numbers>

namespace oscdyn {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

ChainSpectrum chain_spectrum(int size, double omega0, double hop) {
  if (size < 1) throw std::invalid_argument("chain_spectrum: size must be >= 1");
  if (!std::isfinite(omega0) || !std::isfinite(hop))
    throw std::invalid_argument("chain_spectrum: parameters must be finite");

  ChainSpectrum out;
  out.frequencies.resize(size);
  out.transform.resize(size, size);
  const double step = std::numbers::pi / (size + 1);
  const double norm = std::sqrt(2.0 / (size + 1));
  for (int k = 1; k <= size; ++k)
    out.frequencies(k - 1) = omega0 + 2.0 * hop * std::cos(k * step);
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j)
      out.transform(i - 1, j - 1) = norm * std::sin(i * j * step);
  return out;
}

ChainEvolution chain_mode_evolution(const SystemParams& params,
                                    const DampingEnvelope& env, double t,
                                    const QuadratureConfig& quad) {
  params.check();
  if (!(t >= 0.0))
    throw std::invalid_argument("chain_mode_evolution: t must be nonnegative");

  const int n = params.chain_size;
  const ChainSpectrum spec =
      chain_spectrum(n, params.omega0, params.coupling);
  const EnvelopeValue now = env.eval(t);

  // Per-mode propagators: the damping envelope is mode independent, only the
  // free rotation differs.
  Eigen::VectorXcd u(n), v(n);
  for (int k = 0; k < n; ++k) {
    const std::complex<double> rot =
        std::exp(-kI * spec.frequencies(k) * t);
    u(k) = rot * now.cos_phase;
    v(k) = -kI * rot * now.sin_phase;
  }

  ChainEvolution out;
  out.system_map = spec.transform * u.asDiagonal() * spec.transform;
  out.bath_map = spec.transform * v.asDiagonal() * spec.transform;
  out.displacement = Eigen::VectorXcd::Zero(n);
  if (params.drive.is_zero() || t == 0.0) return out;

  QuadratureConfig cfg = quad;
  double band = std::abs(params.omega_drive) + env.rate_scale() +
                params.drive.rate_scale();
  for (int k = 0; k < n; ++k)
    band = std::max(band, std::abs(spec.frequencies(k)) +
                              std::abs(params.omega_drive) + env.rate_scale() +
                              params.drive.rate_scale());
  cfg.max_frequency = std::max(cfg.max_frequency, band);

  // Drive enters on site 1; each eigenmode accumulates its own retarded
  // response with the shared damping kernel cos[G(t) - G(u)].
  Eigen::VectorXcd zeta(n);
  for (int k = 0; k < n; ++k) {
    const double lambda = spec.frequencies(k);
    const std::complex<double> integral = oscillatory_integral(
        [&](double s) {
          const EnvelopeValue then = env.eval(s);
          const double kernel =
              now.cos_phase * then.cos_phase + now.sin_phase * then.sin_phase;
          return std::exp(-kI * (lambda * (t - s) + params.omega_drive * s)) *
                 kernel * params.drive.amplitude(s);
        },
        0.0, t, cfg);
    zeta(k) = spec.transform(k, 0) * integral;
  }
  out.displacement = -kI * (spec.transform * zeta);
  return out;
}

Eigen::VectorXd chain_excitations(const SystemParams& params,
                                  const DampingEnvelope& env, double t,
                                  const QuadratureConfig& quad) {
  const ChainEvolution ev = chain_mode_evolution(params, env, t, quad);
  const int n = params.chain_size;
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) {
    double quanta = params.nbar_b * ev.bath_map.row(i).squaredNorm();
    quanta += std::norm(ev.displacement(i));
    out(i) = quanta;
  }
  return out;
}

}  // namespace oscdyn
