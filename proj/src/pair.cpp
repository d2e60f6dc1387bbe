#include "oscdyn/pair.hpp"

#include <cmath>
#include <complex>

namespace oscdyn {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> carrier(double omega0, double t) {
  return std::exp(std::complex<double>(0.0, -omega0 * t));
}

}  // namespace

ModeCoefficients mode_coefficients(const SystemParams& params,
                                   const DampingEnvelope& env, double t) {
  params.check();
  if (t < 0.0) throw std::domain_error("mode_coefficients: t must be >= 0");
  const EnvelopeValue g = env.eval(t);
  const double kt = params.coupling * t;
  const std::complex<double> rot = carrier(params.omega0, t);
  return {
      rot * g.cos_phase * std::cos(kt),        // survives in place
      -kI * rot * g.cos_phase * std::sin(kt),  // swapped with the partner
      -kI * rot * g.sin_phase * std::cos(kt),  // leaked to own reservoir
      -rot * g.sin_phase * std::sin(kt),       // leaked via the partner
  };
}

DriveResponse drive_response(const SystemParams& params,
                             const DampingEnvelope& env, double t,
                             const QuadratureConfig& quad) {
  params.check();
  if (t < 0.0) throw std::domain_error("drive_response: t must be >= 0");
  if (params.drive.is_zero() || t == 0.0) return {{0.0, 0.0}, {0.0, 0.0}};

  const EnvelopeValue now = env.eval(t);
  const double delta = params.detuning();
  const double k = params.coupling;

  QuadratureConfig cfg = quad;
  cfg.max_frequency = std::abs(params.omega0) + std::abs(params.omega_drive) +
                      k + env.rate_scale() + params.drive.rate_scale();

  // Shared factor: detuning phase, drive amplitude, and the memory kernel
  // cos(G(t) - G(t')) expanded over the envelope samples.
  const auto common = [&](double u) {
    const EnvelopeValue then = env.eval(u);
    const double kernel =
        now.cos_phase * then.cos_phase + now.sin_phase * then.sin_phase;
    return std::exp(std::complex<double>(0.0, delta * u)) * kernel *
           params.drive.amplitude(u);
  };

  const std::complex<double> in_phase = oscillatory_integral(
      [&](double u) { return common(u) * std::cos(k * (t - u)); }, 0.0, t,
      cfg);
  const std::complex<double> quadrature_part = oscillatory_integral(
      [&](double u) { return common(u) * std::sin(k * (t - u)); }, 0.0, t,
      cfg);

  const std::complex<double> rot = carrier(params.omega0, t);
  return {-kI * rot * in_phase, -rot * quadrature_part};
}

PairEnergies pair_energies(const SystemParams& params,
                           const DampingEnvelope& env, double n1_init,
                           double n2_init, double t,
                           const QuadratureConfig& quad) {
  params.check();
  if (!(n1_init >= 0.0) || !(n2_init >= 0.0))
    throw std::domain_error("pair_energies: occupations must be nonnegative");
  if (t < 0.0) throw std::domain_error("pair_energies: t must be >= 0");

  const EnvelopeValue g = env.eval(t);
  const double kt = params.coupling * t;
  const double cg2 = g.cos_phase * g.cos_phase;
  const double sg2 = g.sin_phase * g.sin_phase;
  const double ck2 = std::cos(kt) * std::cos(kt);
  const double sk2 = std::sin(kt) * std::sin(kt);

  const DriveResponse f = drive_response(params, env, t, quad);

  return {
      cg2 * ck2 * n1_init + cg2 * sk2 * n2_init + sg2 * ck2 * params.nbar_b +
          sg2 * sk2 * params.nbar_c + std::norm(f.f1),
      cg2 * ck2 * n2_init + cg2 * sk2 * n1_init + sg2 * ck2 * params.nbar_c +
          sg2 * sk2 * params.nbar_b + std::norm(f.f2),
  };
}

}  // namespace oscdyn
