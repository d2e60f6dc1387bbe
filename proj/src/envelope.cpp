#include "oscdyn/envelope.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "oscdyn/quadrature.hpp"

namespace oscdyn {

DampingEnvelope DampingEnvelope::constant(double g0) {
  if (!(g0 >= 0.0) || !std::isfinite(g0))
    throw std::invalid_argument("DampingEnvelope: g0 must be nonnegative");
  DampingEnvelope env;
  env.mode_ = Mode::constant;
  env.parameter_ = g0;
  env.rate_scale_ = g0;
  return env;
}

DampingEnvelope DampingEnvelope::markovian(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("DampingEnvelope: gamma must be positive");
  DampingEnvelope env;
  env.mode_ = Mode::markovian;
  env.parameter_ = gamma;
  env.rate_scale_ = gamma;
  return env;
}

DampingEnvelope DampingEnvelope::schedule(std::function<double(double)> rate,
                                          double rate_scale) {
  if (!rate) throw std::invalid_argument("DampingEnvelope: null rate");
  if (!(rate_scale >= 0.0))
    throw std::invalid_argument(
        "DampingEnvelope: rate_scale must be nonnegative");
  DampingEnvelope env;
  env.mode_ = Mode::schedule;
  env.rate_scale_ = rate_scale;
  env.rate_ = std::move(rate);
  return env;
}

EnvelopeValue DampingEnvelope::eval(double t) const {
  if (t < 0.0) throw std::domain_error("DampingEnvelope: t must be >= 0");
  switch (mode_) {
    case Mode::constant: {
      const double phase = parameter_ * t;
      return {std::cos(phase), std::sin(phase)};
    }
    case Mode::markovian: {
      // cos^2 + sin^2 = e^{-gamma t} + (1 - e^{-gamma t}) = 1 exactly.
      const double decay = std::exp(-0.5 * parameter_ * t);
      return {decay, std::sqrt(std::max(0.0, 1.0 - decay * decay))};
    }
    case Mode::schedule: {
      if (t == 0.0) return {1.0, 0.0};
      QuadratureConfig quad;
      quad.abs_tol = 1e-13;
      quad.rel_tol = 1e-13;
      quad.max_frequency = rate_scale_;
      const double phase =
          oscillatory_integral([this](double u) { return rate_(u); }, 0.0, t,
                               quad)
              .real();
      return {std::cos(phase), std::sin(phase)};
    }
  }
  throw std::logic_error("DampingEnvelope: bad mode");
}

double DampingEnvelope::coupling_rate(double t) const {
  if (t < 0.0) throw std::domain_error("DampingEnvelope: t must be >= 0");
  switch (mode_) {
    case Mode::constant:
      return parameter_;
    case Mode::markovian: {
      // g = G'(t) for cos G = e^{-gamma t/2}; diverges like 1/sqrt(t) at 0.
      const double decay = std::exp(-0.5 * parameter_ * t);
      return 0.5 * parameter_ * decay /
             std::sqrt(std::max(0.0, 1.0 - decay * decay));
    }
    case Mode::schedule:
      return rate_(t);
  }
  throw std::logic_error("DampingEnvelope: bad mode");
}

EnvelopeValue envelope_eval(const DampingEnvelope& env, double t) {
  return env.eval(t);
}

double effective_occupation(double nbar, const DampingEnvelope& env,
                            double t) {
  if (!(nbar >= 0.0))
    throw std::domain_error("effective_occupation: nbar must be nonnegative");
  const double s = env.eval(t).sin_phase;
  return 1.0 + nbar * s * s;
}

}  // namespace oscdyn
