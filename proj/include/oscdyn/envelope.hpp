#pragma once

#include <functional>

namespace oscdyn {

struct EnvelopeValue {
  double cos_phase;  // cos G(t)
  double sin_phase;  // sin G(t)
};

// Accumulated reservoir-coupling phase G(t) = integral of g over [0, t].
//
//   constant   g(t) = g0        cos G = cos(g0 t), sin G = sin(g0 t)
//   markovian  decay rate gamma cos G = e^{-gamma t/2},
//                                sin G = +sqrt(1 - e^{-gamma t})
//   schedule   arbitrary g(t)   G by adaptive integration
//
// The markovian branch keeps sin G on the nonnegative root so that
// sin^2 G = 1 - e^{-gamma t} exactly.
class DampingEnvelope {
 public:
  enum class Mode { constant, markovian, schedule };

  static DampingEnvelope constant(double g0);
  static DampingEnvelope markovian(double gamma);
  // rate_scale: caller-declared bound on |g| and on g's own frequency
  // content, used for panel/step sizing.
  static DampingEnvelope schedule(std::function<double(double)> rate,
                                  double rate_scale);

  EnvelopeValue eval(double t) const;

  // Instantaneous g(t).  The markovian mapping is integrably singular at
  // t = 0+ and returns +inf there; integrators clamp their sample times.
  double coupling_rate(double t) const;

  double rate_scale() const { return rate_scale_; }
  Mode mode() const { return mode_; }
  double parameter() const { return parameter_; }  // g0 or gamma

 private:
  DampingEnvelope() = default;

  Mode mode_ = Mode::constant;
  double parameter_ = 0.0;
  double rate_scale_ = 0.0;
  std::function<double(double)> rate_;
};

EnvelopeValue envelope_eval(const DampingEnvelope& env, double t);

// Blurred phase-space width 1 + nbar sin^2 G(t) for reservoirs at equal
// occupation nbar.
double effective_occupation(double nbar, const DampingEnvelope& env, double t);

}  // namespace oscdyn
