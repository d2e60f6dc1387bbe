#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace oscdyn {

// Real drive amplitude f(t).  The carrier e^{-i omega_drive t} is applied by
// the evolution code; this type models only the envelope.
class DriveSpec {
 public:
  DriveSpec() = default;  // no drive

  static DriveSpec zero() { return DriveSpec{}; }

  static DriveSpec constant(double amplitude) {
    DriveSpec d;
    if (amplitude != 0.0) {
      d.amplitude_ = [amplitude](double) { return amplitude; };
      d.zero_ = false;
    }
    return d;
  }

  // rate_scale: caller-declared bound on the envelope's own angular
  // frequency content, used for quadrature panel and ODE step sizing.
  static DriveSpec modulated(std::function<double(double)> amplitude,
                             double rate_scale) {
    if (!amplitude) throw std::invalid_argument("DriveSpec: null amplitude");
    if (!(rate_scale >= 0.0))
      throw std::invalid_argument("DriveSpec: rate_scale must be nonnegative");
    DriveSpec d;
    d.amplitude_ = std::move(amplitude);
    d.rate_scale_ = rate_scale;
    d.zero_ = false;
    return d;
  }

  double amplitude(double t) const { return zero_ ? 0.0 : amplitude_(t); }
  bool is_zero() const { return zero_; }
  double rate_scale() const { return rate_scale_; }

 private:
  std::function<double(double)> amplitude_;
  double rate_scale_ = 0.0;
  bool zero_ = true;
};

// Shared parameter block.  chain_size = 2 is the driven pair; larger values
// describe a nearest-neighbour chain with the drive on site 1.
struct SystemParams {
  double omega0 = 1.0;       // on-site oscillator frequency
  double coupling = 1.0;     // nearest-neighbour exchange rate
  double omega_drive = 1.0;  // drive carrier frequency
  DriveSpec drive;
  double nbar_b = 0.0;       // reservoir occupation behind oscillator 1
  double nbar_c = 0.0;       // reservoir occupation behind oscillator 2
  int chain_size = 2;

  double detuning() const { return omega0 - omega_drive; }

  void check() const {
    if (!(omega0 > 0.0) || !std::isfinite(omega0))
      throw std::invalid_argument("SystemParams: omega0 must be positive");
    if (!(coupling >= 0.0) || !std::isfinite(coupling))
      throw std::invalid_argument("SystemParams: coupling must be nonnegative");
    if (!std::isfinite(omega_drive))
      throw std::invalid_argument("SystemParams: omega_drive must be finite");
    if (!(nbar_b >= 0.0) || !(nbar_c >= 0.0))
      throw std::invalid_argument(
          "SystemParams: reservoir occupations must be nonnegative");
    if (chain_size < 1)
      throw std::invalid_argument("SystemParams: chain_size must be >= 1");
  }
};

// Mean thermal occupation of a mode at frequency omega, natural units
// (hbar = kB = 1).
inline double bose_occupation(double temperature, double omega) {
  if (!(omega > 0.0))
    throw std::domain_error("bose_occupation: omega must be positive");
  if (temperature < 0.0)
    throw std::domain_error("bose_occupation: temperature must be nonnegative");
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(omega / temperature);
}

}  // namespace oscdyn
