#pragma once

#include <complex>

#include "oscdyn/envelope.hpp"
#include "oscdyn/params.hpp"
#include "oscdyn/quadrature.hpp"

namespace oscdyn {

// Heisenberg-picture decomposition of oscillator 1's mode at time t over the
// initial system and reservoir modes:
//   a1(t) = retained a1(0) + exchanged a2(0)
//         + bath_retained b(0) + bath_exchanged c(0) + drive response.
// Oscillator 2 uses the same coefficients with the roles swapped.
// |retained|^2 + |exchanged|^2 + |bath_retained|^2 + |bath_exchanged|^2 = 1.
struct ModeCoefficients {
  std::complex<double> retained;
  std::complex<double> exchanged;
  std::complex<double> bath_retained;
  std::complex<double> bath_exchanged;
};

ModeCoefficients mode_coefficients(const SystemParams& params,
                                   const DampingEnvelope& env, double t);

// Coherent displacement accumulated from the drive, per oscillator.
struct DriveResponse {
  std::complex<double> f1;
  std::complex<double> f2;
};

DriveResponse drive_response(const SystemParams& params,
                             const DampingEnvelope& env, double t,
                             const QuadratureConfig& quad = {});

// Mean excitation numbers <a_i^+ a_i>(t) in units of the on-site quantum.
struct PairEnergies {
  double first;
  double second;
};

// n1_init, n2_init: initial diagonal occupations of the two oscillators
// (thermal or number states; only the mean enters).
PairEnergies pair_energies(const SystemParams& params,
                           const DampingEnvelope& env, double n1_init,
                           double n2_init, double t,
                           const QuadratureConfig& quad = {});

}  // namespace oscdyn
