#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "oscdyn/envelope.hpp"
#include "oscdyn/oracle/mode_ode.hpp"
#include "oscdyn/params.hpp"
#include "oscdyn/phase_space.hpp"

namespace oscdyn::oracle {

// State vector on a truncated product Fock space.  Mode 0 is the slowest
// index; amp(s) is the amplitude of the basis state whose occupations are the
// mixed-radix digits of s.  Modes are ordered a_1..a_n, b_1..b_n to match the
// linear-network layout.
struct FockState {
  std::vector<int> mode_dims;
  Eigen::VectorXcd amp;

  double norm() const { return amp.norm(); }
  int modes() const { return static_cast<int>(mode_dims.size()); }
};

FockState fock_basis_state(std::vector<int> dims,
                           const std::vector<int>& occupation);

// y = H(t) x in gather form: every output element reads only its basis
// neighbours, so the loop parallelizes without reductions.  `drive` is the
// instantaneous complex amplitude f(t) e^{-i omega_drive t} on mode 0.
void apply_hamiltonian(const std::vector<int>& dims,
                       const std::complex<double>* x, std::complex<double>* y,
                       double omega0, double hop, double g,
                       std::complex<double> drive);
void apply_hamiltonian_serial(const std::vector<int>& dims,
                              const std::complex<double>* x,
                              std::complex<double>* y, double omega0,
                              double hop, double g,
                              std::complex<double> drive);

// RK4 propagation under the full truncated Hamiltonian.  The norm is checked
// after every step; drifting past cfg.norm_tol aborts with an error.
FockState fock_evolve(const SystemParams& params, const DampingEnvelope& env,
                      const FockState& init, double t,
                      const StepConfig& cfg = {});
std::vector<FockState> fock_evolve_sweep(const SystemParams& params,
                                         const DampingEnvelope& env,
                                         const FockState& init,
                                         const std::vector<double>& times,
                                         const StepConfig& cfg = {});

// Reduced density matrix over the kept modes (ascending mode indices).
DensityMatrix partial_trace(const FockState& state,
                            const std::vector<int>& keep);

// Truncated coherent-state column <n|alpha>, n = 0 .. dim-1.
Eigen::VectorXcd coherent_overlap(int dim, std::complex<double> alpha);

// Q(alpha) = <alpha| rho |alpha> / pi on the truncated basis.
double husimi_from_state(const DensityMatrix& rho, std::complex<double> alpha);

}  // namespace oscdyn::oracle
