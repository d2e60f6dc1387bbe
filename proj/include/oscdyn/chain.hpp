#pragma once

#include <Eigen/Dense>
#include <complex>

#include "oscdyn/envelope.hpp"
#include "oscdyn/params.hpp"
#include "oscdyn/quadrature.hpp"

namespace oscdyn {

// Normal modes of the open n-site chain with on-site frequency omega0 and
// hop rate k0.  Closed forms:
//   frequencies[k-1] = omega0 + 2 k0 cos(k pi / (n+1)),      k = 1..n
//   transform(i-1, j-1) = sqrt(2/(n+1)) sin(i j pi / (n+1))
// transform is symmetric and orthogonal; it diagonalizes the tridiagonal
// coupling matrix on both the site and reservoir ladders.
struct ChainSpectrum {
  Eigen::VectorXd frequencies;
  Eigen::MatrixXd transform;

  int size() const { return static_cast<int>(frequencies.size()); }
};

ChainSpectrum chain_spectrum(int size, double omega0, double hop);

// Site-basis mode evolution at time t:
//   a_i(t) = sum_j system_map(i,j) a_j(0) + bath_map(i,j) b_j(0)
//          + displacement(i).
// Satisfies system_map system_map^+ + bath_map bath_map^+ = I.
struct ChainEvolution {
  Eigen::MatrixXcd system_map;
  Eigen::MatrixXcd bath_map;
  Eigen::VectorXcd displacement;
};

ChainEvolution chain_mode_evolution(const SystemParams& params,
                                    const DampingEnvelope& env, double t,
                                    const QuadratureConfig& quad = {});

// Site occupations <a_i^+ a_i>(t) for the vacuum-initialized chain with all
// reservoirs at occupation nbar_b.  Raw quanta; any k0^2/F^2 scaling is a
// reporting choice.
Eigen::VectorXd chain_excitations(const SystemParams& params,
                                  const DampingEnvelope& env, double t,
                                  const QuadratureConfig& quad = {});

}  // namespace oscdyn
