#pragma once

#include <Eigen/Dense>
#include <vector>

#include "oscdyn/envelope.hpp"
#include "oscdyn/params.hpp"

// Brute-force reference propagators.  Nothing in the figure/data paths links
// this library; it exists so closed forms can be checked against direct
// integration.

namespace oscdyn::oracle {

struct StepConfig {
  double dt = 0.0;       // explicit step; 0 derives one from `safety`
  double safety = 0.0;   // step = safety * shortest period; 0 = module default
  double norm_tol = 1e-6;  // unitarity / norm drift beyond this aborts
};

// Heisenberg-picture transfer state of the linear 2n-mode network
// (modes ordered a_1..a_n, b_1..b_n):
//   a(t) = transfer a(0) + displacement.
struct ModeODEState {
  Eigen::MatrixXcd transfer;
  Eigen::VectorXcd displacement;
  double t = 0.0;
  double unitarity_defect = 0.0;  // max |(U U^+ - I)_ij|
};

ModeODEState linear_mode_oracle(const SystemParams& params,
                                const DampingEnvelope& env, double t,
                                const StepConfig& cfg = {});

// One integration pass with snapshots at the (ascending) requested times.
std::vector<ModeODEState> linear_mode_oracle_sweep(
    const SystemParams& params, const DampingEnvelope& env,
    const std::vector<double>& times, const StepConfig& cfg = {});

// <a_i^+ a_i>(t) given initial diagonal occupations of the 2n modes.
Eigen::VectorXd mode_occupations(const ModeODEState& state,
                                 const Eigen::VectorXd& initial);

}  // namespace oscdyn::oracle
