#include "oscdyn/oracle/mode_ode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oscdyn::oracle {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kDefaultSafety = 1e-3;

// Combined unknown Y = [U | d], one RK4 system for the transfer matrix and
// the drive displacement.
struct Network {
  SystemParams params;
  const DampingEnvelope* env;
  double clamp;  // earliest envelope-rate evaluation time
  Eigen::MatrixXd chain;  // n x n tridiagonal block, shared by both ladders

  Eigen::MatrixXcd rhs(double t, const Eigen::MatrixXcd& y) const {
    const int n = params.chain_size;
    const double g = env->coupling_rate(std::max(t, clamp));
    Eigen::MatrixXcd out(2 * n, 2 * n + 1);
    // M = [[C, gI], [gI, C]] applied blockwise; avoids forming M each call.
    out.topRows(n) = chain * y.topRows(n) + g * y.bottomRows(n);
    out.bottomRows(n) = g * y.topRows(n) + chain * y.bottomRows(n);
    out(0, 2 * n) += params.drive.amplitude(t) *
                     std::exp(-kI * params.omega_drive * t);
    return -kI * out;
  }
};

Network make_network(const SystemParams& params, const DampingEnvelope& env,
                     double clamp) {
  params.check();
  const int n = params.chain_size;
  Network net{params, &env, clamp, Eigen::MatrixXd::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    net.chain(i, i) = params.omega0;
    if (i + 1 < n) {
      net.chain(i, i + 1) = params.coupling;
      net.chain(i + 1, i) = params.coupling;
    }
  }
  return net;
}

double pick_step(const SystemParams& params, const DampingEnvelope& env,
                 const StepConfig& cfg) {
  if (cfg.dt > 0.0) return cfg.dt;
  const double safety = cfg.safety > 0.0 ? cfg.safety : kDefaultSafety;
  const double band = std::abs(params.omega0) + 2.0 * params.coupling +
                      std::abs(params.omega_drive) + env.rate_scale();
  return safety * 2.0 * std::numbers::pi / std::max(band, 1e-12);
}

void rk4_step(const Network& net, double t, double h, Eigen::MatrixXcd& y) {
  const Eigen::MatrixXcd k1 = net.rhs(t, y);
  const Eigen::MatrixXcd k2 = net.rhs(t + 0.5 * h, y + (0.5 * h) * k1);
  const Eigen::MatrixXcd k3 = net.rhs(t + 0.5 * h, y + (0.5 * h) * k2);
  const Eigen::MatrixXcd k4 = net.rhs(t + h, y + h * k3);
  y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

ModeODEState snapshot(const Eigen::MatrixXcd& y, double t, double norm_tol) {
  const int rows = static_cast<int>(y.rows());
  ModeODEState state;
  state.transfer = y.leftCols(rows);
  state.displacement = y.col(rows);
  state.t = t;
  state.unitarity_defect =
      (state.transfer * state.transfer.adjoint() -
       Eigen::MatrixXcd::Identity(rows, rows))
          .cwiseAbs()
          .maxCoeff();
  if (state.unitarity_defect > norm_tol)
    throw std::runtime_error(
        "linear_mode_oracle: unitarity drift " +
        std::to_string(state.unitarity_defect) + " at t = " +
        std::to_string(t) + "; reduce the step");
  return state;
}

}  // namespace

std::vector<ModeODEState> linear_mode_oracle_sweep(
    const SystemParams& params, const DampingEnvelope& env,
    const std::vector<double>& times, const StepConfig& cfg) {
  if (times.empty())
    throw std::invalid_argument("linear_mode_oracle_sweep: no times");
  for (size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0))
      throw std::invalid_argument(
          "linear_mode_oracle_sweep: times must be nonnegative");
    if (i > 0 && !(times[i] >= times[i - 1]))
      throw std::invalid_argument(
          "linear_mode_oracle_sweep: times must ascend");
  }

  const double h = pick_step(params, env, cfg);
  const Network net = make_network(params, env, 1e-3 * h);
  const int n = params.chain_size;

  // With automatic stepping, shrink the step wherever the instantaneous
  // envelope rate spikes (the memoryless envelope diverges at t = 0); an
  // explicit dt is honored verbatim so deliberately coarse runs stay coarse.
  const bool adaptive = !(cfg.dt > 0.0);
  const double safety = cfg.safety > 0.0 ? cfg.safety : kDefaultSafety;
  const double base_band = std::abs(params.omega0) + 2.0 * params.coupling +
                           std::abs(params.omega_drive);

  Eigen::MatrixXcd y(2 * n, 2 * n + 1);
  y.setZero();
  y.leftCols(2 * n).setIdentity();

  std::vector<ModeODEState> out;
  out.reserve(times.size());
  double t = 0.0;
  for (double target : times) {
    while (t < target) {
      double step = std::min(h, target - t);
      if (adaptive) {
        const double rate =
            std::abs(net.env->coupling_rate(std::max(t, net.clamp)));
        step = std::min(step, safety * 2.0 * std::numbers::pi /
                                  std::max(base_band + rate, 1e-12));
      }
      rk4_step(net, t, step, y);
      t += step;
    }
    out.push_back(snapshot(y, target, cfg.norm_tol));
  }
  return out;
}

ModeODEState linear_mode_oracle(const SystemParams& params,
                                const DampingEnvelope& env, double t,
                                const StepConfig& cfg) {
  return linear_mode_oracle_sweep(params, env, {t}, cfg).front();
}

Eigen::VectorXd mode_occupations(const ModeODEState& state,
                                 const Eigen::VectorXd& initial) {
  const int rows = static_cast<int>(state.transfer.rows());
  if (initial.size() != rows)
    throw std::invalid_argument(
        "mode_occupations: initial occupations must cover all modes");
  if (initial.minCoeff() < 0.0)
    throw std::invalid_argument("mode_occupations: occupations must be >= 0");
  Eigen::VectorXd out(rows);
  for (int i = 0; i < rows; ++i) {
    double acc = std::norm(state.displacement(i));
    for (int j = 0; j < rows; ++j)
      acc += std::norm(state.transfer(i, j)) * initial(j);
    out(i) = acc;
  }
  return out;
}

}  // namespace oscdyn::oracle
