#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oscdyn/oracle/fock.hpp"
#include "oscdyn/pair.hpp"
#include "testlib.hpp"

using namespace oscdyn;
using oracle::FockState;
using oracle::StepConfig;
using cplx = std::complex<double>;

namespace {

double occupation(const FockState& state, int mode) {
  const long size = state.amp.size();
  long stride = 1;
  for (int m = state.modes() - 1; m > mode; --m) stride *= state.mode_dims[m];
  const int dim = state.mode_dims[mode];
  double sum = 0.0;
  for (long s = 0; s < size; ++s)
    sum += std::norm(state.amp(s)) * ((s / stride) % dim);
  return sum;
}

SystemParams fock_params(double hop, double omega_drive, double amp) {
  SystemParams p;
  p.omega0 = 1.0;
  p.coupling = hop;
  p.omega_drive = omega_drive;
  if (amp != 0.0) p.drive = DriveSpec::constant(amp);
  return p;
}

}  // namespace

TEST_CASE("diagonal hamiltonian only rotates the phase") {
  const auto p = fock_params(0.0, 1.0, 0.0);
  const auto init = oracle::fock_basis_state({3, 3, 1, 1}, {1, 0, 0, 0});
  const double t = 1.7;
  const auto out =
      oracle::fock_evolve(p, DampingEnvelope::constant(0.0), init, t);
  const long idx = 3;  // |1,0,0,0> with strides (3,1,1,1)
  CHECK(std::abs(out.amp(idx) - std::exp(cplx{0.0, -p.omega0 * t})) <= 1e-8);
  CHECK(std::abs(out.norm() - 1.0) <= 1e-9);
}

TEST_CASE("one quantum swaps across the pair") {
  const auto p = fock_params(1.0, 1.0, 0.0);
  const auto env = DampingEnvelope::constant(0.0);
  const auto init = oracle::fock_basis_state({6, 6, 1, 1}, {1, 0, 0, 0});
  const auto states =
      oracle::fock_evolve_sweep(p, env, init, {0.25 * M_PI, 0.5 * M_PI});
  CHECK(std::abs(occupation(states[0], 0) - 0.5) <= 1e-6);
  CHECK(std::abs(occupation(states[0], 1) - 0.5) <= 1e-6);
  CHECK(std::abs(occupation(states[1], 0) - 0.0) <= 1e-6);
  CHECK(std::abs(occupation(states[1], 1) - 1.0) <= 1e-6);
}

TEST_CASE("driven vacuum builds the closed-form coherent product") {
  const auto p = fock_params(1.0, 0.8, 0.4);
  const auto env = DampingEnvelope::constant(0.0);
  const double t = 2.0;
  const auto init = oracle::fock_basis_state({10, 10, 1, 1}, {0, 0, 0, 0});
  const auto out = oracle::fock_evolve(p, env, init, t);

  const auto f = drive_response(p, env, t);
  CHECK(std::abs(occupation(out, 0) - std::norm(f.f1)) <= 1e-6);
  CHECK(std::abs(occupation(out, 1) - std::norm(f.f2)) <= 1e-6);

  const Eigen::VectorXcd c1 = oracle::coherent_overlap(10, f.f1);
  const Eigen::VectorXcd c2 = oracle::coherent_overlap(10, f.f2);
  Eigen::VectorXcd product(100);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) product(i * 10 + j) = c1(i) * c2(j);
  const double fidelity = std::abs(product.dot(out.amp));  // dot conjugates
  CHECK(fidelity >= 1.0 - 1e-6);
}

TEST_CASE("partial trace of a product state is the factor projector") {
  FockState state;
  state.mode_dims = {5, 4};
  const Eigen::VectorXcd v1 = oracle::coherent_overlap(5, cplx{0.4, -0.3});
  const Eigen::VectorXcd v2 = oracle::coherent_overlap(4, cplx{-0.2, 0.5});
  const double scale = 1.0 / (v1.norm() * v2.norm());
  state.amp.resize(20);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) state.amp(i * 4 + j) = v1(i) * v2(j) * scale;

  const auto rho1 = oracle::partial_trace(state, {0});
  const Eigen::VectorXcd u1 = v1 / v1.norm();
  CHECK((rho1.entries - u1 * u1.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
  const auto rho2 = oracle::partial_trace(state, {1});
  const Eigen::VectorXcd u2 = v2 / v2.norm();
  CHECK((rho2.entries - u2 * u2.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("entangled pair traces to the maximally mixed qubit") {
  FockState bell;
  bell.mode_dims = {2, 2};
  bell.amp = Eigen::VectorXcd::Zero(4);
  bell.amp(0) = 1.0 / std::sqrt(2.0);
  bell.amp(3) = 1.0 / std::sqrt(2.0);
  const auto rho = oracle::partial_trace(bell, {0});
  CHECK(std::abs(rho.entries(0, 0).real() - 0.5) <= 1e-15);
  CHECK(std::abs(rho.entries(1, 1).real() - 0.5) <= 1e-15);
  CHECK(std::abs(rho.entries(0, 1)) <= 1e-15);
}

TEST_CASE("husimi projection of simple states") {
  FockState vac;
  vac.mode_dims = {12};
  vac.amp = Eigen::VectorXcd::Zero(12);
  vac.amp(0) = 1.0;
  const auto rho_vac = oracle::partial_trace(vac, {0});
  FockState one = vac;
  one.amp(0) = 0.0;
  one.amp(1) = 1.0;
  const auto rho_one = oracle::partial_trace(one, {0});
  for (cplx a : {cplx{0.3, 0.4}, cplx{-1.1, 0.2}, cplx{0.0, 0.0}}) {
    const double a2 = std::norm(a);
    CHECK(std::abs(oracle::husimi_from_state(rho_vac, a) -
                   std::exp(-a2) / M_PI) <= 1e-12);
    CHECK(std::abs(oracle::husimi_from_state(rho_one, a) -
                   a2 * std::exp(-a2) / M_PI) <= 1e-12);
  }

  FockState coh;
  coh.mode_dims = {25};
  coh.amp = oracle::coherent_overlap(25, cplx{0.6, -0.4});
  const auto rho_coh = oracle::partial_trace(coh, {0});
  for (cplx a : {cplx{0.5, -0.5}, cplx{1.2, 0.1}})
    CHECK(std::abs(oracle::husimi_from_state(rho_coh, a) -
                   std::exp(-std::norm(a - cplx{0.6, -0.4})) / M_PI) <= 1e-10);
}

TEST_CASE("gather form matches the serial reference bit for bit") {
  const std::vector<int> dims{5, 4, 3, 2};
  const long size = 5 * 4 * 3 * 2;
  std::mt19937_64 rng(97);
  Eigen::VectorXcd x(size), ya(size), yb(size);
  for (long s = 0; s < size; ++s)
    x(s) = cplx{testlib::uniform(rng, -1, 1), testlib::uniform(rng, -1, 1)};
  const cplx drive{0.3, 0.2};
  oracle::apply_hamiltonian(dims, x.data(), ya.data(), 1.1, 0.7, 0.25, drive);
  oracle::apply_hamiltonian_serial(dims, x.data(), yb.data(), 1.1, 0.7, 0.25,
                                   drive);
  for (long s = 0; s < size; ++s) CHECK(ya(s) == yb(s));
}

TEST_CASE("truncated hamiltonian is hermitian") {
  const std::vector<int> dims{4, 4, 3, 3};
  const long size = 4 * 4 * 3 * 3;
  std::mt19937_64 rng(103);
  Eigen::VectorXcd x(size), y(size), hx(size), hy(size);
  for (long s = 0; s < size; ++s) {
    x(s) = cplx{testlib::uniform(rng, -1, 1), testlib::uniform(rng, -1, 1)};
    y(s) = cplx{testlib::uniform(rng, -1, 1), testlib::uniform(rng, -1, 1)};
  }
  const cplx drive{-0.4, 0.6};
  oracle::apply_hamiltonian(dims, x.data(), hx.data(), 0.9, 0.6, 0.3, drive);
  oracle::apply_hamiltonian(dims, y.data(), hy.data(), 0.9, 0.6, 0.3, drive);
  const cplx lhs = y.dot(hx);  // <y|H x>
  const cplx rhs = std::conj(x.dot(hy));
  CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
}

TEST_CASE("fock oracle validates its inputs") {
  CHECK_THROWS_AS(oracle::fock_basis_state({4, 4}, {1, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle::fock_basis_state({4, 4}, {1, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle::fock_basis_state({4, 4}, {-1, 0}),
                  std::invalid_argument);

  Eigen::VectorXcd tiny(1);
  tiny << 1.0;
  Eigen::VectorXcd out(1);
  CHECK_THROWS_AS(oracle::apply_hamiltonian({3, 3, 3}, tiny.data(), out.data(),
                                            1.0, 0.5, 0.2, cplx{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      oracle::apply_hamiltonian({1024, 1024, 1, 1}, tiny.data(), out.data(),
                                1.0, 0.5, 0.2, cplx{}),
      std::invalid_argument);

  const auto p = fock_params(1.0, 1.0, 0.0);
  const auto env = DampingEnvelope::constant(0.0);
  const auto init = oracle::fock_basis_state({4, 4, 1, 1}, {1, 0, 0, 0});
  CHECK_THROWS_AS(oracle::fock_evolve_sweep(p, env, init, {2.0, 1.0}),
                  std::invalid_argument);
  StepConfig wild;
  wild.dt = 0.9;
  CHECK_THROWS_AS(oracle::fock_evolve(p, env, init, 30.0, wild),
                  std::runtime_error);
}
