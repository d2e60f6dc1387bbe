#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oscdyn/pair.hpp"
#include "testlib.hpp"

using namespace oscdyn;
using cplx = std::complex<double>;

namespace {

SystemParams base_params() {
  SystemParams p;
  p.omega0 = 1.0;
  p.coupling = 1.0;
  p.omega_drive = 1.0;
  return p;
}

double norm4(const ModeCoefficients& m) {
  return std::norm(m.retained) + std::norm(m.exchanged) +
         std::norm(m.bath_retained) + std::norm(m.bath_exchanged);
}

}  // namespace

TEST_CASE("mode coefficients start as the identity") {
  const auto m = mode_coefficients(base_params(),
                                   DampingEnvelope::markovian(0.4), 0.0);
  CHECK(std::abs(m.retained - 1.0) <= 1e-15);
  CHECK(std::abs(m.exchanged) <= 1e-15);
  CHECK(std::abs(m.bath_retained) <= 1e-15);
  CHECK(std::abs(m.bath_exchanged) <= 1e-15);
}

TEST_CASE("undamped quarter period swaps the oscillators") {
  auto p = base_params();
  const double t = 0.5 * M_PI;  // kt = pi/2
  const auto m = mode_coefficients(p, DampingEnvelope::constant(0.0), t);
  CHECK(std::abs(m.retained) <= 1e-15);
  // -i e^{-i omega0 t} sin kt = -i e^{-i pi/2} = -1
  CHECK(std::abs(m.exchanged - cplx{-1.0, 0.0}) <= 1e-14);
  CHECK(std::abs(m.bath_retained) <= 1e-15);
  CHECK(std::abs(m.bath_exchanged) <= 1e-15);
}

TEST_CASE("coefficient norms preserve the commutator") {
  std::mt19937_64 rng(31);
  auto p = base_params();
  p.omega0 = 1.3;
  p.coupling = 0.8;
  const DampingEnvelope envs[] = {DampingEnvelope::constant(0.4),
                                  DampingEnvelope::markovian(0.7)};
  for (const auto& env : envs)
    for (int i = 0; i < 50; ++i) {
      const double t = testlib::uniform(rng, 0.0, 20.0);
      CHECK(std::abs(norm4(mode_coefficients(p, env, t)) - 1.0) <= 1e-12);
    }
}

TEST_CASE("no drive means no displacement") {
  auto p = base_params();
  p.drive = DriveSpec::zero();
  const auto f =
      drive_response(p, DampingEnvelope::markovian(0.5), 3.7);
  CHECK(f.f1 == cplx{0.0, 0.0});
  CHECK(f.f2 == cplx{0.0, 0.0});
}

TEST_CASE("resonant undamped displacement has a closed antiderivative") {
  auto p = base_params();
  p.omega0 = 1.4;
  p.omega_drive = 1.4;  // zero detuning
  p.coupling = 0.9;
  const double amp = 0.6;
  p.drive = DriveSpec::constant(amp);
  const auto env = DampingEnvelope::constant(0.0);
  for (double t : {0.7, 2.9, 8.1}) {
    const auto f = drive_response(p, env, t);
    const cplx rot = std::exp(cplx{0.0, -p.omega0 * t});
    const cplx want1 = cplx{0.0, -1.0} * rot * amp *
                       (std::sin(p.coupling * t) / p.coupling);
    const cplx want2 =
        -rot * amp * ((1.0 - std::cos(p.coupling * t)) / p.coupling);
    CHECK(std::abs(f.f1 - want1) <= 1e-9);
    CHECK(std::abs(f.f2 - want2) <= 1e-9);
  }
}

TEST_CASE("detuning equal to the exchange rate grows secularly") {
  auto p = base_params();
  p.omega_drive = p.omega0 - p.coupling;
  const double amp = 0.3;
  p.drive = DriveSpec::constant(amp);
  const auto env = DampingEnvelope::constant(0.0);
  const double t = 60.0;
  const auto f = drive_response(p, env, t);
  // |f2| = amp t / 2 up to a bounded remainder <= amp / (2k)
  CHECK(std::abs(std::abs(f.f2) - 0.5 * amp * t) <=
        0.5 * amp / p.coupling + 1e-6);
}

TEST_CASE("energies start from the initial occupations") {
  auto p = base_params();
  p.drive = DriveSpec::constant(0.8);
  p.nbar_b = 0.9;
  p.nbar_c = 0.2;
  const auto e =
      pair_energies(p, DampingEnvelope::markovian(0.6), 1.7, 0.4, 0.0);
  CHECK(std::abs(e.first - 1.7) <= 1e-12);
  CHECK(std::abs(e.second - 0.4) <= 1e-12);
}

TEST_CASE("undriven closed pair only exchanges energy") {
  auto p = base_params();
  p.omega0 = 1.2;
  p.coupling = 0.9;
  const auto env = DampingEnvelope::constant(0.3);
  std::mt19937_64 rng(77);
  const double n1 = 1.4, n2 = 0.6;
  for (int i = 0; i < 25; ++i) {
    const double t = testlib::uniform(rng, 0.0, 15.0);
    const auto e = pair_energies(p, env, n1, n2, t);
    const double cg = std::cos(0.3 * t);
    CHECK(std::abs(e.first + e.second - cg * cg * (n1 + n2)) <= 1e-12);
  }
}

TEST_CASE("equal reservoirs thermalize the markovian pair") {
  auto p = base_params();
  p.nbar_b = 1.3;
  p.nbar_c = 1.3;
  const auto env = DampingEnvelope::markovian(0.5);
  const auto e = pair_energies(p, env, 2.0, 0.1, 100.0);
  CHECK(std::abs(e.first - 1.3) <= 1e-8);
  CHECK(std::abs(e.second - 1.3) <= 1e-8);
}

TEST_CASE("resonant transfer peaks at four drive quanta") {
  auto p = base_params();
  p.drive = DriveSpec::constant(1.0);
  const auto env = DampingEnvelope::constant(0.0);
  double peak = 0.0;
  for (int i = 0; i <= 628; ++i) {
    const double t = 2.0 * M_PI * i / 628.0;
    const auto e = pair_energies(p, env, 0.0, 0.0, t);
    const double want = std::pow(1.0 - std::cos(t), 2.0);
    CHECK(std::abs(e.second - want) <= 1e-9);
    peak = std::max(peak, e.second);
  }
  CHECK(std::abs(peak - 4.0) <= 1e-4);
}

TEST_CASE("off-resonant transfer stays bounded") {
  auto p = base_params();
  p.omega_drive = p.omega0 - 1.2 * p.coupling;
  p.drive = DriveSpec::constant(1.0);
  const auto env = DampingEnvelope::constant(0.0);
  for (int i = 0; i <= 120; ++i) {
    const auto e = pair_energies(p, env, 0.0, 0.0, 0.5 * i);
    CHECK(e.second < 33.0);
  }
}

TEST_CASE("quadrature failures surface from the drive response") {
  auto p = base_params();
  p.drive = DriveSpec::constant(1.0);
  QuadratureConfig quad;
  quad.max_panels = 2;
  CHECK_THROWS_AS(
      drive_response(p, DampingEnvelope::constant(0.0), 50.0, quad),
      AccuracyError);
}

TEST_CASE("parameter validation") {
  SystemParams p = base_params();
  p.omega0 = 0.0;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  p = base_params();
  p.coupling = -1.0;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  p = base_params();
  p.nbar_b = -0.1;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  p = base_params();
  p.chain_size = 0;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  CHECK(bose_occupation(0.0, 1.0) == 0.0);
  CHECK(bose_occupation(1.0, 1.0) ==
        doctest::Approx(1.0 / std::expm1(1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(bose_occupation(1.0, 0.0), std::domain_error);
}
