#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oscdyn/phase_space.hpp"
#include "testlib.hpp"

using namespace oscdyn;
using cplx = std::complex<double>;

namespace {

SystemParams driven_params() {
  SystemParams p;
  p.omega0 = 1.0;
  p.coupling = 0.8;
  p.omega_drive = 0.6;
  p.drive = DriveSpec::constant(0.5);
  return p;
}

}  // namespace

TEST_CASE("maxima trajectory starts at the initial amplitudes") {
  const CoherentInit init{cplx{0.7, -0.2}, cplx{-0.3, 0.5}};
  const auto at = maxima_trajectory(driven_params(),
                                    DampingEnvelope::markovian(0.4), init, 0.0);
  CHECK(std::abs(at.alpha1 - init.alpha0) <= 1e-14);
  CHECK(std::abs(at.alpha2 - init.beta0) <= 1e-14);
}

TEST_CASE("quarter period swaps the coherent amplitudes") {
  SystemParams p;
  p.omega0 = 1.0;
  p.coupling = 1.0;
  const double t = 0.5 * M_PI;
  const CoherentInit init{cplx{0.9, 0.1}, cplx{-0.4, 0.3}};
  const auto at =
      maxima_trajectory(p, DampingEnvelope::constant(0.0), init, t);
  const cplx swap = cplx{0.0, -1.0} * std::exp(cplx{0.0, -t});
  CHECK(std::abs(at.alpha1 - swap * init.beta0) <= 1e-12);
  CHECK(std::abs(at.alpha2 - swap * init.alpha0) <= 1e-12);
}

TEST_CASE("coherent context carries the maxima and the blurred width") {
  const auto p = driven_params();
  const auto env = DampingEnvelope::markovian(0.7);
  const CoherentInit init{cplx{0.2, 0.4}, cplx{0.0, -0.6}};
  const double nbar = 1.2, t = 1.9;
  const auto ctx = coherent_context(p, env, init, nbar, t);
  const auto at = maxima_trajectory(p, env, init, t);
  CHECK(std::abs(ctx.center1 - at.alpha1) <= 1e-13);
  CHECK(std::abs(ctx.center2 - at.alpha2) <= 1e-13);
  const double s = env.eval(t).sin_phase;
  CHECK(ctx.sigma == doctest::Approx(1.0 + nbar * s * s).epsilon(1e-13));
}

TEST_CASE("coherent Q peaks at the center with height 1 / (pi sigma)^2") {
  const auto p = driven_params();
  const auto env = DampingEnvelope::markovian(0.5);
  const CoherentInit init{cplx{0.7, -0.2}, cplx{-0.3, 0.5}};
  const auto ctx = coherent_context(p, env, init, 0.9, 1.3);
  const double peak = husimi_coherent(ctx, {ctx.center1, ctx.center2});
  CHECK(peak == doctest::Approx(1.0 / (M_PI * M_PI * ctx.sigma * ctx.sigma))
                    .epsilon(1e-12));
  CHECK(husimi_coherent(ctx, {ctx.center1 + 0.5, ctx.center2}) < peak);
  CHECK(husimi_coherent(ctx, {ctx.center1, ctx.center2 - cplx{0.0, 0.8}}) <
        peak);
}

TEST_CASE("initial coherent Q is the bare product of gaussians") {
  const CoherentInit init{cplx{0.5, 0.5}, cplx{-1.0, 0.2}};
  const auto ctx = coherent_context(driven_params(),
                                    DampingEnvelope::constant(0.0), init, 0.0,
                                    0.0);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const PhasePoint at{cplx{testlib::uniform(rng, -2, 2),
                             testlib::uniform(rng, -2, 2)},
                        cplx{testlib::uniform(rng, -2, 2),
                             testlib::uniform(rng, -2, 2)}};
    const double want = std::exp(-std::norm(at.alpha1 - init.alpha0) -
                                 std::norm(at.alpha2 - init.beta0)) /
                        (M_PI * M_PI);
    CHECK(husimi_coherent(ctx, at) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("coherent Q separates into single-oscillator factors") {
  const auto ctx = coherent_context(
      driven_params(), DampingEnvelope::markovian(0.6),
      CoherentInit{cplx{0.3, -0.1}, cplx{0.2, 0.6}}, 0.7, 2.2);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const cplx a{testlib::uniform(rng, -2, 2), testlib::uniform(rng, -2, 2)};
    const cplx b{testlib::uniform(rng, -2, 2), testlib::uniform(rng, -2, 2)};
    const cplx c{testlib::uniform(rng, -2, 2), testlib::uniform(rng, -2, 2)};
    const cplx d{testlib::uniform(rng, -2, 2), testlib::uniform(rng, -2, 2)};
    const double lhs = husimi_coherent(ctx, {a, b}) * husimi_coherent(ctx, {c, d});
    const double rhs = husimi_coherent(ctx, {a, d}) * husimi_coherent(ctx, {c, b});
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("zero-quantum number state matches the vacuum coherent Q") {
  const auto p = driven_params();
  const auto env = DampingEnvelope::markovian(0.4);
  const double nbar = 0.5, t = 1.6;
  const auto nctx = number_state_context(p, env, nbar, t);
  const auto cctx = coherent_context(p, env, CoherentInit{}, nbar, t);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const PhasePoint at{cplx{testlib::uniform(rng, -2, 2),
                             testlib::uniform(rng, -2, 2)},
                        cplx{testlib::uniform(rng, -2, 2),
                             testlib::uniform(rng, -2, 2)}};
    CHECK(husimi_number(nctx, 0, at) ==
          doctest::Approx(husimi_coherent(cctx, at)).epsilon(1e-12));
  }
}

TEST_CASE("single-quantum Q has the laguerre-free closed form") {
  const auto ctx = number_state_context(driven_params(),
                                        DampingEnvelope::markovian(0.5), 0.8,
                                        1.4);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const PhasePoint at{cplx{testlib::uniform(rng, -2, 2),
                             testlib::uniform(rng, -2, 2)},
                        cplx{testlib::uniform(rng, -2, 2),
                             testlib::uniform(rng, -2, 2)}};
    const double gauss = husimi_number(ctx, 0, at);
    const double w2 = std::norm(ctx.cross_amplitude(at));
    CHECK(husimi_number(ctx, 1, at) ==
          doctest::Approx(gauss * (ctx.thermal_weight + w2)).epsilon(1e-11));
  }
}

TEST_CASE("reduced single-quantum Q matches its explicit expansion") {
  const auto ctx = number_state_context(driven_params(),
                                        DampingEnvelope::markovian(0.5), 0.8,
                                        1.4);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    const cplx a2{testlib::uniform(rng, -2.5, 2.5),
                  testlib::uniform(rng, -2.5, 2.5)};
    const double s = ctx.sigma;
    const double eta2 = std::norm(a2 - ctx.f2);
    const double a = ctx.thermal_weight * s + std::norm(ctx.retained);
    const double c = std::norm(ctx.exchanged) * eta2 / s;
    const double want =
        std::exp(-eta2 / s) * (a / (s * s) + c / (s * s)) / M_PI;
    CHECK(husimi_number_reduced(ctx, 1, a2) ==
          doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("generating functions resum the quantum ladders") {
  const auto ctx = number_state_context(driven_params(),
                                        DampingEnvelope::markovian(0.45), 0.6,
                                        1.1);
  const PhasePoint at{cplx{0.4, -0.7}, cplx{-0.2, 0.3}};
  const cplx a2{0.9, 0.4};
  for (double y : {0.4, -0.4}) {
    double full = 0.0, reduced = 0.0, pw = 1.0;
    for (int n = 0; n <= 40; ++n) {  // tail ratio ~ 0.3, negligible by 40
      full += pw * husimi_number(ctx, n, at);
      reduced += pw * husimi_number_reduced(ctx, n, a2);
      pw *= y;
    }
    CHECK(std::abs(husimi_generating(ctx, y, at) - full) <= 1e-10);
    CHECK(std::abs(husimi_reduced_generating(ctx, y, a2) - reduced) <= 1e-10);
  }
  CHECK_THROWS_AS(husimi_generating(ctx, 50.0, at), std::domain_error);
  CHECK_THROWS_AS(husimi_reduced_generating(ctx, 50.0, a2), std::domain_error);
}

TEST_CASE("number states forget their quanta after full decay") {
  auto p = driven_params();
  const auto env = DampingEnvelope::markovian(0.8);
  const double nbar = 0.9, t = 50.0;  // gamma t = 40
  const auto ctx = number_state_context(p, env, nbar, t);
  const double sigma = 1.0 + nbar;
  std::mt19937_64 rng(53);
  for (int i = 0; i < 10; ++i) {
    const PhasePoint at{
        ctx.f1 + cplx{testlib::uniform(rng, -2, 2), testlib::uniform(rng, -2, 2)},
        ctx.f2 + cplx{testlib::uniform(rng, -2, 2), testlib::uniform(rng, -2, 2)}};
    const double want = std::exp(-(std::norm(at.alpha1 - ctx.f1) +
                                   std::norm(at.alpha2 - ctx.f2)) /
                                 sigma) /
                        (M_PI * M_PI * sigma * sigma);
    CHECK(std::abs(husimi_number(ctx, 2, at) - want) <= 1e-6);
  }
}

TEST_CASE("reduced Q integrates to one over the plane") {
  const auto ctx = number_state_context(driven_params(),
                                        DampingEnvelope::markovian(0.4), 0.4,
                                        1.3);
  const auto rule = testlib::gauss_legendre(80);
  const double cx = ctx.f2.real(), cy = ctx.f2.imag(), half = 8.5;
  for (int photons : {0, 1, 2}) {
    const double total = testlib::integrate_2d(
        rule, cx - half, cx + half, cy - half, cy + half,
        [&](double x, double y) {
          return husimi_number_reduced(ctx, photons, cplx{x, y});
        });
    CHECK(std::abs(total - 1.0) <= 1e-8);
  }
}

TEST_CASE("populations cover the thermal and coherent limits") {
  // Fully decayed markovian reservoir: geometric distribution.
  const auto env = DampingEnvelope::markovian(0.5);
  const double nbar = 0.8, t = 80.0;
  const auto geo = populations(cplx{0.0, 0.0}, nbar, env, t, 12);
  const double sigma = 1.0 + nbar;
  for (int n = 0; n < 12; ++n) {
    CHECK(geo[n] >= 0.0);
    CHECK(geo[n] == doctest::Approx(std::pow(sigma - 1.0, n) /
                                    std::pow(sigma, n + 1))
                        .epsilon(1e-10));
  }

  // Undamped coherent state: Poisson distribution.
  const cplx r{0.9, -0.6};
  const auto poisson =
      populations(r, 0.0, DampingEnvelope::constant(0.0), 1.0, 25);
  const double mean = std::norm(r);
  double sum = 0.0;
  for (int n = 0; n < 25; ++n) {
    const double want = std::exp(-mean + n * std::log(mean) -
                                 std::lgamma(n + 1.0));
    CHECK(poisson[n] == doctest::Approx(want).epsilon(1e-11));
    sum += poisson[n];
  }
  CHECK(std::abs(sum - 1.0) <= 1e-10);
}

TEST_CASE("density matrix diagonal equals the populations") {
  const auto env = DampingEnvelope::markovian(0.5);
  const double nbar = 0.8, t = 2.0;
  const cplx center{0.7, 0.3};
  const double s = env.eval(t).sin_phase;
  const double sigma = 1.0 + nbar * s * s;
  const auto rho = reduced_density_matrix(center, sigma, 30);
  const auto pops = populations(center, nbar, env, t, 30);
  for (int n = 0; n < 30; ++n) {
    CHECK(std::abs(rho.entries(n, n).imag()) <= 1e-18);
    CHECK(std::abs(rho.entries(n, n).real() - pops[n]) <= 1e-12);
  }
}

TEST_CASE("density matrix is hermitian, normalized and positive") {
  const auto rho = reduced_density_matrix(cplx{0.7, 0.3}, 1.4, 40);
  CHECK((rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(std::abs(rho.entries.trace().real() - 1.0) <= 1e-8);
  CHECK(std::abs((1.0 - rho.entries.trace().real()) - rho.trace_deficit) <=
        1e-13);
  CHECK_FALSE(rho.truncated);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho.entries);
  CHECK(eig.eigenvalues().minCoeff() >= -1e-12);
}

TEST_CASE("width one collapses to a pure coherent projector") {
  const cplx r{0.5, -0.8};
  const auto rho = reduced_density_matrix(r, 1.0, 30);
  const double r2 = std::norm(r);
  for (int m : {0, 1, 3, 7})
    for (int n : {0, 2, 5}) {
      const cplx want = std::exp(-r2) * std::pow(r, m) *
                        std::pow(std::conj(r), n) /
                        std::sqrt(std::exp(std::lgamma(m + 1.0) +
                                           std::lgamma(n + 1.0)));
      CHECK(std::abs(rho.entries(m, n) - want) <= 1e-12);
    }
  CHECK(std::abs((rho.entries * rho.entries).trace().real() - 1.0) <= 1e-8);
}

TEST_CASE("centered thermal matrix is diagonal") {
  const auto rho = reduced_density_matrix(cplx{0.0, 0.0}, 1.6, 12);
  for (int m = 0; m < 12; ++m)
    for (int n = 0; n < 12; ++n)
      if (m != n) CHECK(rho.entries(m, n) == cplx{0.0, 0.0});
  CHECK(rho.entries(3, 3).real() ==
        doctest::Approx(std::pow(0.6, 3) / std::pow(1.6, 4)).epsilon(1e-12));
}

TEST_CASE("phase-space arguments are validated") {
  CHECK_THROWS_AS(reduced_density_matrix(cplx{0, 0}, 0.5, 10),
                  std::domain_error);
  CHECK_THROWS_AS(reduced_density_matrix(cplx{0, 0}, 1.2, 0),
                  std::invalid_argument);
  const auto ctx = number_state_context(driven_params(),
                                        DampingEnvelope::markovian(0.4), 0.4,
                                        1.0);
  CHECK_THROWS_AS(husimi_number(ctx, -1, PhasePoint{}), std::domain_error);
  CHECK_THROWS_AS(
      populations(cplx{0, 0}, 0.4, DampingEnvelope::markovian(0.4), 1.0, 0),
      std::invalid_argument);
}
