#include <cmath>
#include <random>

#include "doctest.h"
#include "oscdyn/special.hpp"
#include "testlib.hpp"

using namespace oscdyn;

TEST_CASE("low-order laguerre values") {
  for (double x : {-2.0, 0.0, 0.7, 3.5}) {
    CHECK(laguerre(0, x) == 1.0);
    CHECK(laguerre(1, x) == doctest::Approx(1.0 - x).epsilon(1e-15));
    CHECK(laguerre(2, x) ==
          doctest::Approx(1.0 - 2.0 * x + 0.5 * x * x).epsilon(1e-14));
    CHECK(laguerre(3, x) ==
          doctest::Approx(1.0 - 3.0 * x + 1.5 * x * x - x * x * x / 6.0)
              .epsilon(1e-14));
  }
  CHECK(laguerre(2, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
  for (int n = 0; n <= 20; ++n) CHECK(laguerre(n, 0.0) == 1.0);
}

TEST_CASE("laguerre three-term recurrence consistency") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = testlib::uniform(rng, -4.0, 8.0);
    const int n = 3 + static_cast<int>(rng() % 10);
    const double lhs = (n + 1) * laguerre(n + 1, x);
    const double rhs = (2 * n + 1 - x) * laguerre(n, x) - n * laguerre(n - 1, x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("log factorial agrees with lgamma") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
  for (int n : {2, 10, 20, 64, 170}) {
    CHECK(log_factorial(n) ==
          doctest::Approx(std::lgamma(n + 1.0)).epsilon(1e-13));
    CHECK(log_factorial(n) - log_factorial(n - 1) ==
          doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-12));
  }
}

TEST_CASE("log binomial") {
  CHECK(log_binomial(5, 2) == doctest::Approx(std::log(10.0)).epsilon(1e-14));
  CHECK(log_binomial(52, 26) ==
        doctest::Approx(std::lgamma(53.0) - 2.0 * std::lgamma(27.0))
            .epsilon(1e-13));
  for (int n : {1, 7, 30}) {
    CHECK(log_binomial(n, 0) == 0.0);
    CHECK(log_binomial(n, n) == 0.0);
    for (int k = 0; k <= n; ++k)
      CHECK(log_binomial(n, k) ==
            doctest::Approx(log_binomial(n, n - k)).epsilon(1e-13));
  }
}
