#include "oscdyn/special.hpp"

#include <cmath>
#include <stdexcept>

namespace oscdyn {

double laguerre(int order, double x) {
  if (order < 0) throw std::invalid_argument("laguerre: negative order");
  if (order == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 - x;
  for (int k = 1; k < order; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * curr - k * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: bad k");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace oscdyn
