#include "oscdyn/oracle/derivatives.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oscdyn::oracle {
namespace {

void check_stencil(int order, double radius, int points, const char* who) {
  if (order < 0) throw std::invalid_argument(std::string(who) + ": order < 0");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument(std::string(who) + ": radius must be positive");
  if (points <= order)
    throw std::invalid_argument(std::string(who) +
                                ": need more stencil points than the order");
}

}  // namespace

std::complex<double> taylor_coefficient(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    int order, double radius, int points) {
  if (!f) throw std::invalid_argument("taylor_coefficient: null function");
  check_stencil(order, radius, points, "taylor_coefficient");

  std::complex<double> acc = 0.0;
  for (int j = 0; j < points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / points;
    acc += f(std::polar(radius, theta)) * std::polar(1.0, -order * theta);
  }
  return acc / (static_cast<double>(points) * std::pow(radius, order));
}

std::complex<double> taylor_coefficient_2d(
    const std::function<std::complex<double>(std::complex<double>,
                                             std::complex<double>)>& f,
    int m, int n, double radius_a, double radius_b, int points) {
  if (!f) throw std::invalid_argument("taylor_coefficient_2d: null function");
  check_stencil(m, radius_a, points, "taylor_coefficient_2d");
  check_stencil(n, radius_b, points, "taylor_coefficient_2d");

  // Precompute the nodes once; the grid reuses each 1-D stencil.
  std::vector<std::complex<double>> nodes_a(points), nodes_b(points);
  for (int j = 0; j < points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / points;
    nodes_a[j] = std::polar(radius_a, theta);
    nodes_b[j] = std::polar(radius_b, theta);
  }

  std::complex<double> acc = 0.0;
  for (int j = 0; j < points; ++j) {
    const double tj = 2.0 * std::numbers::pi * j / points;
    std::complex<double> inner = 0.0;
    for (int l = 0; l < points; ++l) {
      const double tl = 2.0 * std::numbers::pi * l / points;
      inner += f(nodes_a[j], nodes_b[l]) * std::polar(1.0, -n * tl);
    }
    acc += inner * std::polar(1.0, -m * tj);
  }
  const double scale = static_cast<double>(points) * static_cast<double>(points) *
                       std::pow(radius_a, m) * std::pow(radius_b, n);
  return acc / scale;
}

}  // namespace oscdyn::oracle
