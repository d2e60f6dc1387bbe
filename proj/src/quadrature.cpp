#include "oscdyn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace oscdyn {
namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK constants).
// Positive abscissae only; the rule is symmetric.  Gauss nodes sit at the
// odd-indexed abscissae plus the center.
constexpr double kAbscissae[7] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245};
constexpr double kKronrodWeight[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussWeight[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  std::complex<double> value;
  double error;
};

template <typename F>
Panel evaluate_panel(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::complex<double> fc = f(center);
  std::complex<double> kronrod = kKronrodWeight[7] * fc;
  std::complex<double> gauss = kGaussWeight[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const std::complex<double> lo = f(center - half * kAbscissae[i]);
    const std::complex<double> hi = f(center + half * kAbscissae[i]);
    kronrod += kKronrodWeight[i] * (lo + hi);
    if (i % 2 == 1) gauss += kGaussWeight[i / 2] * (lo + hi);
  }
  return {a, b, half * kronrod, std::abs(half * (kronrod - gauss))};
}

}  // namespace

std::complex<double> oscillatory_integral(
    const std::function<std::complex<double>(double)>& integrand, double lower,
    double upper, const QuadratureConfig& config) {
  if (!integrand)
    throw std::invalid_argument("oscillatory_integral: null integrand");
  if (!std::isfinite(lower) || !std::isfinite(upper))
    throw std::invalid_argument("oscillatory_integral: non-finite bounds");
  if (lower > upper)
    throw std::invalid_argument("oscillatory_integral: lower > upper");
  if (!(config.abs_tol > 0.0) && !(config.rel_tol > 0.0))
    throw std::invalid_argument("oscillatory_integral: no positive tolerance");
  if (config.max_panels < 1)
    throw std::invalid_argument("oscillatory_integral: max_panels < 1");
  if (lower == upper) return {0.0, 0.0};

  const double width = upper - lower;
  double cap = width;
  if (config.max_frequency > 0.0) {
    // At most one tenth of the shortest period per initial panel.
    cap = std::min(cap, 0.1 * (2.0 * std::numbers::pi / config.max_frequency));
  }
  // The frequency cap is only a seeding heuristic; if it asks for more
  // panels than the budget, start with the full budget and let the error
  // estimate decide whether that was enough.
  const double count = std::ceil(width / cap);
  const int initial = static_cast<int>(
      std::min(count, static_cast<double>(config.max_panels)));

  std::vector<Panel> panels;
  panels.reserve(static_cast<size_t>(initial) + 64);
  for (int i = 0; i < initial; ++i) {
    const double a = lower + width * (static_cast<double>(i) / initial);
    const double b =
        (i + 1 == initial) ? upper
                           : lower + width * (static_cast<double>(i + 1) / initial);
    panels.push_back(evaluate_panel(integrand, a, b));
  }

  auto totals = [&panels] {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    for (const Panel& p : panels) {
      value += p.value;
      error += p.error;
    }
    return std::pair{value, error};
  };

  for (;;) {
    const auto [value, error] = totals();
    const double target =
        std::max(config.abs_tol, config.rel_tol * std::abs(value));
    if (error <= target) break;
    if (static_cast<int>(panels.size()) >= config.max_panels) {
      std::sort(panels.begin(), panels.end(),
                [](const Panel& x, const Panel& y) { return x.a < y.a; });
      const auto [best, bound] = totals();
      throw AccuracyError(
          "oscillatory_integral: panel budget exhausted before convergence",
          best, bound);
    }
    // Split the worst panel; leftmost wins ties so refinement is
    // reproducible.
    size_t worst = 0;
    for (size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].error > panels[worst].error ||
          (panels[i].error == panels[worst].error &&
           panels[i].a < panels[worst].a))
        worst = i;
    }
    const double a = panels[worst].a;
    const double b = panels[worst].b;
    const double mid = 0.5 * (a + b);
    panels[worst] = evaluate_panel(integrand, a, mid);
    panels.push_back(evaluate_panel(integrand, mid, b));
  }

  // Left-to-right final sum for reproducible bits.
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::complex<double> result{0.0, 0.0};
  for (const Panel& p : panels) result += p.value;
  return result;
}

}  // namespace oscdyn
