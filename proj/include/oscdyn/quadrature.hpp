#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace oscdyn {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_panels = 10000;
  // Largest angular frequency present in the integrand, declared by the
  // caller.  Positive values cap the initial panel width at one tenth of the
  // shortest period so no oscillation is ever straddled by a single panel.
  double max_frequency = 0.0;
};

// Thrown when the error bound cannot be pushed under the tolerance within
// the panel budget.  Carries the best available estimate.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, std::complex<double> best_estimate,
                double error_bound)
      : std::runtime_error(what),
        best_(best_estimate),
        bound_(error_bound) {}

  std::complex<double> best_estimate() const { return best_; }
  double error_bound() const { return bound_; }

 private:
  std::complex<double> best_;
  double bound_;
};

// Adaptive Gauss-Kronrod 7-15 integration of a complex integrand over
// [lower, upper].  Deterministic: panel subdivision always splits the
// worst-error panel (leftmost on ties) and the final sum runs left to right,
// so identical inputs produce identical bits.  Convergence target is
// max(abs_tol, rel_tol * |integral|).
std::complex<double> oscillatory_integral(
    const std::function<std::complex<double>(double)>& integrand,
    double lower, double upper, const QuadratureConfig& config = {});

}  // namespace oscdyn
