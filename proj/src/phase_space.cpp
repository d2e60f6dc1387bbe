#include "oscdyn/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "oscdyn/special.hpp"

namespace oscdyn {
namespace {

constexpr double kPi = std::numbers::pi;
// Below this excess width the state is treated as exactly coherent/pure;
// keeps log-space expressions away from log(0).
constexpr double kWidthFloor = 1e-12;

double log_sum_exp(const std::vector<double>& terms) {
  double peak = -std::numeric_limits<double>::infinity();
  for (double v : terms) peak = std::max(peak, v);
  if (!std::isfinite(peak)) return peak;
  double acc = 0.0;
  for (double v : terms) acc += std::exp(v - peak);
  return peak + std::log(acc);
}

// sum_{k=0}^{n} C(n,k) a^{n-k} b^k / k!  for a, b >= 0.
// Equals a^n L_n(-b/a) where that form is defined, but stays finite and
// positive at a = 0 and for large n.
double binomial_laguerre_sum(int n, double a, double b) {
  if (n == 0) return 1.0;
  if (b <= 0.0) return std::pow(a, n);
  if (a <= 0.0) return std::exp(n * std::log(b) - log_factorial(n));
  const double la = std::log(a);
  const double lb = std::log(b);
  std::vector<double> terms(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    terms[static_cast<size_t>(k)] =
        log_binomial(n, k) + (n - k) * la + k * lb - log_factorial(k);
  return std::exp(log_sum_exp(terms));
}

// Number-basis matrix element <m| rho |n> of the displaced thermal state
// whose Q is a round Gaussian of width sigma centered at `center`.
// Evaluated in log space: every k-term of the inner sum is positive.
std::complex<double> displaced_thermal_entry(int m, int n,
                                             std::complex<double> center,
                                             double sigma) {
  if (m > n) return std::conj(displaced_thermal_entry(n, m, center, sigma));
  const double rsq = std::norm(center);
  const double excess = sigma - 1.0;

  if (excess < kWidthFloor) {  // pure coherent state
    if (rsq == 0.0) return (m == 0 && n == 0) ? 1.0 : 0.0;
    const double log_mag = 0.5 * (m + n) * std::log(rsq) - rsq -
                           0.5 * (log_factorial(m) + log_factorial(n));
    const double phase = (m - n) * std::arg(center);
    return std::polar(std::exp(log_mag), phase);
  }

  if (rsq == 0.0) {  // thermal state: geometric diagonal
    if (m != n) return 0.0;
    return std::exp(n * std::log(excess) - (n + 1) * std::log(sigma));
  }

  const double log_x = std::log(rsq) - std::log(sigma) - std::log(excess);
  std::vector<double> terms(static_cast<size_t>(m) + 1);
  for (int k = 0; k <= m; ++k)
    terms[static_cast<size_t>(k)] =
        log_binomial(m, k) - log_factorial(n - m + k) + k * log_x;
  const double log_mag = 0.5 * (log_factorial(n) - log_factorial(m)) -
                         rsq / sigma + m * std::log(excess) +
                         0.5 * (n - m) * std::log(rsq) -
                         (n + 1) * std::log(sigma) + log_sum_exp(terms);
  const double phase = -(n - m) * std::arg(center);
  return std::polar(std::exp(log_mag), phase);
}

void check_sigma(double sigma, const char* who) {
  if (!(sigma >= 1.0 - kWidthFloor) || !std::isfinite(sigma))
    throw std::domain_error(std::string(who) + ": sigma must be >= 1");
}

void check_photons(int photons, const char* who) {
  if (photons < 0)
    throw std::domain_error(std::string(who) + ": photons must be >= 0");
}

}  // namespace

PhasePoint maxima_trajectory(const SystemParams& params,
                             const DampingEnvelope& env,
                             const CoherentInit& init, double t,
                             const QuadratureConfig& quad) {
  const ModeCoefficients c = mode_coefficients(params, env, t);
  const DriveResponse f = drive_response(params, env, t, quad);
  return {f.f1 + c.retained * init.alpha0 + c.exchanged * init.beta0,
          f.f2 + c.exchanged * init.alpha0 + c.retained * init.beta0};
}

CoherentContext coherent_context(const SystemParams& params,
                                 const DampingEnvelope& env,
                                 const CoherentInit& init, double nbar,
                                 double t, const QuadratureConfig& quad) {
  const double sigma = effective_occupation(nbar, env, t);
  const PhasePoint center = maxima_trajectory(params, env, init, t, quad);
  return {sigma, center.alpha1, center.alpha2};
}

double husimi_coherent(const CoherentContext& ctx, const PhasePoint& at) {
  const double quad_form =
      std::norm(at.alpha1 - ctx.center1) + std::norm(at.alpha2 - ctx.center2);
  return std::exp(-quad_form / ctx.sigma) / (kPi * kPi * ctx.sigma * ctx.sigma);
}

double husimi_coherent(const SystemParams& params, const DampingEnvelope& env,
                       const CoherentInit& init, double nbar, double t,
                       const PhasePoint& at, const QuadratureConfig& quad) {
  return husimi_coherent(coherent_context(params, env, init, nbar, t, quad),
                         at);
}

NumberStateContext number_state_context(const SystemParams& params,
                                        const DampingEnvelope& env,
                                        double nbar, double t,
                                        const QuadratureConfig& quad) {
  const ModeCoefficients c = mode_coefficients(params, env, t);
  const DriveResponse f = drive_response(params, env, t, quad);
  const double sigma = effective_occupation(nbar, env, t);
  const double cos_g = env.eval(t).cos_phase;
  const double weight = 1.0 - cos_g * cos_g / sigma;
  return {sigma, std::max(0.0, weight), f.f1, f.f2, c.retained, c.exchanged};
}

double husimi_number(const NumberStateContext& ctx, int photons,
                     const PhasePoint& at) {
  check_photons(photons, "husimi_number");
  const double gauss =
      std::exp(-(std::norm(at.alpha1 - ctx.f1) + std::norm(at.alpha2 - ctx.f2)) /
               ctx.sigma) /
      (kPi * kPi * ctx.sigma * ctx.sigma);
  const double wsq = std::norm(ctx.cross_amplitude(at));
  return gauss * binomial_laguerre_sum(photons, ctx.thermal_weight, wsq);
}

double husimi_number(const SystemParams& params, const DampingEnvelope& env,
                     int photons, double nbar, double t, const PhasePoint& at,
                     const QuadratureConfig& quad) {
  return husimi_number(number_state_context(params, env, nbar, t, quad),
                       photons, at);
}

double husimi_number_reduced(const NumberStateContext& ctx, int photons,
                             std::complex<double> alpha2) {
  check_photons(photons, "husimi_number_reduced");
  const double eta_sq = std::norm(alpha2 - ctx.f2);
  // Width of the surviving branch after the alpha1 marginal: the quantum
  // either stayed on oscillator 1 or thermalized (a), or crossed with
  // amplitude |exchanged| (b).
  const double a =
      ctx.thermal_weight * ctx.sigma + std::norm(ctx.retained);
  const double b = std::norm(ctx.exchanged) * eta_sq / ctx.sigma;
  return std::exp(-eta_sq / ctx.sigma) *
         binomial_laguerre_sum(photons, a, b) /
         (kPi * std::pow(ctx.sigma, photons + 1));
}

double husimi_number_reduced(const SystemParams& params,
                             const DampingEnvelope& env, int photons,
                             double nbar, double t,
                             std::complex<double> alpha2,
                             const QuadratureConfig& quad) {
  return husimi_number_reduced(number_state_context(params, env, nbar, t, quad),
                               photons, alpha2);
}

double husimi_generating(const NumberStateContext& ctx, double y,
                         const PhasePoint& at) {
  const double denom = 1.0 - y * ctx.thermal_weight;
  if (!(denom > 0.0))
    throw std::domain_error("husimi_generating: y outside the analytic strip");
  const double gauss =
      std::exp(-(std::norm(at.alpha1 - ctx.f1) + std::norm(at.alpha2 - ctx.f2)) /
               ctx.sigma) /
      (kPi * kPi * ctx.sigma * ctx.sigma);
  const double wsq = std::norm(ctx.cross_amplitude(at));
  return gauss * std::exp(y * wsq / denom) / denom;
}

double husimi_reduced_generating(const NumberStateContext& ctx, double y,
                                 std::complex<double> alpha2) {
  const double a =
      ctx.thermal_weight * ctx.sigma + std::norm(ctx.retained);
  const double scale = ctx.sigma - y * a;
  if (!(scale > 0.0))
    throw std::domain_error(
        "husimi_reduced_generating: y outside the analytic strip");
  const double eta_sq = std::norm(alpha2 - ctx.f2);
  const double exponent =
      -eta_sq / ctx.sigma +
      y * std::norm(ctx.exchanged) * eta_sq / (ctx.sigma * scale);
  return std::exp(exponent) / (kPi * scale);
}

DensityMatrix reduced_density_matrix(std::complex<double> center, double sigma,
                                     int dim) {
  check_sigma(sigma, "reduced_density_matrix");
  if (dim < 1)
    throw std::invalid_argument("reduced_density_matrix: dim must be >= 1");

  DensityMatrix rho;
  rho.entries.resize(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = m; n < dim; ++n) {
      const std::complex<double> value =
          displaced_thermal_entry(m, n, center, sigma);
      rho.entries(m, n) = value;
      if (n != m) rho.entries(n, m) = std::conj(value);
    }
  }
  double trace = 0.0;
  for (int n = 0; n < dim; ++n) trace += rho.entries(n, n).real();
  rho.trace_deficit = 1.0 - trace;
  rho.truncated = rho.trace_deficit > 1e-8;
  return rho;
}

std::vector<double> populations(std::complex<double> center, double nbar,
                                const DampingEnvelope& env, double t,
                                int count) {
  if (count < 1) throw std::invalid_argument("populations: count must be >= 1");
  const double sigma = effective_occupation(nbar, env, t);
  std::vector<double> out(static_cast<size_t>(count));
  for (int n = 0; n < count; ++n)
    out[static_cast<size_t>(n)] =
        displaced_thermal_entry(n, n, center, sigma).real();
  return out;
}

}  // namespace oscdyn
