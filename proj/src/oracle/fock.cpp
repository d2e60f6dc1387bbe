#include "oscdyn/oracle/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oscdyn::oracle {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};
constexpr double kDefaultSafety = 5e-3;

struct Coupling {
  int a, b;       // mode indices
  double weight;  // hop or damping rate
};

// Precomputed index tables for the gather-form product.  Every output element
// is assembled from reads alone, so rows are independent.
struct Lattice {
  std::vector<int> dims;
  std::vector<long> strides;
  std::vector<Coupling> pairs;
  long size = 1;

  int digit(long s, int mode) const {
    return static_cast<int>((s / strides[static_cast<size_t>(mode)]) %
                            dims[static_cast<size_t>(mode)]);
  }
};

Lattice make_lattice(const std::vector<int>& dims, double hop, double g) {
  if (dims.empty() || dims.size() % 2 != 0)
    throw std::invalid_argument(
        "apply_hamiltonian: need an even mode count (system + bath ladders)");
  long long total = 1;
  for (int d : dims) {
    if (d < 1)
      throw std::invalid_argument("apply_hamiltonian: mode dims must be >= 1");
    total *= d;
    if (total > 1000000)
      throw std::invalid_argument(
          "apply_hamiltonian: truncated space exceeds 10^6 states");
  }
  Lattice lat;
  lat.dims = dims;
  lat.strides.assign(dims.size(), 1);
  for (int m = static_cast<int>(dims.size()) - 2; m >= 0; --m) {
    if (dims[static_cast<size_t>(m) + 1] < 1)
      throw std::invalid_argument("apply_hamiltonian: mode dims must be >= 1");
    lat.strides[static_cast<size_t>(m)] =
        lat.strides[static_cast<size_t>(m) + 1] * dims[static_cast<size_t>(m) + 1];
  }
  if (dims.front() < 1)
    throw std::invalid_argument("apply_hamiltonian: mode dims must be >= 1");
  lat.size = lat.strides.front() * dims.front();

  const int n = static_cast<int>(dims.size()) / 2;
  for (int i = 0; i + 1 < n; ++i) {
    lat.pairs.push_back({i, i + 1, hop});          // system ladder
    lat.pairs.push_back({n + i, n + i + 1, hop});  // bath ladder
  }
  for (int i = 0; i < n; ++i) lat.pairs.push_back({i, n + i, g});
  return lat;
}

// One row of y = H x.  Number-conserving hops read the (p-1, q+1) neighbour
// with amplitude sqrt(d_p (d_q + 1)); the drive ladder acts on mode 0.
inline std::complex<double> gather_row(const Lattice& lat,
                                       const std::complex<double>* x, long s,
                                       double omega0,
                                       std::complex<double> drive) {
  const int modes = static_cast<int>(lat.dims.size());
  int total = 0;
  for (int m = 0; m < modes; ++m) total += lat.digit(s, m);
  std::complex<double> acc = omega0 * static_cast<double>(total) * x[s];

  for (const Coupling& c : lat.pairs) {
    if (c.weight == 0.0) continue;
    const int da = lat.digit(s, c.a);
    const int db = lat.digit(s, c.b);
    const long sa = lat.strides[static_cast<size_t>(c.a)];
    const long sb = lat.strides[static_cast<size_t>(c.b)];
    if (da >= 1 && db + 1 < lat.dims[static_cast<size_t>(c.b)])  // a^+ b
      acc += c.weight * std::sqrt(static_cast<double>(da) * (db + 1)) *
             x[s - sa + sb];
    if (db >= 1 && da + 1 < lat.dims[static_cast<size_t>(c.a)])  // b^+ a
      acc += c.weight * std::sqrt(static_cast<double>(db) * (da + 1)) *
             x[s + sa - sb];
  }

  if (drive != 0.0) {
    const int d0 = lat.digit(s, 0);
    const long s0 = lat.strides[0];
    if (d0 >= 1)
      acc += drive * std::sqrt(static_cast<double>(d0)) * x[s - s0];
    if (d0 + 1 < lat.dims[0])
      acc += std::conj(drive) * std::sqrt(static_cast<double>(d0 + 1)) *
             x[s + s0];
  }
  return acc;
}

double max_drive_amplitude(const DriveSpec& drive, double horizon) {
  if (drive.is_zero()) return 0.0;
  double peak = 0.0;
  for (int i = 0; i <= 100; ++i)
    peak = std::max(peak, std::abs(drive.amplitude(horizon * i / 100.0)));
  return peak;
}

// Truncated-spectrum bound used for step sizing.
double spectral_radius(const SystemParams& params, const DampingEnvelope& env,
                       const std::vector<int>& dims, double horizon) {
  const Lattice lat = make_lattice(dims, params.coupling, env.rate_scale());
  double rho = std::abs(params.omega_drive);
  for (int d : dims) rho += params.omega0 * (d - 1);
  for (const Coupling& c : lat.pairs)
    rho += 2.0 * std::abs(c.weight) *
           std::sqrt(static_cast<double>(lat.dims[static_cast<size_t>(c.a)]) *
                     lat.dims[static_cast<size_t>(c.b)]);
  rho += 2.0 * max_drive_amplitude(params.drive, horizon) *
         std::sqrt(static_cast<double>(dims.front()));
  return rho;
}

void apply_rows(const Lattice& lat, const std::complex<double>* x,
                std::complex<double>* y, double omega0,
                std::complex<double> drive, bool parallel) {
  const long count = lat.size;
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long s = 0; s < count; ++s)
      y[s] = gather_row(lat, x, s, omega0, drive);
  } else {
    for (long s = 0; s < count; ++s)
      y[s] = gather_row(lat, x, s, omega0, drive);
  }
}

struct Propagator {
  const SystemParams* params;
  const DampingEnvelope* env;
  Lattice lat;  // pairs carry unit g weight; scaled per evaluation below
  double clamp;

  void rhs(double t, const Eigen::VectorXcd& x, Eigen::VectorXcd& out) const {
    Lattice scaled = lat;
    const double g = env->coupling_rate(std::max(t, clamp));
    const int n = static_cast<int>(lat.dims.size()) / 2;
    // damping pairs sit after the 2(n-1) ladder hops
    for (size_t i = 2 * static_cast<size_t>(n - 1); i < scaled.pairs.size();
         ++i)
      scaled.pairs[i].weight = g;
    const std::complex<double> drive =
        params->drive.amplitude(t) *
        std::exp(-kI * params->omega_drive * t);
    apply_rows(scaled, x.data(), out.data(), params->omega0, drive, true);
    out *= -kI;
  }
};

void rk4_step(const Propagator& prop, double t, double h, Eigen::VectorXcd& y,
              Eigen::VectorXcd& k1, Eigen::VectorXcd& k2, Eigen::VectorXcd& k3,
              Eigen::VectorXcd& k4, Eigen::VectorXcd& tmp) {
  prop.rhs(t, y, k1);
  tmp = y + (0.5 * h) * k1;
  prop.rhs(t + 0.5 * h, tmp, k2);
  tmp = y + (0.5 * h) * k2;
  prop.rhs(t + 0.5 * h, tmp, k3);
  tmp = y + h * k3;
  prop.rhs(t + h, tmp, k4);
  y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

FockState fock_basis_state(std::vector<int> dims,
                           const std::vector<int>& occupation) {
  if (dims.size() != occupation.size())
    throw std::invalid_argument(
        "fock_basis_state: occupation must match mode count");
  long size = 1;
  long index = 0;
  for (size_t m = 0; m < dims.size(); ++m) {
    if (dims[m] < 1)
      throw std::invalid_argument("fock_basis_state: mode dims must be >= 1");
    if (occupation[m] < 0 || occupation[m] >= dims[m])
      throw std::invalid_argument(
          "fock_basis_state: occupation outside the truncated range");
    size *= dims[m];
  }
  for (size_t m = 0; m < dims.size(); ++m)
    index = index * dims[m] + occupation[m];

  FockState state;
  state.mode_dims = std::move(dims);
  state.amp = Eigen::VectorXcd::Zero(size);
  state.amp(index) = 1.0;
  return state;
}

void apply_hamiltonian(const std::vector<int>& dims,
                       const std::complex<double>* x, std::complex<double>* y,
                       double omega0, double hop, double g,
                       std::complex<double> drive) {
  if (!x || !y) throw std::invalid_argument("apply_hamiltonian: null buffer");
  const Lattice lat = make_lattice(dims, hop, g);
  apply_rows(lat, x, y, omega0, drive, true);
}

void apply_hamiltonian_serial(const std::vector<int>& dims,
                              const std::complex<double>* x,
                              std::complex<double>* y, double omega0,
                              double hop, double g,
                              std::complex<double> drive) {
  if (!x || !y) throw std::invalid_argument("apply_hamiltonian: null buffer");
  const Lattice lat = make_lattice(dims, hop, g);
  apply_rows(lat, x, y, omega0, drive, false);
}

std::vector<FockState> fock_evolve_sweep(const SystemParams& params,
                                         const DampingEnvelope& env,
                                         const FockState& init,
                                         const std::vector<double>& times,
                                         const StepConfig& cfg) {
  params.check();
  if (times.empty()) throw std::invalid_argument("fock_evolve_sweep: no times");
  for (size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0))
      throw std::invalid_argument(
          "fock_evolve_sweep: times must be nonnegative");
    if (i > 0 && !(times[i] >= times[i - 1]))
      throw std::invalid_argument("fock_evolve_sweep: times must ascend");
  }
  if (static_cast<int>(init.mode_dims.size()) != 2 * params.chain_size)
    throw std::invalid_argument(
        "fock_evolve_sweep: state must carry 2 * chain_size modes");

  const double horizon = times.back();
  const double rho =
      spectral_radius(params, env, init.mode_dims, horizon);
  const double safety = cfg.safety > 0.0 ? cfg.safety : kDefaultSafety;
  const double h = cfg.dt > 0.0
                       ? cfg.dt
                       : safety * 2.0 * std::numbers::pi / std::max(rho, 1e-12);

  Propagator prop{&params, &env, make_lattice(init.mode_dims, params.coupling, 0.0),
                  1e-3 * h};

  Eigen::VectorXcd y = init.amp;
  Eigen::VectorXcd k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()),
      tmp(y.size());
  const double norm0 = y.norm();

  std::vector<FockState> out;
  out.reserve(times.size());
  double t = 0.0;
  for (double target : times) {
    while (t < target) {
      const double step = std::min(h, target - t);
      rk4_step(prop, t, step, y, k1, k2, k3, k4, tmp);
      t += step;
      if (std::abs(y.norm() - norm0) > cfg.norm_tol)
        throw std::runtime_error("fock_evolve: norm drift at t = " +
                                 std::to_string(t) + "; reduce the step");
    }
    out.push_back(FockState{init.mode_dims, y});
  }
  return out;
}

FockState fock_evolve(const SystemParams& params, const DampingEnvelope& env,
                      const FockState& init, double t, const StepConfig& cfg) {
  return fock_evolve_sweep(params, env, init, {t}, cfg).front();
}

DensityMatrix partial_trace(const FockState& state,
                            const std::vector<int>& keep) {
  const int modes = state.modes();
  std::vector<bool> kept(static_cast<size_t>(modes), false);
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= modes)
      throw std::invalid_argument("partial_trace: mode index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep indices must ascend");
    kept[static_cast<size_t>(keep[i])] = true;
  }
  if (keep.empty()) throw std::invalid_argument("partial_trace: nothing kept");

  long kept_dim = 1, env_dim = 1;
  for (int m = 0; m < modes; ++m)
    (kept[static_cast<size_t>(m)] ? kept_dim : env_dim) *=
        state.mode_dims[static_cast<size_t>(m)];

  // Bucket amplitudes by environment configuration, then accumulate the
  // outer product within each bucket.
  std::vector<std::vector<std::pair<long, std::complex<double>>>> buckets(
      static_cast<size_t>(env_dim));
  const long size = state.amp.size();
  for (long s = 0; s < size; ++s) {
    const std::complex<double> a = state.amp(s);
    if (a == 0.0) continue;
    long rest = s, k_idx = 0, e_idx = 0;
    for (int m = 0; m < modes; ++m) {
      const int dim = state.mode_dims[static_cast<size_t>(m)];
      // recover digits most-significant first
      long stride = 1;
      for (int mm = m + 1; mm < modes; ++mm)
        stride *= state.mode_dims[static_cast<size_t>(mm)];
      const int digit = static_cast<int>(rest / stride);
      rest %= stride;
      if (kept[static_cast<size_t>(m)])
        k_idx = k_idx * dim + digit;
      else
        e_idx = e_idx * dim + digit;
    }
    buckets[static_cast<size_t>(e_idx)].push_back({k_idx, a});
  }

  DensityMatrix rho;
  rho.entries = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
  for (const auto& bucket : buckets)
    for (const auto& [ki, ai] : bucket)
      for (const auto& [kj, aj] : bucket)
        rho.entries(ki, kj) += ai * std::conj(aj);

  double trace = 0.0;
  for (long i = 0; i < kept_dim; ++i) trace += rho.entries(i, i).real();
  rho.trace_deficit = 1.0 - trace;
  rho.truncated = rho.trace_deficit > 1e-8;
  return rho;
}

Eigen::VectorXcd coherent_overlap(int dim, std::complex<double> alpha) {
  if (dim < 1) throw std::invalid_argument("coherent_overlap: dim must be >= 1");
  Eigen::VectorXcd out(dim);
  out(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < dim; ++n)
    out(n) = out(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  return out;
}

double husimi_from_state(const DensityMatrix& rho, std::complex<double> alpha) {
  const Eigen::VectorXcd v = coherent_overlap(rho.dim(), alpha);
  const std::complex<double> q = v.adjoint() * rho.entries * v;
  return q.real() / std::numbers::pi;
}

}  // namespace oscdyn::oracle
