#include "bellnoise/noise.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "bellnoise/rng.hpp"

namespace bellnoise {

void NoiseSpec::validate() const {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("noise: gamma must lie in [0, 1]");
  if (!axes.x && !axes.y && !axes.z)
    throw std::invalid_argument("noise: at least one axis must be enabled");
  if (kind == NoiseKind::Ou) {
    if (sigma1 < 0.0 || sigma2 < 0.0)
      throw std::invalid_argument("noise: sigma must be non-negative");
    if (tc <= 0.0) throw std::invalid_argument("noise: tc must be positive");
  } else {
    for (int axis = 0; axis < 3; ++axis)
      if (axes.enabled(axis) && white_T(axis) <= 0.0)
        throw std::invalid_argument("noise: T must be positive");
  }
}

double autocorrelation(const NoiseSpec& spec, double tau, int qubit) {
  if (spec.kind != NoiseKind::Ou)
    throw std::invalid_argument(
        "autocorrelation: white-noise kernel is distributional, not point-evaluable");
  const double s = spec.sigma(qubit);
  return s * s * std::exp(-std::abs(tau) / spec.tc);
}

NoiseTrajectoryPair sample_pair(const NoiseSpec& spec, int n_steps, double dt,
                                std::uint64_t seed) {
  if (n_steps <= 0) throw std::invalid_argument("sample_pair: n_steps must be positive");
  if (dt <= 0.0) throw std::invalid_argument("sample_pair: dt must be positive");
  spec.validate();

  NoiseTrajectoryPair traj;
  traj.dt = dt;
  traj.n_steps = n_steps;

  NormalRng rng(seed);
  const double sq_shared = std::sqrt(spec.gamma);
  const double sq_private = std::sqrt(1.0 - spec.gamma);

  std::array<std::vector<double>, 3> unit;  // a, b, c streams of one axis
  for (auto& u : unit) u.resize(n_steps);

  for (int axis = 0; axis < 3; ++axis) {
    if (!spec.axes.enabled(axis)) continue;
    if (spec.kind == NoiseKind::Ou) {
      const double decay = std::exp(-dt / spec.tc);
      const double kick = std::sqrt(1.0 - decay * decay);
      for (auto& u : unit) {
        u[0] = rng.normal();  // stationary start, unit variance
        for (int k = 1; k < n_steps; ++k) u[k] = decay * u[k - 1] + kick * rng.normal();
      }
    } else {
      const double amp = std::sqrt(2.0 / (spec.white_T(axis) * dt));
      for (auto& u : unit)
        for (int k = 0; k < n_steps; ++k) u[k] = amp * rng.normal();
    }
    const double s1 = spec.kind == NoiseKind::Ou ? spec.sigma1 : 1.0;
    const double s2 = spec.kind == NoiseKind::Ou ? spec.sigma2 : 1.0;
    auto& w1 = traj.samples[0][axis];
    auto& w2 = traj.samples[1][axis];
    w1.resize(n_steps);
    w2.resize(n_steps);
    for (int k = 0; k < n_steps; ++k) {
      const double shared = sq_shared * unit[2][k];
      w1[k] = s1 * (shared + sq_private * unit[0][k]);
      w2[k] = s2 * (shared + sq_private * unit[1][k]);
    }
  }
  return traj;
}

namespace {

double ou_triangle_integral(double sigma_sq, double tc, double t) {
  return sigma_sq * tc * (t - tc * (1.0 - std::exp(-t / tc)));
}

}  // namespace

double dephasing_decay(const NoiseSpec& spec, double t, int qubit) {
  if (t < 0.0) throw std::invalid_argument("dephasing_decay: t must be non-negative");
  if (spec.kind == NoiseKind::White) return t / spec.white_T(2);
  const double s = spec.sigma(qubit);
  return ou_triangle_integral(s * s, spec.tc, t);
}

double dephasing_decay_cross(const NoiseSpec& spec, double t) {
  if (t < 0.0) throw std::invalid_argument("dephasing_decay_cross: t must be non-negative");
  if (spec.kind == NoiseKind::White) return spec.gamma * t / spec.white_T(2);
  return spec.gamma * ou_triangle_integral(spec.sigma1 * spec.sigma2, spec.tc, t);
}

MarkovianRates markovian_rates(const NoiseSpec& spec) {
  if (spec.kind != NoiseKind::Ou)
    throw std::invalid_argument("markovian_rates: white-noise rates are inputs, not derived");
  MarkovianRates rates;
  rates.rate1 = spec.sigma1 * spec.sigma1 * spec.tc;
  rates.rate2 = spec.sigma2 * spec.sigma2 * spec.tc;
  rates.cross = spec.gamma * spec.sigma1 * spec.sigma2 * spec.tc;
  return rates;
}

namespace {

// int_0^t (t-tau) e^{-tau/tc} e^{i omega tau} dtau = t/p + (e^{-pt}-1)/p^2
// with p = 1/tc - i omega; real part is the cos-weighted triangle
// integral, imaginary part the sin-weighted one.
TransverseDecay ou_rotating_integrals(double sigma_sq, double tc, double omega, double t) {
  const std::complex<double> p(1.0 / tc, -omega);
  const std::complex<double> val = t / p + (std::exp(-p * t) - 1.0) / (p * p);
  return {sigma_sq * val.real(), sigma_sq * val.imag()};
}

}  // namespace

TransverseDecay transverse_decay(const NoiseSpec& spec, double omega, double t, int qubit) {
  if (t < 0.0) throw std::invalid_argument("transverse_decay: t must be non-negative");
  if (spec.kind != NoiseKind::Ou)
    throw std::invalid_argument("transverse_decay: closed forms require the OU kind");
  const double s = spec.sigma(qubit);
  return ou_rotating_integrals(s * s, spec.tc, omega, t);
}

TransverseDecay transverse_decay_cross(const NoiseSpec& spec, double omega, double t) {
  if (t < 0.0) throw std::invalid_argument("transverse_decay_cross: t must be non-negative");
  if (spec.kind != NoiseKind::Ou)
    throw std::invalid_argument("transverse_decay_cross: closed forms require the OU kind");
  TransverseDecay d = ou_rotating_integrals(spec.sigma1 * spec.sigma2, spec.tc, omega, t);
  d.gamma_perp *= spec.gamma;
  d.delta_omega_t *= spec.gamma;
  return d;
}

}  // namespace bellnoise
