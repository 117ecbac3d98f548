#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace bellnoise {

enum class NoiseKind { White, Ou };

struct AxisFlags {
  bool x = false, y = false, z = false;
  bool enabled(int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  bool transverse() const { return x && y && !z; }
};

/// One scalar Gaussian stationary process per qubit and axis, plus the
/// cross-correlation degree gamma pairing the two qubits' processes.
/// OU: kappa(tau) = sigma^2 exp(-|tau|/tc). White: kappa = (2/T) delta.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::Ou;
  double sigma1 = 1.0;  // OU amplitude, qubit 1
  double sigma2 = 1.0;  // OU amplitude, qubit 2
  double tc = 1.0;      // OU autocorrelation time
  double T = 1.0;       // white-noise timescale
  // Optional anisotropic white strengths; NaN means "use T".
  std::array<double, 3> T_axis{std::nan(""), std::nan(""), std::nan("")};
  AxisFlags axes;
  double gamma = 0.0;  // cross-correlation degree in [0, 1]

  double sigma(int qubit) const { return qubit == 1 ? sigma1 : sigma2; }
  double white_T(int axis) const { return std::isnan(T_axis[axis]) ? T : T_axis[axis]; }
  void validate() const;  // throws std::invalid_argument
};

struct NoiseTrajectoryPair {
  double dt = 0.0;
  int n_steps = 0;
  // samples[qubit][axis]; vectors are empty for disabled axes.
  std::array<std::array<std::vector<double>, 3>, 2> samples;
};

/// kappa(tau) for the OU kind (the white kernel is distributional).
double autocorrelation(const NoiseSpec& spec, double tau, int qubit = 1);

/// Draws the correlated pair of vector processes. Each enabled axis uses
/// three unit processes a, b, c and the mixing
///   w1 = sigma1 (sqrt(gamma) c + sqrt(1-gamma) a),
///   w2 = sigma2 (sqrt(gamma) c + sqrt(1-gamma) b),
/// which realizes kappa^(n,n) = kappa and kappa^x = gamma kappa exactly.
/// OU uses the exact update x' = x e^{-dt/tc} + sqrt(1-e^{-2dt/tc}) xi
/// from a stationary start; white uses independent per-step normals of
/// variance 2/(T dt).
NoiseTrajectoryPair sample_pair(const NoiseSpec& spec, int n_steps, double dt,
                                std::uint64_t seed);

/// Gamma_n(t): double integral of kappa_zz over the ordered triangle.
/// OU: sigma^2 tc [t - tc(1 - e^{-t/tc})]; white: t/T.
double dephasing_decay(const NoiseSpec& spec, double t, int qubit = 1);

/// Gamma_x(t): cross version, gamma-scaled (sqrt(sigma1 sigma2) powers).
double dephasing_decay_cross(const NoiseSpec& spec, double t);

struct MarkovianRates {
  double rate1 = 0.0;  // 1/T2 of qubit 1 = sigma1^2 tc
  double rate2 = 0.0;
  double cross = 0.0;  // 1/T2x = gamma sigma1 sigma2 tc
};

/// Zero-frequency spectral densities of the OU kernels.
MarkovianRates markovian_rates(const NoiseSpec& spec);

struct TransverseDecay {
  double gamma_perp = 0.0;     // cos-weighted double integral of kappa
  double delta_omega_t = 0.0;  // sin-weighted one; the splitting shift times t
};

/// Closed-form rotating-frame decay integrals for the OU kernel.
TransverseDecay transverse_decay(const NoiseSpec& spec, double omega, double t,
                                 int qubit = 1);
TransverseDecay transverse_decay_cross(const NoiseSpec& spec, double omega, double t);

}  // namespace bellnoise
