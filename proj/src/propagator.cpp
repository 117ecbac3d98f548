#include "bellnoise/propagator.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <unsupported/Eigen/MatrixFunctions>

#include "bellnoise/concurrence.hpp"
#include "bellnoise/rng.hpp"

namespace bellnoise {

namespace {

const Complex kI{0.0, 1.0};

// Exact 2x2 unitary exp(-i dt (v . sigma/2)) via the axis-angle formula.
Matrix2 axis_angle_step(double vx, double vy, double vz, double dt) {
  const double norm = std::sqrt(vx * vx + vy * vy + vz * vz);
  const double half = 0.5 * dt;
  const double c = std::cos(half * norm);
  // sin(half*norm)/norm, stable for small arguments
  const double s = norm * half < 1e-6 ? half * (1.0 - (half * norm) * (half * norm) / 6.0)
                                      : std::sin(half * norm) / norm;
  Matrix2 u;
  u(0, 0) = Complex(c, -s * vz);
  u(0, 1) = Complex(-s * vy, -s * vx);
  u(1, 0) = Complex(s * vy, -s * vx);
  u(1, 1) = Complex(c, s * vz);
  return u;
}

Matrix2 qubit_step(double omega, const NoiseTrajectoryPair& traj, int qubit, int k, double dt) {
  const auto& s = traj.samples[qubit];
  const double vx = s[0].empty() ? 0.0 : s[0][k];
  const double vy = s[1].empty() ? 0.0 : s[1][k];
  const double vz = omega + (s[2].empty() ? 0.0 : s[2][k]);
  return axis_angle_step(vx, vy, vz, dt);
}

}  // namespace

std::vector<TwoQubitOperator> evolve_trajectory(double omega, const NoiseTrajectoryPair& traj,
                                                const TwoQubitOperator& rho0) {
  if (rho0.rows() != 4 || rho0.cols() != 4)
    throw std::invalid_argument("evolve_trajectory: state must be 4x4");
  for (int q = 0; q < 2; ++q)
    for (int axis = 0; axis < 3; ++axis)
      if (!traj.samples[q][axis].empty() &&
          int(traj.samples[q][axis].size()) != traj.n_steps)
        throw std::invalid_argument("evolve_trajectory: trajectory length mismatch");

  std::vector<TwoQubitOperator> out;
  out.reserve(traj.n_steps + 1);
  out.push_back(rho0);
  TwoQubitOperator rho = rho0;
  for (int k = 0; k < traj.n_steps; ++k) {
    const TwoQubitOperator u = tensor(qubit_step(omega, traj, 0, k, traj.dt),
                                      qubit_step(omega, traj, 1, k, traj.dt));
    rho = u * rho * u.adjoint();
    out.push_back(rho);
  }
  return out;
}

namespace {

struct BatchAccumulator {
  // accum[state][grid point]
  std::vector<std::vector<TwoQubitOperator>> accum;
  int count = 0;

  BatchAccumulator(int n_states, int n_points)
      : accum(n_states, std::vector<TwoQubitOperator>(n_points, TwoQubitOperator::Zero())) {}
};

}  // namespace

std::vector<EnsembleResult> ensemble_average(const Scenario& scenario, int n_threads) {
  scenario.validate();
  if (scenario.trajectories < 2 * 100)
    throw std::invalid_argument("ensemble_average: need at least 2 batches of 100 trajectories");

  const NoiseSpec noise_spec = scenario.effective_noise();
  const int n_states = int(scenario.states.size());
  const int n_points = scenario.n_points;
  const std::vector<double> grid = scenario.time_grid();
  const double grid_step = scenario.t_max / double(n_points - 1);
  const int steps_per_interval =
      std::max(1, int(std::ceil(grid_step / scenario.mc_dt() - 1e-12)));
  const double dt = grid_step / steps_per_interval;
  const int total_steps = steps_per_interval * (n_points - 1);

  std::vector<TwoQubitOperator> rho0(n_states);
  for (int s = 0; s < n_states; ++s) rho0[s] = bell_state(scenario.states[s]);

  std::vector<BatchAccumulator> batches(kEnsembleBatches,
                                        BatchAccumulator(n_states, n_points));
  const auto batch_begin = [&](int b) {
    return (std::int64_t(scenario.trajectories) * b) / kEnsembleBatches;
  };

  const auto run_batch = [&](int b) {
    BatchAccumulator& acc = batches[b];
    std::vector<TwoQubitOperator> rho(n_states);
    for (std::int64_t traj = batch_begin(b); traj < batch_begin(b + 1); ++traj) {
      const NoiseTrajectoryPair noise = sample_pair(
          noise_spec, total_steps, dt, derive_seed(scenario.seed, std::uint64_t(traj)));
      for (int s = 0; s < n_states; ++s) {
        rho[s] = rho0[s];
        acc.accum[s][0] += rho[s];
      }
      int k = 0;
      for (int point = 1; point < n_points; ++point) {
        for (int sub = 0; sub < steps_per_interval; ++sub, ++k) {
          const TwoQubitOperator u = tensor(qubit_step(scenario.omega, noise, 0, k, dt),
                                            qubit_step(scenario.omega, noise, 1, k, dt));
          for (int s = 0; s < n_states; ++s) rho[s] = u * rho[s] * u.adjoint();
        }
        for (int s = 0; s < n_states; ++s) acc.accum[s][point] += rho[s];
      }
      ++acc.count;
    }
  };

  const int workers = std::max(1, std::min(n_threads, kEnsembleBatches));
  if (workers == 1) {
    for (int b = 0; b < kEnsembleBatches; ++b) run_batch(b);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int b = next.fetch_add(1); b < kEnsembleBatches; b = next.fetch_add(1))
          run_batch(b);
      });
    for (auto& th : pool) th.join();
  }

  // Fixed-order reduction: identical output for any worker count.
  std::vector<EnsembleResult> results(n_states);
  for (int s = 0; s < n_states; ++s) {
    EnsembleResult& res = results[s];
    res.state = scenario.states[s];
    res.times = grid;
    res.trajectories = scenario.trajectories;
    res.seed = scenario.seed;
    res.rho_mean.assign(n_points, TwoQubitOperator::Zero());
    res.concurrence.resize(n_points);
    res.concurrence_stderr.resize(n_points);
    for (int k = 0; k < n_points; ++k) {
      TwoQubitOperator total = TwoQubitOperator::Zero();
      for (int b = 0; b < kEnsembleBatches; ++b) total += batches[b].accum[s][k];
      res.rho_mean[k] = total / double(scenario.trajectories);

      double mean_c = 0.0, mean_c2 = 0.0;
      for (int b = 0; b < kEnsembleBatches; ++b) {
        const TwoQubitOperator rho_b = batches[b].accum[s][k] / double(batches[b].count);
        const double c = concurrence_wootters(rho_b, 1e-6).value;
        mean_c += c;
        mean_c2 += c * c;
      }
      mean_c /= kEnsembleBatches;
      mean_c2 /= kEnsembleBatches;
      const double var = std::max(0.0, mean_c2 - mean_c * mean_c) * kEnsembleBatches /
                         (kEnsembleBatches - 1.0);
      res.concurrence[k] = concurrence_wootters(res.rho_mean[k], 1e-6).value;
      res.concurrence_stderr[k] = std::sqrt(var / kEnsembleBatches);
    }
  }
  return results;
}

SuperOperator cumulant2_propagator(Geometry geometry, const NoiseSpec& noise, double omega,
                                   double t) {
  if (t < 0.0) throw std::invalid_argument("cumulant2_propagator: t must be non-negative");
  noise.validate();
  const AxisFlags axes = axes_for(geometry);
  const bool xy = axes.x && axes.y;
  const bool z = axes.z;

  // Triangle integrals of kappa(tau) {cos, sin, 1}-weighted, per qubit
  // and for the cross kernel. White noise: t/T on every enabled axis,
  // no splitting shift.
  double cos_w[2], sin_w[2], plain[2], cos_cross = 0.0, plain_cross = 0.0;
  if (noise.kind == NoiseKind::Ou) {
    for (int q = 0; q < 2; ++q) {
      const TransverseDecay d = transverse_decay(noise, omega, t, q + 1);
      cos_w[q] = d.gamma_perp;
      sin_w[q] = d.delta_omega_t;
      plain[q] = dephasing_decay(noise, t, q + 1);
    }
    const TransverseDecay dx = transverse_decay_cross(noise, omega, t);
    cos_cross = dx.gamma_perp;
    plain_cross = dephasing_decay_cross(noise, t);
  } else {
    for (int q = 0; q < 2; ++q) {
      cos_w[q] = xy ? t / noise.white_T(0) : 0.0;
      sin_w[q] = 0.0;
      plain[q] = z ? t / noise.white_T(2) : 0.0;
    }
    cos_cross = noise.gamma * (xy ? t / noise.white_T(0) : 0.0);
    plain_cross = noise.gamma * (z ? t / noise.white_T(2) : 0.0);
  }

  SuperOperator k2 = SuperOperator::Zero();
  for (int q = 1; q <= 2; ++q) {
    const SuperOperator jx = spin_superop(q, 0), jy = spin_superop(q, 1),
                        jz = spin_superop(q, 2);
    if (xy) {
      k2 -= cos_w[q - 1] * (jx * jx + jy * jy);
      k2 += kI * sin_w[q - 1] * jz;  // splitting renormalization
    }
    if (z) k2 -= plain[q - 1] * (jz * jz);
  }
  if (xy) {
    // The sin-weighted cross terms cancel between the (1,2) and (2,1)
    // orderings; only the cos-weighted part survives.
    k2 -= 2.0 * cos_cross * (spin_superop(1, 0) * spin_superop(2, 0) +
                             spin_superop(1, 1) * spin_superop(2, 1));
  }
  if (z) k2 -= 2.0 * plain_cross * (spin_superop(1, 2) * spin_superop(2, 2));

  return z_rotation_superop(omega * t) * k2.exp();
}

SuperOperator cumulant2_propagator(const Scenario& scenario, double t) {
  return cumulant2_propagator(scenario.geometry, scenario.effective_noise(), scenario.omega, t);
}

Complex heisenberg_expectation(const SuperOperator& u, const SphericalTensorLabel& label,
                               const TwoQubitOperator& rho0) {
  const TwoQubitOperator evolved = unvectorize(u * vectorize(label.matrix()));
  return (evolved * rho0).trace();
}

double cumulant2_concurrence(const SuperOperator& u, Bell state) {
  const TwoQubitOperator rho0 = bell_state(state);
  const Complex e_pm = heisenberg_expectation(u, SphericalTensorLabel::product(1, 1, 1, -1), rho0);
  const Complex e_pp = heisenberg_expectation(u, SphericalTensorLabel::product(1, 1, 1, 1), rho0);
  const Complex e_00 = heisenberg_expectation(u, SphericalTensorLabel::product(1, 0, 1, 0), rho0);
  return concurrence_from_expectations(e_pm, e_pp, e_00.real());
}

}  // namespace bellnoise
