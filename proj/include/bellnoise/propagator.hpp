#pragma once

#include <cstdint>
#include <vector>

#include "bellnoise/noise.hpp"
#include "bellnoise/operators.hpp"
#include "bellnoise/scenario.hpp"
#include "bellnoise/superoperator.hpp"

namespace bellnoise {

/// Exact per-realization evolution: piecewise-constant noise per step,
/// with the step unitary factorized as u1 x u2 (the two single-qubit
/// Hamiltonian terms commute) and each u_n the exact axis-angle
/// exponential of -i dt (omega Jz + w^(n) . J). Returns the state at
/// every step boundary, rho[0] = rho0.
std::vector<TwoQubitOperator> evolve_trajectory(double omega, const NoiseTrajectoryPair& traj,
                                                const TwoQubitOperator& rho0);

struct EnsembleResult {
  Bell state = Bell::PsiMinus;
  std::vector<double> times;
  std::vector<TwoQubitOperator> rho_mean;
  std::vector<double> concurrence;          // of the averaged state
  std::vector<double> concurrence_stderr;   // batch means over 20 batches
  int trajectories = 0;
  std::uint64_t seed = 0;
};

inline constexpr int kEnsembleBatches = 20;

/// Noise-averaged evolution of every state in the scenario, sharing the
/// sampled trajectories across states. Per-trajectory seeds derive from
/// (scenario.seed, trajectory index); batches are contiguous index
/// ranges reduced in fixed order, so the result is bit-identical for
/// any worker count.
std::vector<EnsembleResult> ensemble_average(const Scenario& scenario, int n_threads = 1);

/// Heisenberg-picture second-order-cumulant propagator
/// e^{i t H_S} exp(K2(t)) as a 16x16 matrix; time ordering inside the
/// cumulant is dropped (exact for pure dephasing and for white noise).
SuperOperator cumulant2_propagator(Geometry geometry, const NoiseSpec& noise, double omega,
                                   double t);
SuperOperator cumulant2_propagator(const Scenario& scenario, double t);

/// <Psi| (U applied to T_label) |Psi> through the vectorized action.
Complex heisenberg_expectation(const SuperOperator& u, const SphericalTensorLabel& label,
                               const TwoQubitOperator& rho0);

/// Concurrence of an X_corr-preserving propagator applied to a Bell
/// state, from the three evolved expectation values.
double cumulant2_concurrence(const SuperOperator& u, Bell state);

}  // namespace bellnoise
