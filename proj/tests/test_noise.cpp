#include <doctest.h>

#include <cmath>

#include "bellnoise/noise.hpp"
#include "bellnoise/rng.hpp"
#include "test_util.hpp"

using namespace bellnoise;

namespace {

NoiseSpec ou_spec(double sigma, double tc, double gamma, AxisFlags axes = {false, false, true}) {
  NoiseSpec spec;
  spec.kind = NoiseKind::Ou;
  spec.sigma1 = spec.sigma2 = sigma;
  spec.tc = tc;
  spec.gamma = gamma;
  spec.axes = axes;
  return spec;
}

NoiseSpec white_spec(double T, double gamma, AxisFlags axes = {false, false, true}) {
  NoiseSpec spec;
  spec.kind = NoiseKind::White;
  spec.T = T;
  spec.gamma = gamma;
  spec.axes = axes;
  return spec;
}

}  // namespace

TEST_SUITE_BEGIN("noise");

TEST_CASE("OU autocorrelation") {
  const NoiseSpec spec = ou_spec(1.5, 2.0, 0.0);
  CHECK(autocorrelation(spec, 0.0) == doctest::Approx(2.25).epsilon(1e-15));
  CHECK(autocorrelation(spec, 2.0) == doctest::Approx(2.25 / std::exp(1.0)).epsilon(1e-14));
  CHECK(autocorrelation(spec, -0.7) == autocorrelation(spec, 0.7));
  CHECK_THROWS_AS(autocorrelation(white_spec(1.0, 0.0), 0.0), std::invalid_argument);
}

TEST_CASE("dephasing decay closed forms") {
  const NoiseSpec spec = ou_spec(1.3, 2.0, 0.4);
  // Gaussian regime: Gamma ~ sigma^2 t^2 / 2 for t << tc
  const double t_small = spec.tc / 100.0;
  const double gaussian = 0.5 * 1.3 * 1.3 * t_small * t_small;
  CHECK(dephasing_decay(spec, t_small) == doctest::Approx(gaussian).epsilon(0.01));
  // Markovian regime: slope sigma^2 tc, offset -sigma^2 tc^2
  const double t_large = 60.0 * spec.tc;
  const double markov = 1.3 * 1.3 * spec.tc * t_large - 1.3 * 1.3 * spec.tc * spec.tc;
  CHECK(dephasing_decay(spec, t_large) == doctest::Approx(markov).epsilon(1e-12));
  CHECK(dephasing_decay(spec, 0.0) == 0.0);
  CHECK(dephasing_decay_cross(spec, 5.0) ==
        doctest::Approx(0.4 * dephasing_decay(spec, 5.0)).epsilon(1e-14));

  CHECK(dephasing_decay(white_spec(2.0, 0.0), 2.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(dephasing_decay(spec, -1.0), std::invalid_argument);

  // monotone and convex-then-linear on a grid
  double prev = 0.0, prev_slope = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double gamma_t = dephasing_decay(spec, 0.1 * k);
    const double slope = gamma_t - prev;
    CHECK(gamma_t >= prev);
    CHECK(slope >= prev_slope - 1e-12);
    prev = gamma_t;
    prev_slope = slope;
  }
}

TEST_CASE("Markovian rates") {
  CHECK(markovian_rates(ou_spec(1.0, 1.0, 0.0)).rate1 == doctest::Approx(1.0));
  const auto rates = markovian_rates(ou_spec(5.0, 10.0, 0.0));
  CHECK(rates.rate1 == doctest::Approx(250.0));
  CHECK(rates.cross == 0.0);
  CHECK(markovian_rates(ou_spec(2.0, 3.0, 0.5)).cross == doctest::Approx(0.5 * 4.0 * 3.0));
  CHECK_THROWS_AS(markovian_rates(white_spec(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("transverse decay: omega = 0 reduces to the dephasing integral") {
  const NoiseSpec spec = ou_spec(2.0, 3.0, 0.0);
  for (const double t : {0.1, 1.0, 7.0}) {
    const TransverseDecay d = transverse_decay(spec, 0.0, t);
    CHECK(d.gamma_perp == doctest::Approx(dephasing_decay(spec, t)).epsilon(1e-14));
    CHECK(d.delta_omega_t == 0.0);
  }
}

TEST_CASE("transverse decay matches adaptive quadrature") {
  NoiseSpec spec = ou_spec(4.0, 10.0, 0.0, {true, true, false});
  const double omega = 40.0;
  for (const double t : {0.05, 0.5, 2.0, 10.0, 25.0, 50.0}) {
    const auto kernel_cos = [&](double tau) {
      return (t - tau) * 16.0 * std::exp(-tau / 10.0) * std::cos(omega * tau);
    };
    const auto kernel_sin = [&](double tau) {
      return (t - tau) * 16.0 * std::exp(-tau / 10.0) * std::sin(omega * tau);
    };
    const double oracle_cos = testutil::adaptive_simpson(kernel_cos, 0.0, t, 1e-12);
    const double oracle_sin = testutil::adaptive_simpson(kernel_sin, 0.0, t, 1e-12);
    const TransverseDecay d = transverse_decay(spec, omega, t);
    CHECK(std::abs(d.gamma_perp - oracle_cos) < 1e-9);
    CHECK(std::abs(d.delta_omega_t - oracle_sin) < 1e-9);
  }
}

TEST_CASE("transverse decay is suppressed as sigma^2/omega^2 for fast precession") {
  const NoiseSpec spec = ou_spec(1.0, 50.0, 0.0, {true, true, false});
  // Gamma_perp oscillates as sigma^2 (1 - cos omega t)/omega^2 for
  // t << tc; average the ripple over a period before comparing scales.
  const auto averaged = [&](double omega) {
    double acc = 0.0;
    const int n = 200;
    const double period = 2.0 * kPi / omega;
    for (int k = 0; k < n; ++k)
      acc += transverse_decay(spec, omega, 1.0 + period * k / n).gamma_perp;
    return acc / n;
  };
  CHECK(averaged(20.0) / averaged(40.0) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("sampled pairs: perfect and vanishing correlation") {
  NoiseSpec spec = ou_spec(1.0, 1.0, 1.0);
  const NoiseTrajectoryPair traj = sample_pair(spec, 64, 0.05, 99);
  for (int k = 0; k < 64; ++k) CHECK(traj.samples[0][2][k] == traj.samples[1][2][k]);

  // repeatability: same seed, same stream
  const NoiseTrajectoryPair again = sample_pair(spec, 64, 0.05, 99);
  for (int k = 0; k < 64; ++k) CHECK(traj.samples[0][2][k] == again.samples[0][2][k]);

  spec.gamma = 0.0;
  double cross = 0.0;
  const int n_traj = 20000;
  for (int i = 0; i < n_traj; ++i) {
    const NoiseTrajectoryPair p = sample_pair(spec, 4, 0.05, derive_seed(5, i));
    cross += p.samples[0][2][0] * p.samples[1][2][0];
  }
  cross /= n_traj;
  CHECK(std::abs(cross) < 4.0 / std::sqrt(double(n_traj)));
}

TEST_CASE("gamma mixing identity: Cov(w1, w2) = gamma sigma^2, Var gamma-independent") {
  const int n_traj = 100000;
  NoiseSpec spec = ou_spec(1.0, 1.0, 0.5);
  double cross = 0.0, var1 = 0.0;
  for (int i = 0; i < n_traj; ++i) {
    const NoiseTrajectoryPair p = sample_pair(spec, 2, 0.05, derive_seed(17, i));
    cross += p.samples[0][2][0] * p.samples[1][2][0];
    var1 += p.samples[0][2][0] * p.samples[0][2][0];
  }
  cross /= n_traj;
  var1 /= n_traj;
  const double se = 1.0 / std::sqrt(double(n_traj));  // rough scale of both estimators
  CHECK(std::abs(cross - 0.5) < 3.0 * se);
  CHECK(std::abs(var1 - 1.0) < 4.0 * se);
}

TEST_CASE("OU sampler is stationary with the right autocorrelation") {
  const NoiseSpec spec = ou_spec(1.0, 1.0, 0.0);
  const double dt = 0.1;
  const int n_steps = 21;  // lag tc = 10 steps
  const int n_traj = 100000;
  std::vector<double> var(n_steps, 0.0);
  double lag_tc = 0.0;
  for (int i = 0; i < n_traj; ++i) {
    const NoiseTrajectoryPair p = sample_pair(spec, n_steps, dt, derive_seed(23, i));
    for (int k = 0; k < n_steps; ++k) var[k] += p.samples[0][2][k] * p.samples[0][2][k];
    lag_tc += p.samples[0][2][0] * p.samples[0][2][10];
  }
  const double se = std::sqrt(2.0 / double(n_traj));  // Var of x^2 estimator, x ~ N(0,1)
  for (int k = 0; k < n_steps; ++k) CHECK(std::abs(var[k] / n_traj - 1.0) < 4.0 * se);
  CHECK(std::abs(lag_tc / n_traj - std::exp(-1.0)) < 4.0 * se);
}

TEST_CASE("white noise sampler variance is 2/(T dt)") {
  const double T = 2.0, dt = 0.01;
  const NoiseSpec spec = white_spec(T, 0.0);
  const int n_traj = 50000;
  double var = 0.0;
  for (int i = 0; i < n_traj; ++i) {
    const NoiseTrajectoryPair p = sample_pair(spec, 2, dt, derive_seed(29, i));
    var += p.samples[0][2][0] * p.samples[0][2][0];
  }
  var /= n_traj;
  const double expected = 2.0 / (T * dt);
  CHECK(std::abs(var - expected) < 4.0 * expected * std::sqrt(2.0 / n_traj));
}

TEST_CASE("sampler argument validation") {
  CHECK_THROWS_AS(sample_pair(ou_spec(1, 1, 0), 0, 0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_pair(ou_spec(1, 1, 0), 10, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_pair(ou_spec(1, 1, 1.5), 10, 0.1, 1), std::invalid_argument);
  NoiseSpec bad = ou_spec(1, -1, 0);
  CHECK_THROWS_AS(sample_pair(bad, 10, 0.1, 1), std::invalid_argument);
}

TEST_SUITE_END();
