#include <doctest.h>

#include <random>

#include "bellnoise/concurrence.hpp"
#include "test_util.hpp"

using namespace bellnoise;
using testutil::max_abs;

TEST_SUITE_BEGIN("concurrence");

TEST_CASE("Bell states are maximally entangled by both routes") {
  for (const Bell label : {Bell::PsiMinus, Bell::PsiPlus, Bell::PhiPlus, Bell::PhiMinus}) {
    const TwoQubitOperator rho = bell_state(label);
    CHECK(concurrence_wootters(rho).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_xcorr(rho).value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("maximally mixed state is separable") {
  const TwoQubitOperator mixed = 0.25 * TwoQubitOperator::Identity();
  CHECK(concurrence_wootters(mixed).value == 0.0);
  CHECK(concurrence_xcorr(mixed).value == 0.0);
}

TEST_CASE("Werner state concurrence is max{0, (3p-1)/2}") {
  // Closed form obtained from the X_corr expression with the Werner
  // expectation values |z| = p/2, a = (1-p)/4; frozen spot value below.
  for (const double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    const TwoQubitOperator rho =
        p * bell_state(Bell::PsiMinus) + (1.0 - p) * 0.25 * TwoQubitOperator::Identity();
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(concurrence_wootters(rho).value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(concurrence_xcorr(rho).value == doctest::Approx(expected).epsilon(1e-12));
  }
  const TwoQubitOperator half =
      0.5 * bell_state(Bell::PsiMinus) + 0.5 * 0.25 * TwoQubitOperator::Identity();
  CHECK(concurrence_wootters(half).value == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("closed form and Wootters agree on random X_corr states") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 1000; ++rep) {
    const TwoQubitOperator rho = testutil::random_xcorr(rng);
    const double a = concurrence_wootters(rho).value;
    const double b = concurrence_xcorr(rho).value;
    CHECK(std::abs(a - b) <= 1e-10);
  }
}

TEST_CASE("Wootters concurrence is invariant under local unitaries") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    const TwoQubitOperator rho = testutil::random_density(rng);
    const double c0 = concurrence_wootters(rho).value;
    const TwoQubitOperator uv =
        tensor(testutil::random_unitary2(rng), testutil::random_unitary2(rng));
    const double c1 = concurrence_wootters(uv * rho * uv.adjoint()).value;
    CHECK(std::abs(c0 - c1) <= 1e-10);
  }
}

TEST_CASE("product pure states are separable") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    TwoQubitOperator up_up = TwoQubitOperator::Zero();
    up_up(2, 2) = 1.0;
    const TwoQubitOperator uv =
        tensor(testutil::random_unitary2(rng), testutil::random_unitary2(rng));
    CHECK(concurrence_wootters(uv * up_up * uv.adjoint()).value < 1e-10);
  }
}

TEST_CASE("X_corr states are invariant under the spin flip") {
  std::mt19937_64 rng(14);
  for (int rep = 0; rep < 100; ++rep) {
    const TwoQubitOperator rho = testutil::random_xcorr(rng);
    CHECK(max_abs(spin_flip(rho) - rho) < 1e-14);
  }
}

TEST_CASE("error paths") {
  TwoQubitOperator negative = 0.25 * TwoQubitOperator::Identity();
  negative(0, 0) = -0.5;
  negative(1, 1) = 1.0;
  CHECK_THROWS_AS(concurrence_wootters(negative), std::domain_error);

  TwoQubitOperator up_up = TwoQubitOperator::Zero();
  up_up(2, 2) = 1.0;  // valid density matrix, but outside X_corr
  CHECK_THROWS_AS(concurrence_xcorr(up_up), std::domain_error);
}

TEST_SUITE_END();
