#include "bellnoise/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bellnoise/concurrence.hpp"

namespace bellnoise {

namespace {

double max0(double x) { return x > 0.0 ? x : 0.0; }

double eta_of(double gamma) { return std::sqrt(1.0 + 8.0 * gamma * gamma) / 3.0; }

// Inner expressions of the max{0, .} closed forms, x = t/T.
double iso_inner(Bell state, double gamma, double x) {
  if (state == Bell::PsiMinus) return -0.5 + 1.5 * std::exp(-4.0 * (1.0 - gamma) * x);
  return -0.5 + std::exp(-4.0 * (1.0 - gamma) * x) * (1.0 + 8.0 * std::exp(-6.0 * gamma * x)) / 6.0;
}

double tr_inner(Bell state, double gamma, double x) {
  const double eta = eta_of(gamma);
  const double fast = std::exp(-3.0 * (1.0 + eta) * x);
  const double slow = std::exp(-3.0 * (1.0 - eta) * x);
  switch (state) {
    case Bell::PsiMinus:
      return -0.5 + fast * (9.0 * eta - (1.0 + 8.0 * gamma)) / (12.0 * eta) +
             slow * (9.0 * eta + (1.0 + 8.0 * gamma)) / (12.0 * eta);
    case Bell::PsiPlus:
      return -0.5 + fast * (9.0 * eta - (1.0 - 8.0 * gamma)) / (12.0 * eta) +
             slow * (9.0 * eta + (1.0 - 8.0 * gamma)) / (12.0 * eta);
    default:  // Phi_+-
      return -0.5 + std::exp(-2.0 * x) + fast * (3.0 * eta + 1.0) / (12.0 * eta) +
             slow * (3.0 * eta - 1.0) / (12.0 * eta);
  }
}

}  // namespace

double RegimeParams::eta() const { return eta_of(gamma); }

double dephasing_concurrence(Bell state, double big_gamma, double big_gamma_cross) {
  const double sign = (state == Bell::PsiMinus || state == Bell::PsiPlus) ? -1.0 : 1.0;
  return std::exp(-2.0 * (big_gamma + sign * big_gamma_cross));
}

double isotropic_white_concurrence(Bell state, double gamma, double T, double t) {
  if (t < 0.0) throw std::invalid_argument("isotropic_white_concurrence: t must be non-negative");
  return max0(iso_inner(state, gamma, t / T));
}

double transverse_white_concurrence(Bell state, double gamma, double T, double t) {
  if (t < 0.0) throw std::invalid_argument("transverse_white_concurrence: t must be non-negative");
  return max0(tr_inner(state, gamma, t / T));
}

double sudden_death_time(Bell state, const RegimeParams& regime) {
  const double inf = std::numeric_limits<double>::infinity();
  if (regime.geometry == Geometry::Dephasing) return inf;  // only asymptotic decay
  if (state == Bell::PsiMinus && regime.gamma == 1.0) return inf;

  const auto inner = [&](double t) {
    const double x = t / regime.T;
    return regime.geometry == Geometry::Isotropic ? iso_inner(state, regime.gamma, x)
                                                  : tr_inner(state, regime.gamma, x);
  };

  double lo = 0.0, hi = 10.0 * regime.T;
  while (inner(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e15 * regime.T) return inf;
  }
  // The inner expressions are strictly decreasing sums of decaying
  // exponentials, so the crossing is unique.
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    (inner(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

QsbaValue qsba_concurrence(Bell state, bool correlated, double sigma1, double sigma2,
                           double omega, double t) {
  if (omega <= 0.0) throw std::invalid_argument("qsba_concurrence: omega must be positive");
  if (t < 0.0) throw std::invalid_argument("qsba_concurrence: t must be non-negative");
  QsbaValue out;
  out.within_validity = std::max(sigma1, sigma2) / omega <= 0.3;
  if (correlated) {
    if (state == Bell::PsiMinus || state == Bell::PsiPlus) {
      out.value = 1.0;
      return out;
    }
    const double tau = omega / (2.0 * sigma1 * sigma2);
    const double x = t / tau;
    out.value = 1.0 / std::sqrt(1.0 + x * x);
    return out;
  }
  double c = 1.0;
  for (const double sigma : {sigma1, sigma2}) {
    const double x = t * sigma * sigma / omega;  // t/tau_n
    c /= std::sqrt(1.0 + x * x);
  }
  out.value = c;
  return out;
}

std::vector<EigenPair> transverse_L_eigensystem(double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("transverse_L_eigensystem: gamma must lie in [0, 1]");
  const double eta = eta_of(gamma);
  const auto prod = [](int m1, int m2) { return product_tensor(1, m1, 1, m2); };
  const auto normalized = [](const TwoQubitOperator& op) {
    return TwoQubitOperator(op / std::sqrt(hs_inner(op, op).real()));
  };

  std::vector<EigenPair> pairs;
  pairs.reserve(9);
  // Order matters to callers assembling the full superoperator:
  // M = +2, -2, then the three M = 0 operators, then M = +1, -1 pairs.
  pairs.push_back({2.0 * (1.0 + 2.0 * gamma), normalized(prod(1, 1))});
  pairs.push_back({2.0 * (1.0 + 2.0 * gamma), normalized(prod(-1, -1))});
  pairs.push_back({-2.0 * (1.0 - 2.0 * gamma), normalized(-prod(1, -1) + prod(-1, 1))});
  if (gamma > 0.0) {
    const double c_minus = (1.0 - 3.0 * eta) / (2.0 * gamma);
    const double c_plus = (1.0 + 3.0 * eta) / (2.0 * gamma);
    pairs.push_back({-1.0 + 4.0 * gamma - 3.0 * eta,
                     normalized(prod(1, -1) + prod(-1, 1) + c_minus * prod(0, 0))});
    pairs.push_back({-1.0 + 4.0 * gamma + 3.0 * eta,
                     normalized(prod(1, -1) + prod(-1, 1) + c_plus * prod(0, 0))});
  } else {
    // gamma -> 0 limits of the mixing coefficients: the block is diagonal.
    pairs.push_back({-2.0, normalized(prod(1, -1) + prod(-1, 1))});
    pairs.push_back({0.0, normalized(prod(0, 0))});
  }
  pairs.push_back({6.0 * gamma, normalized(prod(0, 1) + prod(1, 0))});
  pairs.push_back({6.0 * gamma, normalized(prod(0, -1) + prod(-1, 0))});
  pairs.push_back({2.0 * gamma, normalized(prod(0, 1) - prod(1, 0))});
  pairs.push_back({2.0 * gamma, normalized(prod(0, -1) - prod(-1, 0))});
  return pairs;
}

namespace {

void add_projector(SuperOperator& u, const TwoQubitOperator& b, Complex factor) {
  const SuperVector v = vectorize(b);
  u += (factor / v.squaredNorm()) * (v * v.adjoint());
}

}  // namespace

SuperOperator transverse_white_superoperator(double gamma, double T, double omega, double t) {
  SuperOperator u = SuperOperator::Zero();
  add_projector(u, TwoQubitOperator::Identity(), 1.0);
  for (int m = -1; m <= 1; ++m) {
    // Single-qubit-polarized sector: rate (1-gamma)*2 - m^2 + 2*gamma.
    const Complex factor = std::polar(std::exp(-(2.0 - m * m) * t / T), m * omega * t);
    add_projector(u, product_tensor(1, m, 0, 0), factor);
    add_projector(u, product_tensor(0, 0, 1, m), factor);
  }
  const auto pairs = transverse_L_eigensystem(gamma);
  const int big_m[9] = {2, -2, 0, 0, 0, 1, -1, 1, -1};
  for (int k = 0; k < 9; ++k) {
    const double rate = 4.0 * (1.0 - gamma) - big_m[k] * big_m[k] + pairs[k].eigenvalue;
    const Complex factor = std::polar(std::exp(-rate * t / T), big_m[k] * omega * t);
    add_projector(u, pairs[k].op, factor);
  }
  return u;
}

double transverse_white_concurrence_via_eigensystem(Bell state, double gamma, double T,
                                                    double omega, double t) {
  const SuperOperator u = transverse_white_superoperator(gamma, T, omega, t);
  const TwoQubitOperator rho0 = bell_state(state);
  const auto evolved = [&](int m1, int m2) {
    const TwoQubitOperator a = unvectorize(u * vectorize(product_tensor(1, m1, 1, m2)));
    return (a * rho0).trace();
  };
  return concurrence_from_expectations(evolved(1, -1), evolved(1, 1), evolved(0, 0).real());
}

SuperOperator effective_dephasing_propagator(const NoiseSpec& spec, double omega, double t) {
  if (!spec.axes.transverse())
    throw std::invalid_argument("effective_dephasing_propagator: requires transverse geometry");
  if (spec.kind != NoiseKind::Ou)
    throw std::invalid_argument("effective_dephasing_propagator: requires OU noise");
  if (spec.gamma != 1.0 || spec.sigma1 != spec.sigma2)
    throw std::invalid_argument(
        "effective_dephasing_propagator: requires fully correlated noise of equal amplitude");

  const TransverseDecay d = transverse_decay(spec, omega, t);
  const double theta = omega * t + d.delta_omega_t;
  const auto factor = [&](int L, int M) {
    return std::polar(std::exp(-d.gamma_perp * (L * (L + 1) - M * M)), M * theta);
  };

  SuperOperator u = SuperOperator::Zero();
  add_projector(u, TwoQubitOperator::Identity(), 1.0);
  for (int m = -1; m <= 1; ++m) {
    add_projector(u, product_tensor(1, m, 0, 0), factor(1, m));
    add_projector(u, product_tensor(0, 0, 1, m), factor(1, m));
  }
  for (int L = 0; L <= 2; ++L)
    for (int M = -L; M <= L; ++M) add_projector(u, coupled_tensor(L, M), factor(L, M));
  return u;
}

}  // namespace bellnoise
