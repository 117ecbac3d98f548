#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "bellnoise/operators.hpp"

namespace bellnoise::testutil {

inline Complex random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

inline TwoQubitOperator random_hermitian(std::mt19937_64& rng) {
  TwoQubitOperator a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = random_complex(rng);
  return 0.5 * (a + a.adjoint());
}

inline TwoQubitOperator random_density(std::mt19937_64& rng) {
  TwoQubitOperator a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = random_complex(rng);
  TwoQubitOperator rho = a * a.adjoint();
  return rho / rho.trace().real();
}

// Random member of the fully correlated X-state class: diagonal pairs
// (b, b, a, a) in the fixed basis with coherences |z| <= b, |w| <= a,
// which is exactly the positivity condition of the two 2x2 blocks.
inline TwoQubitOperator random_xcorr(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double a = 0.5 * u01(rng);
  const double b = 0.5 - a;
  const double zr = b * u01(rng), zp = 2.0 * kPi * u01(rng);
  const double wr = a * u01(rng), wp = 2.0 * kPi * u01(rng);
  const Complex z = std::polar(zr, zp), w = std::polar(wr, wp);
  TwoQubitOperator rho = TwoQubitOperator::Zero();
  rho(0, 0) = b; rho(1, 1) = b; rho(2, 2) = a; rho(3, 3) = a;
  rho(0, 1) = z; rho(1, 0) = std::conj(z);
  rho(2, 3) = w; rho(3, 2) = std::conj(w);
  return rho;
}

inline Matrix2 random_unitary2(std::mt19937_64& rng) {
  Matrix2 a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = random_complex(rng);
  const Eigen::HouseholderQR<Matrix2> qr(a);
  Matrix2 q = qr.householderQ();
  const Matrix2 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline double max_abs(const TwoQubitOperator& a) { return a.cwiseAbs().maxCoeff(); }

// Adaptive Simpson quadrature, used as the independent oracle for the
// closed-form noise integrals.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int depth = 28) {
  const auto simpson = [&](double lo, double hi) {
    return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(0.5 * (lo + hi)) + f(hi));
  };
  std::function<double(double, double, double, double, int)> go =
      [&](double lo, double hi, double whole, double eps, int d) -> double {
    const double mid = 0.5 * (lo + hi);
    const double left = simpson(lo, mid), right = simpson(mid, hi);
    if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
      return left + right + (left + right - whole) / 15.0;
    return go(lo, mid, left, 0.5 * eps, d - 1) + go(mid, hi, right, 0.5 * eps, d - 1);
  };
  return go(a, b, simpson(a, b), tol, depth);
}

}  // namespace bellnoise::testutil
