#include "bellnoise/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bellnoise {

namespace {

// Ties below this spacing are treated as exact degeneracies; they do not
// change r1 - r2 - r3 - r4.
constexpr double kTieTol = 1e-13;

TwoQubitOperator hermitian_sqrt(const TwoQubitOperator& rho, double psd_tol) {
  Eigen::SelfAdjointEigenSolver<TwoQubitOperator> es(0.5 * (rho + rho.adjoint()));
  Eigen::Vector4d ev = es.eigenvalues();
  for (int i = 0; i < 4; ++i) {
    if (ev(i) < -psd_tol)
      throw std::domain_error("concurrence_wootters: density matrix not positive semidefinite");
    // Rank-deficient inputs: eigenvalues at solver noise level must
    // become exact zeros, or their square roots (~1e-8) leak into the
    // spin-flip spectrum.
    ev(i) = ev(i) > 1e-14 ? std::sqrt(ev(i)) : 0.0;
  }
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

TwoQubitOperator spin_flip(const TwoQubitOperator& rho) {
  const TwoQubitOperator syy = tensor(2.0 * spin_half(1), 2.0 * spin_half(1));
  return syy * rho.conjugate() * syy;
}

ConcurrenceValue concurrence_wootters(const TwoQubitOperator& rho, double psd_tol) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > psd_tol ||
      std::abs(rho.trace() - Complex(1.0)) > psd_tol)
    throw std::domain_error("concurrence_wootters: input is not a density matrix");

  // The r_i are the square roots of the eigenvalues of rho*tau(rho),
  // i.e. of the Hermitian equivalent m = sqrt(rho) tau(rho) sqrt(rho).
  // Since m = X X^dag with X = sqrt(rho) (sy x sy) conj(sqrt(rho)), the
  // r_i are the singular values of X, which come out with absolute
  // rather than squared accuracy.
  const TwoQubitOperator sq = hermitian_sqrt(rho, psd_tol);
  const TwoQubitOperator syy = tensor(2.0 * spin_half(1), 2.0 * spin_half(1));
  const TwoQubitOperator x = sq * syy * sq.conjugate();

  Eigen::JacobiSVD<TwoQubitOperator> svd(x);
  Eigen::Vector4d sv = svd.singularValues();  // non-increasing
  std::array<double, 4> r{sv(0), sv(1), sv(2), sv(3)};
  for (int i = 1; i < 4; ++i)
    if (r[i - 1] - r[i] < kTieTol) r[i] = r[i - 1] = 0.5 * (r[i - 1] + r[i]);

  return {std::max(0.0, r[0] - r[1] - r[2] - r[3]), ConcurrenceMethod::Wootters};
}

ConcurrenceValue concurrence_xcorr(const TwoQubitOperator& rho, double xcorr_tol) {
  if (!is_xcorr(rho, xcorr_tol))
    throw std::domain_error("concurrence_xcorr: input is outside the X_corr class");
  const Complex e_pm = tensor_expectation(rho, SphericalTensorLabel::product(1, 1, 1, -1));
  const Complex e_pp = tensor_expectation(rho, SphericalTensorLabel::product(1, 1, 1, 1));
  const Complex e_00 = tensor_expectation(rho, SphericalTensorLabel::product(1, 0, 1, 0));
  return {concurrence_from_expectations(e_pm, e_pp, e_00.real()),
          ConcurrenceMethod::XcorrClosedForm};
}

double concurrence_from_expectations(Complex e_pm, Complex e_pp, double e_00) {
  const double branch_psi = 2.0 * std::abs(e_pm) - 0.25 - e_00;
  const double branch_phi = 2.0 * std::abs(e_pp) - 0.25 + e_00;
  return 2.0 * std::max({0.0, branch_psi, branch_phi});
}

}  // namespace bellnoise
