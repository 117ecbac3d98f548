#pragma once

#include "bellnoise/operators.hpp"

namespace bellnoise {

enum class ConcurrenceMethod { Wootters, XcorrClosedForm };

struct ConcurrenceValue {
  double value = 0.0;
  ConcurrenceMethod method = ConcurrenceMethod::Wootters;
};

/// Spin-flip (time reversal) map (sy x sy) rho* (sy x sy).
TwoQubitOperator spin_flip(const TwoQubitOperator& rho);

/// General concurrence C = max{0, r1-r2-r3-r4}, r_i the square roots of
/// the eigenvalues of rho * spin_flip(rho), sorted descending. Computed
/// through the Hermitian equivalent sqrt(rho) tau(rho) sqrt(rho); input
/// eigenvalues below -psd_tol raise, those in [-psd_tol, 0) are clipped.
ConcurrenceValue concurrence_wootters(const TwoQubitOperator& rho, double psd_tol = 1e-8);

/// Closed-form concurrence for the fully correlated X-state class,
/// assembled from three tensor-product expectation values. Refuses
/// inputs outside the class.
ConcurrenceValue concurrence_xcorr(const TwoQubitOperator& rho, double xcorr_tol = 1e-9);

/// The same closed form on raw expectation values:
/// C = 2 max{0, 2|e_pm| - 1/4 - e_00, 2|e_pp| - 1/4 + e_00} where
/// e_pm = <T11 x T1-1>, e_pp = <T11 x T11>, e_00 = <T10 x T10>.
double concurrence_from_expectations(Complex e_pm, Complex e_pp, double e_00);

}  // namespace bellnoise
