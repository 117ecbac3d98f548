#pragma once

#include "bellnoise/operators.hpp"

namespace bellnoise {

// 16x16 complex matrices acting on row-major vectorized two-qubit
// operators: vec(A)(4i + j) = A(i, j), so vec(X A Y) = (X kron Y^T) vec(A)
// and vec(X)^dag vec(Y) = Tr(X^dag Y).
using SuperOperator = Eigen::Matrix<Complex, 16, 16>;
using SuperVector = Eigen::Matrix<Complex, 16, 1>;

SuperVector vectorize(const TwoQubitOperator& a);
TwoQubitOperator unvectorize(const SuperVector& v);

SuperOperator kron4(const TwoQubitOperator& x, const TwoQubitOperator& y);
SuperOperator left_mult(const TwoQubitOperator& x);   // A -> X A
SuperOperator right_mult(const TwoQubitOperator& y);  // A -> A Y

/// Commutator superoperator A -> [X, A].
SuperOperator commutator_superop(const TwoQubitOperator& x);

/// J_i^(n) as a superoperator; axis 0=x, 1=y, 2=z.
SuperOperator spin_superop(int qubit, int axis);

/// A -> e^{i theta Jz_tot} A e^{-i theta Jz_tot} (exact, no expm).
SuperOperator z_rotation_superop(double theta);

/// Conjugation A -> U A U^dag.
SuperOperator conjugation_superop(const TwoQubitOperator& u);

}  // namespace bellnoise
