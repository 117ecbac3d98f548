#include "bellnoise/superoperator.hpp"

#include <cmath>

namespace bellnoise {

SuperVector vectorize(const TwoQubitOperator& a) {
  SuperVector v;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v(4 * i + j) = a(i, j);
  return v;
}

TwoQubitOperator unvectorize(const SuperVector& v) {
  TwoQubitOperator a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = v(4 * i + j);
  return a;
}

SuperOperator kron4(const TwoQubitOperator& x, const TwoQubitOperator& y) {
  SuperOperator out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.block<4, 4>(4 * i, 4 * j) = x(i, j) * y;
  return out;
}

SuperOperator left_mult(const TwoQubitOperator& x) {
  return kron4(x, TwoQubitOperator::Identity());
}

SuperOperator right_mult(const TwoQubitOperator& y) {
  return kron4(TwoQubitOperator::Identity(), y.transpose());
}

SuperOperator commutator_superop(const TwoQubitOperator& x) {
  return left_mult(x) - right_mult(x);
}

SuperOperator spin_superop(int qubit, int axis) {
  return commutator_superop(embed(qubit, spin_half(axis)));
}

SuperOperator z_rotation_superop(double theta) {
  // Jz1 + Jz2 is diagonal with entries (0, 0, 1, -1) in the fixed basis.
  TwoQubitOperator u = TwoQubitOperator::Identity();
  u(2, 2) = std::polar(1.0, theta);
  u(3, 3) = std::polar(1.0, -theta);
  return conjugation_superop(u);
}

SuperOperator conjugation_superop(const TwoQubitOperator& u) {
  return kron4(u, u.conjugate());
}

}  // namespace bellnoise
