#include "bellnoise/operators.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

namespace bellnoise {

namespace {

// Qubit spin components of each two-qubit basis vector (0 = up, 1 = down).
constexpr int kSpin1[4] = {0, 1, 0, 1};
constexpr int kSpin2[4] = {1, 0, 0, 1};

const Complex kI{0.0, 1.0};

}  // namespace

TwoQubitOperator tensor(const Matrix2& a, const Matrix2& b) {
  TwoQubitOperator out;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      out(p, q) = a(kSpin1[p], kSpin1[q]) * b(kSpin2[p], kSpin2[q]);
  return out;
}

TwoQubitOperator embed(int qubit, const Matrix2& a) {
  if (qubit != 1 && qubit != 2)
    throw std::invalid_argument("embed: qubit index must be 1 or 2");
  const Matrix2 id = Matrix2::Identity();
  return qubit == 1 ? tensor(a, id) : tensor(id, a);
}

Matrix2 spin_half(int axis) {
  Matrix2 s;
  switch (axis) {
    case 0: s << 0, 0.5, 0.5, 0; break;
    case 1: s << 0, -0.5 * kI, 0.5 * kI, 0; break;
    case 2: s << 0.5, 0, 0, -0.5; break;
    default: throw std::invalid_argument("spin_half: axis must be 0, 1 or 2");
  }
  return s;
}

std::array<TwoQubitOperator, 3> spin_operators(int qubit) {
  if (qubit != 1 && qubit != 2)
    throw std::invalid_argument("spin_operators: qubit index must be 1 or 2");
  return {embed(qubit, spin_half(0)), embed(qubit, spin_half(1)), embed(qubit, spin_half(2))};
}

Matrix2 spherical_tensor(int l, int m) {
  if (l != 0 && l != 1) throw std::invalid_argument("spherical_tensor: l must be 0 or 1");
  if (std::abs(m) > l) throw std::invalid_argument("spherical_tensor: |m| must not exceed l");
  if (l == 0) return 0.5 * Matrix2::Identity();  // Tr(T^dag T) = 1/2, as for T_1m
  if (m == 0) return spin_half(2);
  const Matrix2 jpm = spin_half(0) + double(m) * kI * spin_half(1);  // J_+ or J_-
  return (m > 0 ? -1.0 : 1.0) / std::sqrt(2.0) * jpm;
}

double clebsch_gordan_11(int m1, int m2, int L, int M) {
  if (L < 0 || L > 2 || std::abs(M) > L)
    throw std::invalid_argument("clebsch_gordan_11: L must be in {0,1,2} with |M| <= L");
  if (std::abs(m1) > 1 || std::abs(m2) > 1 || m1 + m2 != M) return 0.0;
  const double rt2 = std::sqrt(0.5), rt3 = 1.0 / std::sqrt(3.0), rt6 = 1.0 / std::sqrt(6.0);
  if (L == 2) {
    if (M == 2 || M == -2) return 1.0;
    if (M == 1 || M == -1) return rt2;
    return m1 == 0 ? 2.0 * rt6 : rt6;  // M = 0
  }
  if (L == 1) {
    if (m1 == m2) return 0.0;          // (0,0) -> 0
    return m1 > m2 ? rt2 : -rt2;       // first-factor-higher convention
  }
  return m1 == 0 ? -rt3 : rt3;         // L = 0
}

TwoQubitOperator product_tensor(int l1, int m1, int l2, int m2) {
  return tensor(spherical_tensor(l1, m1), spherical_tensor(l2, m2));
}

TwoQubitOperator coupled_tensor(int L, int M) {
  if (L < 0 || L > 2 || std::abs(M) > L)
    throw std::invalid_argument("coupled_tensor: L must be in {0,1,2} with |M| <= L");
  TwoQubitOperator out = TwoQubitOperator::Zero();
  for (int m1 = -1; m1 <= 1; ++m1) {
    const int m2 = M - m1;
    if (std::abs(m2) > 1) continue;
    const double cg = clebsch_gordan_11(m1, m2, L, M);
    if (cg != 0.0) out += cg * product_tensor(1, m1, 1, m2);
  }
  return out;
}

Eigen::Vector4cd bell_vector(Bell label) {
  const double s = std::sqrt(0.5);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (label) {
    case Bell::PsiMinus: v(0) = s; v(1) = -s; break;
    case Bell::PsiPlus:  v(0) = s; v(1) = s; break;
    case Bell::PhiPlus:  v(2) = s; v(3) = s; break;
    case Bell::PhiMinus: v(2) = s; v(3) = -s; break;
  }
  return v;
}

TwoQubitOperator bell_state(Bell label) {
  const Eigen::Vector4cd v = bell_vector(label);
  return v * v.adjoint();
}

std::string bell_name(Bell label) {
  switch (label) {
    case Bell::PsiMinus: return "psi_minus";
    case Bell::PsiPlus:  return "psi_plus";
    case Bell::PhiPlus:  return "phi_plus";
    case Bell::PhiMinus: return "phi_minus";
  }
  return "?";
}

SphericalTensorLabel SphericalTensorLabel::identity() { return {}; }

SphericalTensorLabel SphericalTensorLabel::product(int l1, int m1, int l2, int m2) {
  SphericalTensorLabel lab;
  lab.kind = Kind::Product;
  lab.l1 = l1; lab.m1 = m1; lab.l2 = l2; lab.m2 = m2;
  return lab;
}

SphericalTensorLabel SphericalTensorLabel::coupled(int L, int M) {
  SphericalTensorLabel lab;
  lab.kind = Kind::Coupled;
  lab.L = L; lab.M = M;
  return lab;
}

TwoQubitOperator SphericalTensorLabel::matrix() const {
  switch (kind) {
    case Kind::Identity: return TwoQubitOperator::Identity();
    case Kind::Product: return product_tensor(l1, m1, l2, m2);
    case Kind::Coupled: return coupled_tensor(L, M);
  }
  throw std::logic_error("SphericalTensorLabel: bad kind");
}

std::string SphericalTensorLabel::name() const {
  char buf[64];
  switch (kind) {
    case Kind::Identity: return "1";
    case Kind::Product:
      std::snprintf(buf, sizeof buf, "T(%d,%d)xT(%d,%d)", l1, m1, l2, m2);
      return buf;
    case Kind::Coupled:
      std::snprintf(buf, sizeof buf, "T(%d,%d|11)", L, M);
      return buf;
  }
  return "?";
}

bool operator<(const SphericalTensorLabel& a, const SphericalTensorLabel& b) {
  return std::tie(a.kind, a.l1, a.m1, a.l2, a.m2, a.L, a.M) <
         std::tie(b.kind, b.l1, b.m1, b.l2, b.m2, b.L, b.M);
}

bool operator==(const SphericalTensorLabel& a, const SphericalTensorLabel& b) {
  return !(a < b) && !(b < a);
}

std::vector<SphericalTensorLabel> product_basis_labels() {
  std::vector<SphericalTensorLabel> labels{SphericalTensorLabel::identity()};
  for (int l1 = 0; l1 <= 1; ++l1)
    for (int m1 = -l1; m1 <= l1; ++m1)
      for (int l2 = 0; l2 <= 1; ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2) {
          if (l1 == 0 && l2 == 0) continue;  // identity carries that ray
          labels.push_back(SphericalTensorLabel::product(l1, m1, l2, m2));
        }
  return labels;
}

std::vector<SphericalTensorLabel> coupled_basis_labels() {
  std::vector<SphericalTensorLabel> labels{SphericalTensorLabel::identity()};
  for (int m = -1; m <= 1; ++m) labels.push_back(SphericalTensorLabel::product(1, m, 0, 0));
  for (int m = -1; m <= 1; ++m) labels.push_back(SphericalTensorLabel::product(0, 0, 1, m));
  for (int L = 0; L <= 2; ++L)
    for (int M = -L; M <= L; ++M) labels.push_back(SphericalTensorLabel::coupled(L, M));
  return labels;
}

DecompositionCoefficients decompose(const TwoQubitOperator& op, TensorBasis basis) {
  DecompositionCoefficients dec;
  dec.basis = basis;
  const auto labels =
      basis == TensorBasis::Product ? product_basis_labels() : coupled_basis_labels();
  for (const auto& label : labels) {
    const TwoQubitOperator b = label.matrix();
    dec.coeffs[label] = hs_inner(b, op) / hs_inner(b, b);
  }
  return dec;
}

TwoQubitOperator recompose(const DecompositionCoefficients& dec) {
  TwoQubitOperator out = TwoQubitOperator::Zero();
  for (const auto& [label, c] : dec.coeffs) out += c * label.matrix();
  return out;
}

Complex tensor_expectation(const TwoQubitOperator& rho, const SphericalTensorLabel& label) {
  return (label.matrix() * rho).trace();
}

Complex hs_inner(const TwoQubitOperator& a, const TwoQubitOperator& b) {
  return (a.adjoint() * b).trace();
}

bool is_density_matrix(const TwoQubitOperator& op, double tol) {
  if ((op - op.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(op.trace() - Complex(1.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<TwoQubitOperator> es(0.5 * (op + op.adjoint()));
  return es.eigenvalues().minCoeff() >= -tol;
}

bool is_xcorr(const TwoQubitOperator& op, double tol) {
  if (!is_density_matrix(op))
    throw std::invalid_argument("is_xcorr: input is not a density matrix");
  const auto dec = decompose(op, TensorBasis::Product);
  for (const auto& [label, c] : dec.coeffs) {
    if (label.kind == SphericalTensorLabel::Kind::Identity) continue;
    const bool allowed = label.l1 == 1 && label.l2 == 1 &&
                         (label.m1 + label.m2 == 0 || std::abs(label.m1 + label.m2) == 2);
    if (!allowed && std::abs(c) > tol) return false;
  }
  return true;
}

Matrix2 partial_trace(const TwoQubitOperator& op, int keep_qubit) {
  if (keep_qubit != 1 && keep_qubit != 2)
    throw std::invalid_argument("partial_trace: qubit index must be 1 or 2");
  // index[s1][s2] in the fixed basis ordering
  constexpr int idx[2][2] = {{2, 0}, {1, 3}};
  Matrix2 out = Matrix2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) {
        if (keep_qubit == 1)
          out(a, b) += op(idx[a][k], idx[b][k]);
        else
          out(a, b) += op(idx[k][a], idx[k][b]);
      }
  return out;
}

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
  return buf;
}

std::string dump_matrix(const TwoQubitOperator& op) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out += format_complex(op(i, j));
      out += j == 3 ? '\n' : ' ';
    }
  }
  return out;
}

}  // namespace bellnoise
