#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bellnoise {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using TwoQubitOperator = Eigen::Matrix4cd;

inline constexpr double kPi = 3.14159265358979323846;

// Two-qubit product basis ordering used everywhere, including dumped
// matrices: index 0 = |ud>, 1 = |du>, 2 = |uu>, 3 = |dd>.
// Single-qubit basis: index 0 = |u>, 1 = |d>.

/// Tensor product A (qubit 1) x B (qubit 2) in the fixed basis ordering.
TwoQubitOperator tensor(const Matrix2& a, const Matrix2& b);

/// Embed a single-qubit operator, identity on the other qubit.
TwoQubitOperator embed(int qubit, const Matrix2& a);

/// Single-qubit spin component J_i = sigma_i/2; axis 0=x, 1=y, 2=z.
Matrix2 spin_half(int axis);

/// (Jx, Jy, Jz) of the indexed qubit acting in the two-qubit space.
std::array<TwoQubitOperator, 3> spin_operators(int qubit);

/// Single-qubit spherical tensor T_lm, l in {0,1}; Tr(T^dag T) = 1/2.
Matrix2 spherical_tensor(int l, int m);

/// Clebsch-Gordan coefficient <1,m1;1,m2|L,M>; zero unless M = m1+m2.
double clebsch_gordan_11(int m1, int m2, int L, int M);

/// Product tensor T_{l1 m1} x T_{l2 m2}.
TwoQubitOperator product_tensor(int l1, int m1, int l2, int m2);

/// Coupled tensor T_{LM(11)} = sum_m <1,m;1,M-m|L,M> T_{1m} x T_{1,M-m}.
TwoQubitOperator coupled_tensor(int L, int M);

enum class Bell { PsiMinus, PsiPlus, PhiPlus, PhiMinus };

Eigen::Vector4cd bell_vector(Bell label);
TwoQubitOperator bell_state(Bell label);
std::string bell_name(Bell label);

struct SphericalTensorLabel {
  enum class Kind { Identity, Product, Coupled };

  Kind kind = Kind::Identity;
  int l1 = 0, m1 = 0, l2 = 0, m2 = 0;  // product labels
  int L = 0, M = 0;                    // coupled labels

  static SphericalTensorLabel identity();
  static SphericalTensorLabel product(int l1, int m1, int l2, int m2);
  static SphericalTensorLabel coupled(int L, int M);

  // Basis element named by the label. Identity is the unnormalized unit
  // matrix; the l = 0 tensor factors inside product labels are T_00 = 1/2,
  // so the identity label and the (0,0,0,0) product label span the same
  // ray. decompose() projects onto the identity label only.
  TwoQubitOperator matrix() const;
  std::string name() const;

  friend bool operator<(const SphericalTensorLabel& a, const SphericalTensorLabel& b);
  friend bool operator==(const SphericalTensorLabel& a, const SphericalTensorLabel& b);
};

enum class TensorBasis { Product, Coupled };

struct DecompositionCoefficients {
  TensorBasis basis = TensorBasis::Product;
  std::map<SphericalTensorLabel, Complex> coeffs;
};

/// Basis label sets used by decompose(): identity + 15 products, or
/// identity + 6 single-qubit-polarized products + 9 coupled tensors.
std::vector<SphericalTensorLabel> product_basis_labels();
std::vector<SphericalTensorLabel> coupled_basis_labels();

/// Hilbert-Schmidt projection c = Tr(B^dag op) / Tr(B^dag B) per label.
DecompositionCoefficients decompose(const TwoQubitOperator& op, TensorBasis basis);
TwoQubitOperator recompose(const DecompositionCoefficients& dec);

/// <T_label>_rho = Tr(T_label rho).
Complex tensor_expectation(const TwoQubitOperator& rho, const SphericalTensorLabel& label);

Complex hs_inner(const TwoQubitOperator& a, const TwoQubitOperator& b);

bool is_density_matrix(const TwoQubitOperator& op, double tol = 1e-8);

/// Membership test for the fully correlated X-state class: only the
/// identity and products T_{1m1} x T_{1m2} with m1+m2 in {0,+-2} may
/// carry weight above tol. Throws if op is not a density matrix.
bool is_xcorr(const TwoQubitOperator& op, double tol = 1e-9);

Matrix2 partial_trace(const TwoQubitOperator& op, int keep_qubit);

/// Row-major dump, "re+imj" entries at 17 significant digits, one row
/// per line, in the documented basis ordering.
std::string format_complex(Complex z);
std::string dump_matrix(const TwoQubitOperator& op);

}  // namespace bellnoise
