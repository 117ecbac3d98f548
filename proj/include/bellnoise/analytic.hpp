#pragma once

#include <vector>

#include "bellnoise/noise.hpp"
#include "bellnoise/operators.hpp"
#include "bellnoise/scenario.hpp"
#include "bellnoise/superoperator.hpp"

namespace bellnoise {

struct RegimeParams {
  Geometry geometry = Geometry::Dephasing;
  double gamma = 0.0;
  double T = 1.0;      // white-noise timescale
  double omega = 0.0;
  double sigma1 = 0.0, sigma2 = 0.0;

  double eta() const;  // sqrt(1 + 8 gamma^2)/3, in [1/3, 1]
};

/// Exact pure-dephasing concurrence for any Gaussian noise:
/// Psi_+-: e^{-2[G - Gx]}, Phi_+-: e^{-2[G + Gx]}.
double dephasing_concurrence(Bell state, double big_gamma, double big_gamma_cross);

/// Isotropic white noise closed forms.
double isotropic_white_concurrence(Bell state, double gamma, double T, double t);

/// Purely transverse white noise closed forms (eta-dependent).
double transverse_white_concurrence(Bell state, double gamma, double T, double t);

/// Smallest t with C(t) = 0 under the white-noise closed forms; +inf for
/// pure dephasing and for Psi- under fully correlated noise.
double sudden_death_time(Bell state, const RegimeParams& regime);

struct QsbaValue {
  double value = 1.0;
  bool within_validity = true;  // false once sigma/omega > 0.3
};

/// Quasi-static-bath concurrence: independent noises give the product of
/// 1/sqrt(1 + (t/tau_n)^2), tau_n = omega/sigma_n^2; fully correlated
/// noise leaves Psi_+- intact and gives Phi_+- the single factor with
/// tau = omega/(2 sigma^2).
QsbaValue qsba_concurrence(Bell state, bool correlated, double sigma1, double sigma2,
                           double omega, double t);

struct EigenPair {
  double eigenvalue = 0.0;
  TwoQubitOperator op;  // unit Hilbert-Schmidt norm
};

/// The nine eigenpairs of L = gamma J^2 + (1-gamma)(Jz1 Jz2 + Jz2 Jz1)
/// on the product-tensor sector; the gamma -> 0 limit of the mixed-block
/// coefficients is substituted at gamma = 0.
std::vector<EigenPair> transverse_L_eigensystem(double gamma);

/// Full 16x16 transverse white-noise evolution superoperator assembled
/// spectrally from the eigensystem (Heisenberg picture, time t).
SuperOperator transverse_white_superoperator(double gamma, double T, double omega, double t);

/// Concurrence evaluated through the assembled superoperator; agrees
/// with transverse_white_concurrence.
double transverse_white_concurrence_via_eigensystem(Bell state, double gamma, double T,
                                                    double omega, double t);

/// Second-order effective propagator for fully correlated transverse OU
/// noise: rotation by (omega + delta_omega) t and decay
/// e^{-Gamma_perp [J^2 - Jz^2]} assembled on the coupled-tensor basis.
SuperOperator effective_dephasing_propagator(const NoiseSpec& spec, double omega, double t);

}  // namespace bellnoise
