#pragma once

#include <Eigen/Dense>
#include <complex>

#include "oscpair/gaussian.hpp"
#include "oscpair/normal_modes.hpp"
#include "oscpair/observable_point.hpp"
#include "oscpair/oscillator_pair.hpp"

namespace oscpair {

/// Arbitrary-parameter pair with oscillator #1 in its ground state and
/// oscillator #2 in a coherent state of classical amplitude x0 (zero
/// initial momentum).  X0 = (m2/m1)^{1/4} x0 is the amplitude in the
/// mass-rescaled coordinates the normal-mode rotation acts on.
struct GeneralState {
  OscillatorPair params;
  NormalModes modes;
  double x0 = 0.0;
  double X0 = 0.0;
};

GeneralState make_general_state(const OscillatorPair& params, double x0);

/// Time-dependent 2x2 machinery of the propagated Gaussian state.
///
/// The raw propagator matrices S, Omega1, Omega2 (and V) contain
/// cot/csc(omega_pm t) and blow up whenever sin(omega_plus t) or
/// sin(omega_minus t) vanishes; they are populated for the identity
/// cross-checks only and must not be consumed elsewhere.  Every quantity
/// the wave function and observables need -- U, V - Omega2, UZ, VZ,
/// U^{-1}, mean_Y, det_U -- is assembled from the regular combination
/// Xi = M_det/(rho eta), whose modulus is bounded away from zero by a
/// time-independent bound, and is finite at every t >= 0.
struct CoeffMatrices {
  double t = 0.0;

  // Raw route; entries are +-inf at sin-zero times.
  Eigen::Matrix2cd S;
  Eigen::Matrix2d Omega1;
  Eigen::Matrix2d Omega2;
  Eigen::Matrix2d V;

  // Regular quantities, finite for all t >= 0.
  Eigen::Matrix2d R_mat;               ///< real part of Omega1^{-1} S Omega1^{-1}
  Eigen::Matrix2d I_mat;               ///< imaginary part of the same (diagonal)
  std::complex<double> M_det;          ///< det(R_mat - i I_mat)
  std::complex<double> Xi;             ///< M_det / (rho eta)
  Eigen::Matrix2d U;                   ///< Gaussian quadratic form, positive definite
  Eigen::Matrix2d V_minus_Omega2;      ///< regular phase quadratic form
  Eigen::Matrix2d U_inv;
  Eigen::Vector2d Z;
  Eigen::Vector2d UZ;
  Eigen::Vector2d VZ;
  Eigen::Vector2d mean_Y;              ///< U^{-1} V Z = (X0 sin a cos(w+ t), X0 cos a cos(w- t))
  double det_U = 0.0;                  ///< omega1 omega2 / |Xi|^2
  double rho = 0.0;                    ///< sin(omega_plus t)/omega_plus
  double eta = 0.0;                    ///< sin(omega_minus t)/omega_minus
  double omega_c = 0.0;
  double omega_s = 0.0;
  double delta = 0.0;
};

CoeffMatrices build_matrices(const GeneralState& state, double t);

/// Wave function at oscillator coordinates (y1, y2); the quadratic form
/// acts on Y = N (y1, y2).  |Psi|^2 is the normalized joint density, the
/// mode map having unit Jacobian.
std::complex<double> general_wavefunction(const GeneralState& state, const CoeffMatrices& cm,
                                          double y1, double y2);
std::complex<double> general_wavefunction(const GeneralState& state, double y1, double y2,
                                          double t);

/// Marginal distribution of y1; mean and sigma from the explicit closed
/// forms, which are regular at every t.
Gaussian1D general_reduced_distribution(const GeneralState& state, double t);

/// All five oscillator-#1 observables from the explicit closed forms.
ObservablePoint general_observables(const GeneralState& state, double t);

/// Same observables assembled through the matrix machinery (marginal of
/// N^T U N, momentum quadratic forms).  Kept as an independent route for
/// cross-checking the closed forms; also regular at every t.
ObservablePoint general_observables_matrix_route(const GeneralState& state, double t);

/// Time-independent bounds on |Xi(t)|^2: lower = lambda/zeta > 0 from
///   zeta    = max(wc ws, w1 w2)
///   lambda  = min(wc ws, wc ws w1^2 w2^2/(w+^2 w-^2), w1 w2 ws^2/w-^2, w1 w2 wc^2/w+^2)
/// and upper = lambda'/zeta' < inf from the complementary min/max.  These
/// guarantee finiteness of U, U^{-1}, V - Omega2 and VZ at all times.
struct XiBounds {
  double lower = 0.0;
  double upper = 0.0;
};

XiBounds xi_bounds(const GeneralState& state);

/// Residuals of the algebraic identities satisfied by the coefficient
/// matrices, each scaled by the magnitude of its constituent terms so the
/// result stays meaningful where the identity value itself crosses zero.
struct IdentityResiduals {
  double amplitude_norm = 0.0;    ///< Z^T (V U^{-1} V + U) Z reproduces w2 X0^2
  double det_product = 0.0;       ///< |M|^2 det U = w1 w2 rho^2 eta^2 = det R
  double det_real_part = 0.0;     ///< Re M = det R - det I
  double adjugate_cross = 0.0;    ///< I adj(R) + R adj(I) + Im(M) 1 = 0

  double max() const;
};

IdentityResiduals identity_residuals(const GeneralState& state, double t);

}  // namespace oscpair
