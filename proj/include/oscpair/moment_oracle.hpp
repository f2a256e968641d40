#pragma once

#include <Eigen/Dense>

#include "oscpair/observable_point.hpp"
#include "oscpair/oscillator_pair.hpp"

namespace oscpair {

/// First and second moments of the Gaussian state: means and covariance
/// of (x1, x2, p1, p2).  A quadratic Hamiltonian keeps Gaussian states
/// Gaussian, so these moments are a complete description and their
/// evolution equations are exact -- the only numerical error is the
/// integrator's.  This is the implementation-independent ground truth the
/// closed forms are checked against.
struct GaussianMoments {
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();
  double t = 0.0;
};

/// Ground state in oscillator #1, coherent state of amplitude x0 and zero
/// momentum in oscillator #2.
GaussianMoments initial_moments(const OscillatorPair& params, double x0);

/// Linear flow matrix A of the Hamiltonian equations of motion,
/// d(x1,x2,p1,p2)/dt = A (x1,x2,p1,p2).
Eigen::Matrix4d hamiltonian_flow_matrix(const OscillatorPair& params);

/// Fixed-step classical Runge-Kutta integration of d(mean)/dt = A mean,
/// d(cov)/dt = A cov + cov A^T from init.t to t_end.  Rejects steps with
/// dt * max(omega_plus, omega_minus) > 0.1 (accuracy guard).  Fixed
/// stepping keeps every test number reproducible.
GaussianMoments evolve_moments(const OscillatorPair& params, const GaussianMoments& init,
                               double t_end, double dt);

/// Oscillator-#1 view of a moment state.
ObservablePoint moments_observables(const GaussianMoments& moments);

}  // namespace oscpair
