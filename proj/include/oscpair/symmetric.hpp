#pragma once

#include <complex>
#include <utility>

#include "oscpair/gaussian.hpp"
#include "oscpair/observable_point.hpp"
#include "oscpair/oscillator_pair.hpp"

namespace oscpair {

/// Identical oscillators (m1 = m2, k1 = k2) prepared with oscillator #1 in
/// its ground state and oscillator #2 in a coherent state of amplitude X0
/// and zero momentum.  omega and Omega are the normal-mode frequencies
/// sqrt(k/m) and sqrt((k + 2 kappa)/m); gamma = omega/Omega is in (0, 1],
/// reaching 1 only for vanishing coupling.
struct SymmetricState {
  OscillatorPair params;
  double X0 = 0.0;
  double omega = 0.0;
  double Omega = 0.0;
  double gamma = 0.0;
};

/// Builds the state, rejecting parameters with m1 != m2 or k1 != k2.
SymmetricState make_symmetric_state(const OscillatorPair& params, double X0);

/// Reduced position/momentum distributions of one oscillator with the
/// coupled pair in its joint ground state.  The coupling narrows the
/// position marginal and widens the momentum marginal:
///   sigma_x = sqrt((hbar/2m w) (1+gamma)/2),
///   sigma_p = sqrt((hbar m w/2) (1+gamma)/(2 gamma)).
std::pair<Gaussian1D, Gaussian1D> ground_state_reduced(const SymmetricState& state);

/// Reduced distributions of a single uncoupled oscillator in thermal
/// equilibrium, for comparison with the ground-state marginals above.
/// Both widths scale by sqrt(coth(beta/2)) with beta = hbar w/(kB T), so a
/// temperature preserves the sqrt(m w) x <-> p/sqrt(m w) symmetry that the
/// coupling breaks.  T = 0 reproduces the vacuum widths; T < 0 is rejected.
std::pair<Gaussian1D, Gaussian1D> thermal_reduced(double mass, double omega, double hbar,
                                                  double temperature,
                                                  double k_boltzmann = 1.0);

/// Exact wave function at time t >= 0 in normal-mode coordinates:
/// a coherent state in y+ times a displaced squeezed state in y-.
/// Regular for all arguments; the squeezed-mode denominators are bounded
/// below by min(1, gamma^2).
std::complex<double> symmetric_wavefunction(const SymmetricState& state, double y_plus,
                                            double y_minus, double t);

/// Marginal distribution of y1 at time t: Gaussian with mean
/// (X0/2)[cos(w t) - cos(W t)] and sigma oscillating between
/// sqrt(hbar/2m w) and the smaller sqrt(hbar (1+gamma^2)/4m w).
Gaussian1D symmetric_reduced_distribution(const SymmetricState& state, double t);

/// All five oscillator-#1 observables at time t.
ObservablePoint symmetric_observables(const SymmetricState& state, double t);

}  // namespace oscpair
