#pragma once

#include "oscpair/observable_point.hpp"
#include "oscpair/oscillator_pair.hpp"

namespace oscpair {

/// Unequal masses at equal unperturbed frequency (resonance).  The
/// rotation angle becomes mass-only, cos a = sqrt(m1/(m1+m2)), and the
/// normal-mode frequencies are omega and
/// Omega = sqrt(omega^2 + kappa (m1+m2)/mu^2), with gamma = omega/Omega.
struct ResonanceState {
  OscillatorPair params;
  double x0 = 0.0;
  double omega = 0.0;
  double Omega = 0.0;
  double gamma = 0.0;
};

/// Requires |omega1 - omega2| / omega1 < 1e-12; near-resonant systems
/// belong to the general machinery instead.
ResonanceState make_resonance_state(const OscillatorPair& params, double x0);

/// Oscillator-#1 observables from the resonance closed forms.
ObservablePoint resonance_observables(const ResonanceState& state, double t);

/// Time-independent envelopes of the uncertainties and their product.
/// sigma_y oscillates between the unperturbed value and the smaller
/// sqrt((hbar/2 m1 w)(m1 + gamma^2 m2)/(m1+m2)); sigma_p compensates
/// upward; the product stays within [hbar/2, product_max], where the
/// maximum depends on which mass is larger.  For m1 << m2 and gamma << 1
/// the squeezing becomes extreme.
struct ResonanceBounds {
  double sigma_y_min = 0.0;
  double sigma_y_max = 0.0;
  double sigma_p_min = 0.0;
  double sigma_p_max = 0.0;
  double product_min = 0.0;
  double product_max = 0.0;
};

ResonanceBounds resonance_bounds(const ResonanceState& state);

}  // namespace oscpair
