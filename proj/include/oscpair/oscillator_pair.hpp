#pragma once

#include <cmath>

namespace oscpair {

/// Physical parameters of two linearly coupled harmonic oscillators:
/// point masses m1, m2 on individual springs k1, k2, joined by a coupling
/// spring kappa.  hbar is kept as an explicit parameter so the same code
/// serves any consistent unit system; the default is natural units.
struct OscillatorPair {
  double m1 = 1.0;
  double m2 = 1.0;
  double k1 = 1.0;
  double k2 = 1.0;
  double kappa = 0.0;
  double hbar = 1.0;

  double omega1() const { return std::sqrt(k1 / m1); }
  double omega2() const { return std::sqrt(k2 / m2); }
  /// Geometric-mean mass sqrt(m1 m2).
  double mean_mass() const { return std::sqrt(m1 * m2); }
};

/// Throws std::invalid_argument naming the offending field.
/// Requires m1, m2, k1, k2, hbar > 0 and kappa >= 0, all finite.
void validate(const OscillatorPair& params);

}  // namespace oscpair
