#pragma once

#include <Eigen/Dense>
#include <utility>

#include "oscpair/oscillator_pair.hpp"

namespace oscpair {

/// Normal-mode decomposition of a coupled oscillator pair.  The map from
/// oscillator coordinates (y1, y2) to normal-mode coordinates (y+, y-) is
/// Y = N * calY with N = rotation(alpha) * diag((m1/m2)^{1/4}, (m2/m1)^{1/4}),
/// which has unit determinant but is not orthogonal for unequal masses.
struct NormalModes {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double mu = 0.0;     ///< geometric-mean mass sqrt(m1 m2)
  double alpha = 0.0;  ///< rotation angle, in [0, pi/2)
  double omega_plus = 0.0;
  double omega_minus = 0.0;
  double gamma = 0.0;  ///< omega_plus / omega_minus (reporting convenience)
  Eigen::Matrix2d N = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d N_inv = Eigen::Matrix2d::Identity();
  /// Set when kappa = 0 with omega1 = omega2: the modes are degenerate and
  /// any rotation diagonalizes; alpha = pi/4 is returned for continuity
  /// with the kappa -> 0 limit at equal frequencies.
  bool alpha_degenerate = false;
};

/// Frequency combinations entering the propagated-state machinery:
/// wc = w1 cos^2 a + w2 sin^2 a, ws = w1 sin^2 a + w2 cos^2 a, delta = w2 - w1.
struct FrequencyCombinations {
  double omega_c = 0.0;
  double omega_s = 0.0;
  double delta = 0.0;
};

FrequencyCombinations frequency_combinations(const NormalModes& modes);

/// Rotation angle and mode frequencies for arbitrary masses and springs.
///
/// The angle solves tan(2a) = (2 kappa/mu) / (w2^2 - w1^2 + (kappa/mu)(m1-m2)/mu)
/// via the two-argument arctangent, selecting alpha in (0, pi/2) for
/// kappa > 0 so that cos(alpha) > 0 and sin(alpha) > 0.  For kappa = 0 the
/// system is already diagonal and alpha = 0 (or pi/4 with the degenerate
/// flag when the frequencies coincide).
NormalModes derive_normal_modes(const OscillatorPair& params);

/// Coordinate map N and its closed-form inverse; det N = 1 exactly.
std::pair<Eigen::Matrix2d, Eigen::Matrix2d> mode_matrix(const OscillatorPair& params,
                                                        const NormalModes& modes);

}  // namespace oscpair
