#include "oscpair/normal_modes.hpp"

#include <cmath>
#include <numbers>

namespace oscpair {

FrequencyCombinations frequency_combinations(const NormalModes& modes) {
  const double c2 = std::cos(modes.alpha) * std::cos(modes.alpha);
  const double s2 = std::sin(modes.alpha) * std::sin(modes.alpha);
  return {modes.omega1 * c2 + modes.omega2 * s2, modes.omega1 * s2 + modes.omega2 * c2,
          modes.omega2 - modes.omega1};
}

std::pair<Eigen::Matrix2d, Eigen::Matrix2d> mode_matrix(const OscillatorPair& params,
                                                        const NormalModes& modes) {
  const double c = std::cos(modes.alpha);
  const double s = std::sin(modes.alpha);
  const double r = std::pow(params.m1 / params.m2, 0.25);
  Eigen::Matrix2d n;
  n << c * r, s / r, -s * r, c / r;
  Eigen::Matrix2d n_inv;
  n_inv << c / r, -s / r, s * r, c * r;
  return {n, n_inv};
}

NormalModes derive_normal_modes(const OscillatorPair& params) {
  validate(params);
  NormalModes modes;
  modes.omega1 = params.omega1();
  modes.omega2 = params.omega2();
  modes.mu = params.mean_mass();
  const double w1 = modes.omega1;
  const double w2 = modes.omega2;
  const double mu = modes.mu;

  if (params.kappa == 0.0) {
    if (std::abs(w1 - w2) <= 1e-12 * std::max(w1, w2)) {
      // Degenerate: any rotation diagonalizes.  pi/4 matches the
      // kappa -> 0+ limit at equal frequencies.
      modes.alpha = std::numbers::pi / 4.0;
      modes.alpha_degenerate = true;
    } else {
      modes.alpha = 0.0;
    }
  } else {
    const double y = 2.0 * params.kappa / mu;
    const double x = w2 * w2 - w1 * w1 + (params.kappa / mu) * (params.m1 - params.m2) / mu;
    modes.alpha = 0.5 * std::atan2(y, x);  // in (0, pi/2) since y > 0
  }

  const double c = std::cos(modes.alpha);
  const double s = std::sin(modes.alpha);
  const double r = std::pow(params.m1 / params.m2, 0.25);
  const double km = params.kappa / mu;
  modes.omega_plus = std::sqrt(w1 * w1 * c * c + w2 * w2 * s * s + km * (r * s - c / r) * (r * s - c / r));
  modes.omega_minus = std::sqrt(w1 * w1 * s * s + w2 * w2 * c * c + km * (r * c + s / r) * (r * c + s / r));
  modes.gamma = modes.omega_plus / modes.omega_minus;
  std::tie(modes.N, modes.N_inv) = mode_matrix(params, modes);
  return modes;
}

}  // namespace oscpair
