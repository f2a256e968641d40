#include "oscpair/resonance.hpp"

#include <cmath>
#include <stdexcept>

namespace oscpair {

namespace {

void require_time(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
}

}  // namespace

ResonanceState make_resonance_state(const OscillatorPair& params, double x0) {
  validate(params);
  const double w1 = params.omega1();
  const double w2 = params.omega2();
  if (std::abs(w1 - w2) >= 1e-12 * w1)
    throw std::invalid_argument(
        "resonance state requires omega1 == omega2 (|omega1 - omega2|/omega1 < 1e-12)");
  ResonanceState state;
  state.params = params;
  state.x0 = x0;
  state.omega = w1;
  const double mu = params.mean_mass();
  state.Omega = std::sqrt(w1 * w1 + params.kappa * (params.m1 + params.m2) / (mu * mu));
  state.gamma = state.omega / state.Omega;
  return state;
}

ObservablePoint resonance_observables(const ResonanceState& state, double t) {
  require_time(t);
  const double m1 = state.params.m1, m2 = state.params.m2;
  const double msum = m1 + m2;
  const double hbar = state.params.hbar;
  const double w = state.omega, W = state.Omega, g = state.gamma;
  const double cw = std::cos(w * t), sw = std::sin(w * t);
  const double cW = std::cos(W * t), sW = std::sin(W * t);

  ObservablePoint p;
  p.t = t;
  p.y1_mean = state.x0 * (m2 / msum) * (cw - cW);
  p.p1_mean = -m1 * state.x0 * (m2 / msum) * (w * sw - W * sW);
  p.y1_sigma = std::sqrt((hbar / (2.0 * m1 * w)) * (m1 / msum) *
                         (1.0 + (m2 / m1) * (cW * cW + g * g * sW * sW)));
  p.p1_sigma = std::sqrt((hbar * m1 * w / 2.0) * (m1 / msum) *
                         (1.0 + (m2 / m1) * (cW * cW + sW * sW / (g * g))));
  const double diff = 1.0 / g - g;
  p.product = 0.5 * hbar *
              std::sqrt(1.0 + (m1 * m2 / (msum * msum)) * diff * diff * sW * sW *
                                  (1.0 + (m2 / m1) * cW * cW));
  return p;
}

ResonanceBounds resonance_bounds(const ResonanceState& state) {
  const double m1 = state.params.m1, m2 = state.params.m2;
  const double msum = m1 + m2;
  const double hbar = state.params.hbar;
  const double w = state.omega, g = state.gamma;

  ResonanceBounds b;
  b.sigma_y_max = std::sqrt(hbar / (2.0 * m1 * w));
  b.sigma_y_min = std::sqrt((hbar / (2.0 * m1 * w)) * (m1 + g * g * m2) / msum);
  b.sigma_p_min = std::sqrt(hbar * m1 * w / 2.0);
  b.sigma_p_max = std::sqrt((hbar * m1 * w / 2.0) * (m1 + m2 / (g * g)) / msum);
  b.product_min = 0.5 * hbar;
  const double diff = 1.0 / g - g;
  if (m1 <= m2) {
    b.product_max = 0.25 * hbar * (1.0 / g + g);
  } else {
    b.product_max = 0.5 * hbar * std::sqrt(1.0 + (m1 * m2 / (msum * msum)) * diff * diff);
  }
  return b;
}

}  // namespace oscpair
