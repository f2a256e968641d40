#include "oscpair/symmetric.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace oscpair {

namespace {

void require_time(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
}

}  // namespace

SymmetricState make_symmetric_state(const OscillatorPair& params, double X0) {
  validate(params);
  if (params.m1 != params.m2)
    throw std::invalid_argument("symmetric state requires m1 == m2");
  if (params.k1 != params.k2)
    throw std::invalid_argument("symmetric state requires k1 == k2");
  SymmetricState state;
  state.params = params;
  state.X0 = X0;
  state.omega = std::sqrt(params.k1 / params.m1);
  state.Omega = std::sqrt((params.k1 + 2.0 * params.kappa) / params.m1);
  state.gamma = state.omega / state.Omega;
  return state;
}

std::pair<Gaussian1D, Gaussian1D> ground_state_reduced(const SymmetricState& state) {
  const double m = state.params.m1;
  const double w = state.omega;
  const double hbar = state.params.hbar;
  const double g = state.gamma;
  Gaussian1D position{0.0, std::sqrt((hbar / (2.0 * m * w)) * (1.0 + g) / 2.0)};
  Gaussian1D momentum{0.0, std::sqrt((hbar * m * w / 2.0) * (1.0 + g) / (2.0 * g))};
  return {position, momentum};
}

std::pair<Gaussian1D, Gaussian1D> thermal_reduced(double mass, double omega, double hbar,
                                                  double temperature, double k_boltzmann) {
  if (!(mass > 0.0 && omega > 0.0 && hbar > 0.0 && k_boltzmann > 0.0))
    throw std::invalid_argument("mass, omega, hbar and k_boltzmann must be > 0");
  if (!(temperature >= 0.0)) throw std::invalid_argument("temperature must be >= 0");
  double widen = 1.0;  // coth(beta/2), exactly 1 in the zero-temperature limit
  if (temperature > 0.0) {
    const double beta = hbar * omega / (k_boltzmann * temperature);
    widen = 1.0 / std::tanh(0.5 * beta);
  }
  Gaussian1D position{0.0, std::sqrt((hbar / (2.0 * mass * omega)) * widen)};
  Gaussian1D momentum{0.0, std::sqrt((hbar * mass * omega / 2.0) * widen)};
  return {position, momentum};
}

std::complex<double> symmetric_wavefunction(const SymmetricState& state, double y_plus,
                                            double y_minus, double t) {
  require_time(t);
  using namespace std::complex_literals;
  const double m = state.params.m1;
  const double hbar = state.params.hbar;
  const double w = state.omega;
  const double W = state.Omega;
  const double g = state.gamma;
  const double X0 = state.X0;
  const double amp = X0 / std::numbers::sqrt2;
  const double norm = std::pow(m * w / (std::numbers::pi * hbar), 0.25);

  // Coherent state in the + mode.
  const double cw = std::cos(w * t), sw = std::sin(w * t);
  const std::complex<double> psi_c =
      norm * std::exp(-0.5i * w * t) *
      std::exp(1i * (m * w / (4.0 * hbar)) * X0 * X0 * sw * cw) *
      std::exp(-1i * (m * w / hbar) * amp * sw * y_plus) *
      std::exp(-(m * w / (2.0 * hbar)) * (y_plus - amp * cw) * (y_plus - amp * cw));

  // Displaced squeezed state in the - mode; den >= min(1, gamma^2) > 0.
  const double cW = std::cos(W * t), sW = std::sin(W * t);
  const double den = cW * cW + g * g * sW * sW;
  const std::complex<double> psi_ds =
      norm * std::sqrt(std::complex<double>(cW, -g * sW) / den) *
      std::exp(1i * m * w * g * X0 * X0 * cW * sW / (4.0 * hbar * den)) *
      std::exp(-1i * m * w * g * amp * sW * y_minus / (hbar * den)) *
      std::exp(-1i * m * W * (1.0 - g * g) * cW * sW * y_minus * y_minus / (2.0 * hbar * den)) *
      std::exp(-(m * w / (2.0 * hbar)) * (y_minus - amp * cW) * (y_minus - amp * cW) / den);

  return psi_c * psi_ds;
}

Gaussian1D symmetric_reduced_distribution(const SymmetricState& state, double t) {
  require_time(t);
  const double m = state.params.m1;
  const double hbar = state.params.hbar;
  const double w = state.omega;
  const double W = state.Omega;
  const double g = state.gamma;
  const double cW = std::cos(W * t), sW = std::sin(W * t);
  Gaussian1D out;
  out.mean = 0.5 * state.X0 * (std::cos(w * t) - cW);
  out.sigma = std::sqrt((hbar / (4.0 * m * w)) * (1.0 + cW * cW + g * g * sW * sW));
  return out;
}

ObservablePoint symmetric_observables(const SymmetricState& state, double t) {
  require_time(t);
  const double m = state.params.m1;
  const double hbar = state.params.hbar;
  const double w = state.omega;
  const double W = state.Omega;
  const double g = state.gamma;
  const double cW = std::cos(W * t), sW = std::sin(W * t);

  ObservablePoint p;
  p.t = t;
  p.y1_mean = 0.5 * state.X0 * (std::cos(w * t) - cW);
  p.y1_sigma = std::sqrt((hbar / (4.0 * m * w)) * (1.0 + cW * cW + g * g * sW * sW));
  p.p1_mean = -0.5 * m * state.X0 * (w * std::sin(w * t) - W * sW);
  p.p1_sigma = std::sqrt((m * w * hbar / 4.0) * (1.0 + cW * cW + sW * sW / (g * g)));
  const double sum = 1.0 / g + g, diff = 1.0 / g - g, c2 = cW * cW;
  p.product = (hbar / 4.0) * std::sqrt(sum * sum - diff * diff * c2 * c2);
  return p;
}

}  // namespace oscpair
