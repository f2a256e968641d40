#pragma once

namespace oscpair {

/// Position and momentum expectation values and uncertainties of
/// oscillator #1 at one instant, plus the uncertainty product.
struct ObservablePoint {
  double t = 0.0;
  double y1_mean = 0.0;
  double y1_sigma = 0.0;
  double p1_mean = 0.0;
  double p1_sigma = 0.0;
  double product = 0.0;  ///< y1_sigma * p1_sigma, always >= hbar/2
};

}  // namespace oscpair
