#pragma once

#include <cmath>
#include <numbers>

namespace oscpair {

/// Normalized one-dimensional Gaussian, stored as (mean, sigma).
struct Gaussian1D {
  double mean = 0.0;
  double sigma = 1.0;

  double pdf(double x) const {
    const double z = (x - mean) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * std::numbers::pi));
  }
};

}  // namespace oscpair
