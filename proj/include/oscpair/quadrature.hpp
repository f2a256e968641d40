#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace oscpair {

struct QuadratureResult {
  double value = 0.0;
  bool converged = false;
  int refinements = 0;
};

namespace detail {

template <typename F>
double simpson_1d(F&& f, double a, double b, int n) {
  // n even
  const double h = (b - a) / n;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < n; i += 2) odd += f(a + i * h);
  for (int i = 2; i < n; i += 2) even += f(a + i * h);
  return (h / 3.0) * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

template <typename F>
double simpson_2d(F&& f, double ax, double bx, double ay, double by, int n) {
  const double hy = (by - ay) / n;
  auto row = [&](int j) {
    const double y = ay + j * hy;
    return simpson_1d([&](double x) { return f(x, y); }, ax, bx, n);
  };
  double odd = 0.0, even = 0.0;
  for (int j = 1; j < n; j += 2) odd += row(j);
  for (int j = 2; j < n; j += 2) even += row(j);
  return (hy / 3.0) * (row(0) + row(n) + 4.0 * odd + 2.0 * even);
}

}  // namespace detail

/// Composite Simpson rule with interval doubling; converged once two
/// successive refinements agree to tol (absolute).
template <typename F>
QuadratureResult integrate_1d(F&& f, double a, double b, double tol, int max_doublings = 9,
                              int n0 = 64) {
  QuadratureResult r;
  double prev = detail::simpson_1d(f, a, b, n0);
  for (int k = 1; k <= max_doublings; ++k) {
    const double cur = detail::simpson_1d(f, a, b, n0 << k);
    r.refinements = k;
    r.value = cur;
    if (std::abs(cur - prev) <= tol) {
      r.converged = true;
      return r;
    }
    prev = cur;
  }
  return r;
}

template <typename F>
QuadratureResult integrate_2d(F&& f, double ax, double bx, double ay, double by, double tol,
                              int max_doublings = 5, int n0 = 64) {
  QuadratureResult r;
  double prev = detail::simpson_2d(f, ax, bx, ay, by, n0);
  for (int k = 1; k <= max_doublings; ++k) {
    const double cur = detail::simpson_2d(f, ax, bx, ay, by, n0 << k);
    r.refinements = k;
    r.value = cur;
    if (std::abs(cur - prev) <= tol) {
      r.converged = true;
      return r;
    }
    prev = cur;
  }
  return r;
}

/// Integral of a 1D density over mean +- window*sigma.  The window must be
/// at least 6 sigma so the truncated tails sit far below the tolerance.
template <typename F>
QuadratureResult quadrature_normalize(F&& density, double mean, double sigma, double window,
                                      double tol = 1e-11) {
  if (window < 6.0) throw std::invalid_argument("quadrature window must be >= 6 sigma");
  return integrate_1d(density, mean - window * sigma, mean + window * sigma, tol);
}

/// Integral of a 2D density over the product of +- window*sigma intervals
/// around the marginal means.
template <typename F>
QuadratureResult quadrature_normalize_2d(F&& density, double mean1, double sigma1, double mean2,
                                         double sigma2, double window, double tol = 1e-8) {
  if (window < 6.0) throw std::invalid_argument("quadrature window must be >= 6 sigma");
  return integrate_2d(density, mean1 - window * sigma1, mean1 + window * sigma1,
                      mean2 - window * sigma2, mean2 + window * sigma2, tol);
}

}  // namespace oscpair
