#include "oscpair/moment_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "oscpair/normal_modes.hpp"

namespace oscpair {

GaussianMoments initial_moments(const OscillatorPair& params, double x0) {
  validate(params);
  const double w1 = params.omega1();
  const double w2 = params.omega2();
  GaussianMoments gm;
  gm.mean << 0.0, x0, 0.0, 0.0;
  gm.cov.setZero();
  gm.cov(0, 0) = params.hbar / (2.0 * params.m1 * w1);
  gm.cov(1, 1) = params.hbar / (2.0 * params.m2 * w2);
  gm.cov(2, 2) = params.hbar * params.m1 * w1 / 2.0;
  gm.cov(3, 3) = params.hbar * params.m2 * w2 / 2.0;
  gm.t = 0.0;
  return gm;
}

Eigen::Matrix4d hamiltonian_flow_matrix(const OscillatorPair& params) {
  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
  a(0, 2) = 1.0 / params.m1;
  a(1, 3) = 1.0 / params.m2;
  a(2, 0) = -(params.k1 + params.kappa);
  a(2, 1) = params.kappa;
  a(3, 0) = params.kappa;
  a(3, 1) = -(params.k2 + params.kappa);
  return a;
}

GaussianMoments evolve_moments(const OscillatorPair& params, const GaussianMoments& init,
                               double t_end, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  if (!(t_end >= init.t)) throw std::invalid_argument("t_end must be >= init.t");
  const NormalModes modes = derive_normal_modes(params);
  const double w_max = std::max(modes.omega_plus, modes.omega_minus);
  if (dt * w_max > 0.1)
    throw std::invalid_argument("dt too large: dt * max(omega_plus, omega_minus) must be <= 0.1");
  if (t_end == init.t) return init;

  const Eigen::Matrix4d a = hamiltonian_flow_matrix(params);
  const auto cov_rate = [&a](const Eigen::Matrix4d& c) -> Eigen::Matrix4d {
    return a * c + c * a.transpose();
  };

  GaussianMoments gm = init;
  const double span = t_end - init.t;
  const long n = static_cast<long>(std::ceil(span / dt));
  const double h = span / static_cast<double>(n);
  for (long i = 0; i < n; ++i) {
    const Eigen::Vector4d k1m = a * gm.mean;
    const Eigen::Matrix4d k1c = cov_rate(gm.cov);
    const Eigen::Vector4d k2m = a * (gm.mean + 0.5 * h * k1m);
    const Eigen::Matrix4d k2c = cov_rate(gm.cov + 0.5 * h * k1c);
    const Eigen::Vector4d k3m = a * (gm.mean + 0.5 * h * k2m);
    const Eigen::Matrix4d k3c = cov_rate(gm.cov + 0.5 * h * k2c);
    const Eigen::Vector4d k4m = a * (gm.mean + h * k3m);
    const Eigen::Matrix4d k4c = cov_rate(gm.cov + h * k3c);
    gm.mean += (h / 6.0) * (k1m + 2.0 * k2m + 2.0 * k3m + k4m);
    gm.cov += (h / 6.0) * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
  }
  gm.t = t_end;
  return gm;
}

ObservablePoint moments_observables(const GaussianMoments& moments) {
  ObservablePoint p;
  p.t = moments.t;
  p.y1_mean = moments.mean(0);
  p.p1_mean = moments.mean(2);
  p.y1_sigma = std::sqrt(moments.cov(0, 0));
  p.p1_sigma = std::sqrt(moments.cov(2, 2));
  p.product = p.y1_sigma * p.p1_sigma;
  return p;
}

}  // namespace oscpair
