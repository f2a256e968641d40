#include "oscpair/general.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oscpair {

namespace {

void require_time(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
}

Eigen::Matrix2d adjugate(const Eigen::Matrix2d& a) {
  Eigen::Matrix2d out;
  out << a(1, 1), -a(0, 1), -a(1, 0), a(0, 0);
  return out;
}

struct TrigCache {
  double sp, cp, sm, cm;  // sin/cos of omega_plus t and omega_minus t
  double rho, eta;
};

TrigCache trig(const NormalModes& modes, double t) {
  TrigCache tc;
  tc.sp = std::sin(modes.omega_plus * t);
  tc.cp = std::cos(modes.omega_plus * t);
  tc.sm = std::sin(modes.omega_minus * t);
  tc.cm = std::cos(modes.omega_minus * t);
  tc.rho = tc.sp / modes.omega_plus;
  tc.eta = tc.sm / modes.omega_minus;
  return tc;
}

}  // namespace

GeneralState make_general_state(const OscillatorPair& params, double x0) {
  GeneralState state;
  state.params = params;
  state.modes = derive_normal_modes(params);
  state.x0 = x0;
  state.X0 = std::pow(params.m2 / params.m1, 0.25) * x0;
  return state;
}

CoeffMatrices build_matrices(const GeneralState& state, double t) {
  require_time(t);
  const NormalModes& nm = state.modes;
  const auto [wc, ws, delta] = frequency_combinations(nm);
  const double w1 = nm.omega1, w2 = nm.omega2;
  const double wp = nm.omega_plus, wm = nm.omega_minus;
  const double sa = std::sin(nm.alpha), ca = std::cos(nm.alpha);
  const TrigCache tc = trig(nm, t);
  const double X0 = state.X0;

  CoeffMatrices cm;
  cm.t = t;
  cm.rho = tc.rho;
  cm.eta = tc.eta;
  cm.omega_c = wc;
  cm.omega_s = ws;
  cm.delta = delta;

  cm.R_mat << wc * tc.rho * tc.rho, delta * sa * ca * tc.rho * tc.eta,
      delta * sa * ca * tc.rho * tc.eta, ws * tc.eta * tc.eta;
  cm.I_mat << tc.rho * tc.cp, 0.0, 0.0, tc.eta * tc.cm;

  // Xi = det(R - iI)/(rho eta) stays bounded away from zero and from
  // infinity at all times; everything regular is pulled through it.
  const double re_xi = -tc.cp * tc.cm + w1 * w2 * tc.rho * tc.eta;
  const double im_xi = -(ws * tc.eta * tc.cp + wc * tc.rho * tc.cm);
  cm.Xi = {re_xi, im_xi};
  cm.M_det = tc.rho * tc.eta * cm.Xi;

  // U + i(V - Omega2) as a finite complex matrix divided by Xi.
  const std::complex<double> w11(ws * (wp / wm) * tc.sp * tc.sm - wc * tc.cp * tc.cm,
                                 -(wp * tc.sp * tc.cm + (w1 * w2 / wm) * tc.sm * tc.cp));
  const std::complex<double> w22(wc * (wm / wp) * tc.sp * tc.sm - ws * tc.cp * tc.cm,
                                 -(wm * tc.sm * tc.cp + (w1 * w2 / wp) * tc.sp * tc.cm));
  const std::complex<double> off(-delta * sa * ca, 0.0);
  Eigen::Matrix2cd w_mat;
  w_mat << w11 / cm.Xi, off / cm.Xi, off / cm.Xi, w22 / cm.Xi;
  cm.U = w_mat.real();
  cm.V_minus_Omega2 = w_mat.imag();

  cm.det_U = w1 * w2 / std::norm(cm.Xi);
  cm.U_inv = adjugate(cm.U) / cm.det_U;

  // (U + iV) Z, again finite over Xi.
  const std::complex<double> i_unit(0.0, 1.0);
  const Eigen::Vector2cd uvz =
      (w2 * X0 / cm.Xi) *
      Eigen::Vector2cd(sa * (w1 * tc.eta - i_unit * tc.cm), ca * (w1 * tc.rho - i_unit * tc.cp));
  cm.UZ = uvz.real();
  cm.VZ = uvz.imag();

  cm.Z << w2 * X0 * tc.rho * sa, w2 * X0 * tc.eta * ca;
  cm.mean_Y << X0 * sa * tc.cp, X0 * ca * tc.cm;

  // Raw propagator matrices; divisions by sin(omega_pm t) are deliberate
  // and produce inf entries at the sin-zero times.
  cm.Omega1 << wp / tc.sp, 0.0, 0.0, wm / tc.sm;
  cm.Omega2 << wp * tc.cp / tc.sp, 0.0, 0.0, wm * tc.cm / tc.sm;
  cm.S << std::complex<double>(wc, -wp * tc.cp / tc.sp), std::complex<double>(delta * sa * ca, 0.0),
      std::complex<double>(delta * sa * ca, 0.0), std::complex<double>(ws, -wm * tc.cm / tc.sm);
  cm.V = cm.V_minus_Omega2 + cm.Omega2;

  return cm;
}

std::complex<double> general_wavefunction(const GeneralState& state, const CoeffMatrices& cm,
                                          double y1, double y2) {
  using namespace std::complex_literals;
  const double mu = state.modes.mu;
  const double hbar = state.params.hbar;
  const Eigen::Vector2d y = state.modes.N * Eigen::Vector2d(y1, y2);

  const double norm4 = mu * mu * state.modes.omega1 * state.modes.omega2 /
                       (std::numbers::pi * std::numbers::pi * hbar * hbar);
  const std::complex<double> prefactor = std::pow(norm4, 0.25) * std::sqrt(-1.0 / cm.Xi);

  const double phase = cm.Z.dot(cm.VZ) - 2.0 * y.dot(cm.UZ) - y.dot(cm.V_minus_Omega2 * y);
  const Eigen::Vector2d d = y - cm.mean_Y;
  const double quad = d.dot(cm.U * d);

  return prefactor * std::exp(1i * (mu / (2.0 * hbar)) * phase - (mu / (2.0 * hbar)) * quad);
}

std::complex<double> general_wavefunction(const GeneralState& state, double y1, double y2,
                                          double t) {
  return general_wavefunction(state, build_matrices(state, t), y1, y2);
}

Gaussian1D general_reduced_distribution(const GeneralState& state, double t) {
  require_time(t);
  const NormalModes& nm = state.modes;
  const auto [wc, ws, delta] = frequency_combinations(nm);
  const double w1 = nm.omega1, w2 = nm.omega2;
  const double wp = nm.omega_plus, wm = nm.omega_minus;
  const double sa = std::sin(nm.alpha), ca = std::cos(nm.alpha);
  const double sa2 = sa * sa, ca2 = ca * ca;
  const TrigCache tc = trig(nm, t);
  const double hbar = state.params.hbar;

  Gaussian1D out;
  out.mean = std::sqrt(state.params.m2 / state.params.m1) * state.x0 * sa * ca * (tc.cp - tc.cm);
  const double bracket =
      ca2 * ((ws / w2) * tc.cp * tc.cp + (w1 * wc / (wp * wp)) * tc.sp * tc.sp) +
      sa2 * ((wc / w2) * tc.cm * tc.cm + (w1 * ws / (wm * wm)) * tc.sm * tc.sm) +
      2.0 * (delta / w2) * ca2 * sa2 *
          (tc.cp * tc.cm - (w1 * w2 / (wp * wm)) * tc.sp * tc.sm);
  out.sigma = std::sqrt((hbar / (2.0 * state.params.m1 * w1)) * bracket);
  return out;
}

ObservablePoint general_observables(const GeneralState& state, double t) {
  require_time(t);
  const NormalModes& nm = state.modes;
  const auto [wc, ws, delta] = frequency_combinations(nm);
  const double w1 = nm.omega1, w2 = nm.omega2;
  const double wp = nm.omega_plus, wm = nm.omega_minus;
  const double m1 = state.params.m1;
  const double hbar = state.params.hbar;
  const double sa = std::sin(nm.alpha), ca = std::cos(nm.alpha);
  const double sa2 = sa * sa, ca2 = ca * ca;
  const double mass_ratio = std::sqrt(state.params.m2 / state.params.m1);
  const TrigCache tc = trig(nm, t);

  ObservablePoint p;
  p.t = t;
  p.y1_mean = mass_ratio * state.x0 * sa * ca * (tc.cp - tc.cm);
  p.p1_mean = -m1 * mass_ratio * state.x0 * sa * ca * (wp * tc.sp - wm * tc.sm);

  const double y_bracket =
      ca2 * ((ws / w2) * tc.cp * tc.cp + (w1 * wc / (wp * wp)) * tc.sp * tc.sp) +
      sa2 * ((wc / w2) * tc.cm * tc.cm + (w1 * ws / (wm * wm)) * tc.sm * tc.sm) +
      2.0 * (delta / w2) * ca2 * sa2 *
          (tc.cp * tc.cm - (w1 * w2 / (wp * wm)) * tc.sp * tc.sm);
  p.y1_sigma = std::sqrt((hbar / (2.0 * m1 * w1)) * y_bracket);

  const double p_bracket =
      ca2 * ((wc / w1) * tc.cp * tc.cp + (ws * wp * wp / (w1 * w1 * w2)) * tc.sp * tc.sp) +
      sa2 * ((ws / w1) * tc.cm * tc.cm + (wc * wm * wm / (w1 * w1 * w2)) * tc.sm * tc.sm) -
      2.0 * (delta / w1) * ca2 * sa2 *
          (tc.cp * tc.cm - (wp * wm / (w1 * w2)) * tc.sp * tc.sm);
  p.p1_sigma = std::sqrt((hbar * m1 * w1 / 2.0) * p_bracket);

  p.product = p.y1_sigma * p.p1_sigma;
  return p;
}

ObservablePoint general_observables_matrix_route(const GeneralState& state, double t) {
  const CoeffMatrices cm = build_matrices(state, t);
  const NormalModes& nm = state.modes;
  const double mu = nm.mu;
  const double hbar = state.params.hbar;

  ObservablePoint p;
  p.t = t;
  p.y1_mean = (nm.N_inv * (cm.U_inv * cm.VZ))(0);

  const Eigen::Matrix2d nun = nm.N.transpose() * cm.U * nm.N;
  p.y1_sigma = std::sqrt((hbar / (2.0 * mu)) * nun(1, 1) / cm.det_U);

  const Eigen::Vector2d col = cm.UZ + cm.V_minus_Omega2 * (cm.U_inv * cm.VZ);
  p.p1_mean = -mu * (nm.N.transpose() * col)(0);

  const Eigen::Matrix2d mp = cm.U + cm.V_minus_Omega2 * cm.U_inv * cm.V_minus_Omega2;
  p.p1_sigma = std::sqrt((mu * hbar / 2.0) * (nm.N.transpose() * mp * nm.N)(0, 0));

  p.product = p.y1_sigma * p.p1_sigma;
  return p;
}

XiBounds xi_bounds(const GeneralState& state) {
  const NormalModes& nm = state.modes;
  const auto [wc, ws, delta] = frequency_combinations(nm);
  (void)delta;
  const double w1 = nm.omega1, w2 = nm.omega2;
  const double wp2 = nm.omega_plus * nm.omega_plus;
  const double wm2 = nm.omega_minus * nm.omega_minus;
  const double candidates[4] = {wc * ws, wc * ws * w1 * w1 * w2 * w2 / (wp2 * wm2),
                                w1 * w2 * ws * ws / wm2, w1 * w2 * wc * wc / wp2};
  const double lambda = *std::min_element(candidates, candidates + 4);
  const double lambda_prime = *std::max_element(candidates, candidates + 4);
  const double zeta = std::max(wc * ws, w1 * w2);
  const double zeta_prime = std::min(wc * ws, w1 * w2);
  return {lambda / zeta, lambda_prime / zeta_prime};
}

double IdentityResiduals::max() const {
  return std::max({amplitude_norm, det_product, det_real_part, adjugate_cross});
}

IdentityResiduals identity_residuals(const GeneralState& state, double t) {
  const CoeffMatrices cm = build_matrices(state, t);
  const double w1 = state.modes.omega1, w2 = state.modes.omega2;
  const double re2 = cm.rho * cm.rho * cm.eta * cm.eta;
  // Each residual is scaled by the summed magnitudes of its constituent
  // terms, so it stays meaningful where the identity value crosses zero.
  const auto rel = [](double mismatch, double scale) {
    return mismatch / std::max(scale, DBL_MIN);
  };

  IdentityResiduals out;

  // Z^T (V U^{-1} V + U) Z = w2 X0^2, assembled from the regular pieces.
  {
    const double lhs = w2 * state.X0 * state.X0;
    const double quad = cm.VZ.dot(cm.U_inv * cm.VZ) + cm.Z.dot(cm.UZ);
    out.amplitude_norm = rel(std::abs(lhs - quad), lhs + std::abs(quad));
  }

  // |M|^2 det U = w1 w2 rho^2 eta^2 = det R.
  {
    const double a = std::norm(cm.M_det) * cm.det_U;
    const double b = w1 * w2 * re2;
    const double c = cm.R_mat.determinant();
    const double scale = std::abs(a) + std::abs(b) + std::abs(cm.R_mat(0, 0) * cm.R_mat(1, 1)) +
                         std::abs(cm.R_mat(0, 1) * cm.R_mat(1, 0));
    out.det_product = rel(std::max(std::abs(a - b), std::abs(c - b)), scale);
  }

  // Re M = det R - det I.
  {
    const double lhs = cm.M_det.real();
    const double det_r = cm.R_mat.determinant();
    const double det_i = cm.I_mat.determinant();
    const double scale = std::abs(lhs) + std::abs(det_r) + std::abs(det_i) +
                         std::abs(cm.R_mat(0, 0) * cm.R_mat(1, 1));
    out.det_real_part = rel(std::abs(lhs - (det_r - det_i)), scale);
  }

  // I adj(R) + R adj(I) = -Im(M) 1.
  {
    const Eigen::Matrix2d lhs =
        cm.I_mat * adjugate(cm.R_mat) + cm.R_mat * adjugate(cm.I_mat);
    const Eigen::Matrix2d mismatch = lhs + cm.M_det.imag() * Eigen::Matrix2d::Identity();
    const double scale = lhs.cwiseAbs().maxCoeff() + std::abs(cm.M_det.imag());
    out.adjugate_cross = rel(mismatch.cwiseAbs().maxCoeff(), scale);
  }

  return out;
}

}  // namespace oscpair
