#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "oscpair/general.hpp"
#include "oscpair/moment_oracle.hpp"
#include "oscpair/quadrature.hpp"
#include "oscpair/symmetric.hpp"

using namespace oscpair;

namespace {

// m1 = 1, m2 = 4, omega1 = 1, omega2 = 2, kappa = 1
GeneralState reference_state(double x0 = 1.0) {
  return make_general_state({1, 4, 1, 16, 1, 1}, x0);
}

GeneralState random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> log_mass(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> freq(0.5, 2.0);
  std::uniform_real_distribution<double> coupling(0.0, 5.0);
  std::uniform_real_distribution<double> amp(0.0, 3.0);
  const double m1 = std::exp(log_mass(rng));
  const double m2 = std::exp(log_mass(rng));
  const double w1 = freq(rng);
  const double w2 = freq(rng);
  return make_general_state({m1, m2, m1 * w1 * w1, m2 * w2 * w2, coupling(rng), 1.0}, amp(rng));
}

double max_observable_gap(const ObservablePoint& a, const ObservablePoint& b) {
  return std::max({std::abs(a.y1_mean - b.y1_mean), std::abs(a.y1_sigma - b.y1_sigma),
                   std::abs(a.p1_mean - b.p1_mean), std::abs(a.p1_sigma - b.p1_sigma),
                   std::abs(a.product - b.product)});
}

}  // namespace

TEST_CASE("rescaled amplitude") {
  const GeneralState s = reference_state(0.7);
  CHECK(s.X0 == doctest::Approx(std::pow(4.0, 0.25) * 0.7).epsilon(1e-15));
}

TEST_CASE("coefficient matrices at the initial instant") {
  const GeneralState s = reference_state();
  const CoeffMatrices cm = build_matrices(s, 0.0);
  const auto [wc, ws, delta] = frequency_combinations(s.modes);
  const double sa = std::sin(s.modes.alpha), ca = std::cos(s.modes.alpha);

  CHECK(cm.mean_Y(0) == doctest::Approx(s.X0 * sa).epsilon(1e-14));
  CHECK(cm.mean_Y(1) == doctest::Approx(s.X0 * ca).epsilon(1e-14));
  CHECK(cm.U(0, 0) == doctest::Approx(wc).epsilon(1e-14));
  CHECK(cm.U(1, 1) == doctest::Approx(ws).epsilon(1e-14));
  CHECK(cm.U(0, 1) == doctest::Approx(delta * sa * ca).epsilon(1e-14));
  CHECK(cm.V_minus_Omega2.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(cm.Xi == std::complex<double>(-1.0, 0.0));
  CHECK(cm.det_U == doctest::Approx(s.modes.omega1 * s.modes.omega2).epsilon(1e-14));
}

TEST_CASE("regularized matrices match the raw propagator route") {
  // Away from the sin-zero times the raw S, Omega1, Omega2 are usable;
  // Omega1 S^{-1} Omega1 must reproduce U and V.
  std::mt19937_64 rng(0x9a9aULL);
  std::uniform_real_distribution<double> time(0.05, 12.0);
  for (int trial = 0; trial < 40; ++trial) {
    const GeneralState s = random_state(rng);
    double t = time(rng);
    while (std::abs(std::sin(s.modes.omega_plus * t)) < 1e-2 ||
           std::abs(std::sin(s.modes.omega_minus * t)) < 1e-2)
      t = time(rng);
    const CoeffMatrices cm = build_matrices(s, t);
    const Eigen::Matrix2cd uv =
        cm.Omega1.cast<std::complex<double>>() * cm.S.inverse() *
        cm.Omega1.cast<std::complex<double>>();
    const double scale = uv.cwiseAbs().maxCoeff();
    CHECK((uv.real() - cm.U).cwiseAbs().maxCoeff() < 1e-11 * scale);
    CHECK((uv.imag() - cm.V).cwiseAbs().maxCoeff() < 1e-11 * scale);
    CHECK((uv.imag() - cm.Omega2 - cm.V_minus_Omega2).cwiseAbs().maxCoeff() < 1e-11 * scale);
    CHECK((uv.real() * cm.Z - cm.UZ).cwiseAbs().maxCoeff() < 1e-11 * scale);
    CHECK((uv.imag() * cm.Z - cm.VZ).cwiseAbs().maxCoeff() < 1e-11 * scale);
    CHECK((cm.U * cm.U_inv - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(cm.U.determinant() - cm.det_U) < 1e-12 * cm.det_U);
    // det(Omega1^{-1} S Omega1^{-1}) = det S * rho^2 eta^2
    const std::complex<double> via_s =
        cm.S.determinant() * (cm.rho * cm.rho * cm.eta * cm.eta);
    CHECK(std::abs(via_s - cm.M_det) < 1e-12 * std::abs(cm.M_det));
  }
}

TEST_CASE("symmetric parameters: U carries the two mode widths") {
  // With equal masses and springs the quadratic form decouples into the
  // static coherent width and the breathing squeezed width.
  const GeneralState s = make_general_state({1, 1, 1, 1, 1.5, 1}, 1.0);
  const double w = 1.0, Omega = 2.0, gamma = 0.5;
  for (const double t : {0.0, 0.6, 1.1, 2.8}) {
    const CoeffMatrices cm = build_matrices(s, t);
    const double c = std::cos(Omega * t), sn = std::sin(Omega * t);
    const double den = c * c + gamma * gamma * sn * sn;
    CHECK(cm.U(0, 0) == doctest::Approx(w).epsilon(1e-13));
    CHECK(cm.U(1, 1) == doctest::Approx(w / den).epsilon(1e-13));
    CHECK(std::abs(cm.U(0, 1)) < 1e-14);
    // coherent mode: no quadratic phase; squeezed mode: breathing phase
    CHECK(std::abs(cm.V_minus_Omega2(0, 0)) < 1e-13);
    CHECK(std::abs(cm.V_minus_Omega2(0, 1)) < 1e-14);
    CHECK(cm.V_minus_Omega2(1, 1) ==
          doctest::Approx(Omega * (1 - gamma * gamma) * c * sn / den).epsilon(1e-12));
  }
}

TEST_CASE("U stays symmetric and positive definite at every time") {
  std::mt19937_64 rng(0xc0deULL);
  std::uniform_real_distribution<double> time(0.0, 30.0);
  for (int trial = 0; trial < 20; ++trial) {
    const GeneralState s = random_state(rng);
    for (int i = 0; i < 50; ++i) {
      const CoeffMatrices cm = build_matrices(s, time(rng));
      CHECK(cm.U(0, 1) == cm.U(1, 0));
      CHECK(cm.U(0, 0) > 0.0);
      CHECK(cm.det_U > 0.0);
      CHECK(cm.U.determinant() > 0.0);
    }
  }
}

TEST_CASE("identity residuals stay below 1e-10") {
  SUBCASE("reference parameters at t = 0.9") {
    CHECK(identity_residuals(reference_state(), 0.9).max() < 1e-10);
  }
  SUBCASE("random parameters, broad time sweep") {
    std::mt19937_64 rng(0xbeefULL);
    std::uniform_real_distribution<double> time(0.0, 20.0);
    for (int trial = 0; trial < 50; ++trial) {
      const GeneralState s = random_state(rng);
      const IdentityResiduals r = identity_residuals(s, time(rng));
      CHECK(r.amplitude_norm < 1e-10);
      CHECK(r.det_product < 1e-10);
      CHECK(r.det_real_part < 1e-10);
      CHECK(r.adjugate_cross < 1e-12);
    }
  }
  SUBCASE("amplitude-normalization identity holds on symmetric parameters") {
    const GeneralState s = make_general_state({1, 1, 1, 1, 1.5, 1}, 1.0);
    CHECK(identity_residuals(s, 0.1).amplitude_norm < 1e-10);
  }
}

TEST_CASE("wave function: initial density, normalization, symmetric reduction") {
  SUBCASE("t = 0 reproduces the prepared product state") {
    const GeneralState s = reference_state();
    const double w1 = 1.0, w2 = 2.0, m1 = 1.0, m2 = 4.0, x0 = 1.0;
    const double norm = std::sqrt(m1 * m2 * w1 * w2) / std::numbers::pi;
    for (const double y1 : {-0.8, 0.1, 0.9}) {
      for (const double y2 : {0.2, 1.0, 1.6}) {
        const double density = std::norm(general_wavefunction(s, y1, y2, 0.0));
        const double expected =
            norm * std::exp(-(m1 * w1 * y1 * y1 + m2 * w2 * (y2 - x0) * (y2 - x0)));
        CHECK(density == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
  SUBCASE("2D normalization at t = 1.3") {
    const GeneralState s = reference_state();
    const CoeffMatrices cm = build_matrices(s, 1.3);
    const Eigen::Vector2d center = s.modes.N_inv * cm.mean_Y;
    const Eigen::Matrix2d nun = s.modes.N.transpose() * cm.U * s.modes.N;
    const double s1 = std::sqrt(0.5 / s.modes.mu * nun(1, 1) / cm.det_U);
    const double s2 = std::sqrt(0.5 / s.modes.mu * nun(0, 0) / cm.det_U);
    const auto density = [&](double y1, double y2) {
      return std::norm(general_wavefunction(s, cm, y1, y2));
    };
    const auto q = quadrature_normalize_2d(density, center(0), s1, center(1), s2, 8.0, 1e-8);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-7));
  }
  SUBCASE("modulus agrees with the symmetric-case wave function") {
    const OscillatorPair params{1, 1, 1, 1, 1.5, 1};
    const GeneralState gen = make_general_state(params, 1.0);
    const SymmetricState sym = make_symmetric_state(params, 1.0);
    for (const double t : {0.0, 0.4, 1.1, 2.7}) {
      const CoeffMatrices cm = build_matrices(gen, t);
      for (const double y1 : {-0.9, 0.2, 1.1}) {
        for (const double y2 : {-0.5, 0.6, 1.4}) {
          const Eigen::Vector2d y = gen.modes.N * Eigen::Vector2d(y1, y2);
          const double a = std::abs(general_wavefunction(gen, cm, y1, y2));
          const double b = std::abs(symmetric_wavefunction(sym, y(0), y(1), t));
          CHECK(a == doctest::Approx(b).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("reduced distribution") {
  SUBCASE("t = 0: vacuum marginal of oscillator #1") {
    const Gaussian1D g = general_reduced_distribution(reference_state(), 0.0);
    CHECK(g.mean == 0.0);
    CHECK(g.sigma == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  }
  SUBCASE("symmetric parameters match the symmetric closed forms") {
    const OscillatorPair params{1, 1, 1, 1, 1.5, 1};
    const GeneralState gen = make_general_state(params, 1.0);
    const SymmetricState sym = make_symmetric_state(params, 1.0);
    for (int i = 0; i <= 400; ++i) {
      const double t = 20.0 * i / 400;
      const Gaussian1D a = general_reduced_distribution(gen, t);
      const Gaussian1D b = symmetric_reduced_distribution(sym, t);
      CHECK(std::abs(a.mean - b.mean) < 1e-13);
      CHECK(std::abs(a.sigma - b.sigma) < 1e-13 * b.sigma);
    }
  }
  SUBCASE("marginal matches the moment oracle at t = 2.1") {
    const GeneralState s = reference_state();
    const GaussianMoments gm =
        evolve_moments(s.params, initial_moments(s.params, s.x0), 2.1, 1e-4);
    const Gaussian1D g = general_reduced_distribution(s, 2.1);
    CHECK(std::abs(g.mean - gm.mean(0)) < 1e-8);
    CHECK(std::abs(g.sigma - std::sqrt(gm.cov(0, 0))) < 1e-8);
  }
  SUBCASE("marginal normalization by quadrature") {
    const GeneralState s = reference_state();
    for (const double t : {0.0, 0.9, 3.3}) {
      const Gaussian1D g = general_reduced_distribution(s, t);
      const auto q =
          quadrature_normalize([&](double x) { return g.pdf(x); }, g.mean, g.sigma, 8.0, 1e-12);
      CHECK(q.converged);
      CHECK(q.value == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("observables") {
  SUBCASE("initial instant: ground-state values") {
    const ObservablePoint p = general_observables(reference_state(), 0.0);
    CHECK(p.y1_mean == 0.0);
    CHECK(p.p1_mean == 0.0);
    CHECK(p.y1_sigma == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(p.p1_sigma == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(p.product == doctest::Approx(0.5).epsilon(1e-14));
  }
  SUBCASE("zero coupling freezes oscillator #1") {
    const GeneralState s = make_general_state({1, 4, 1, 16, 0, 1}, 2.0);
    for (const double t : {0.0, 0.7, 2.0, 6.1}) {
      const ObservablePoint p = general_observables(s, t);
      CHECK(p.y1_mean == 0.0);
      CHECK(p.y1_sigma == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
      CHECK(p.p1_mean == 0.0);
      CHECK(p.p1_sigma == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    }
  }
  SUBCASE("agreement with the moment oracle") {
    const GeneralState s = reference_state();
    GaussianMoments gm = initial_moments(s.params, s.x0);
    for (const double t : {0.5, 1.0, 2.0}) {
      gm = evolve_moments(s.params, gm, t, 1e-4);
      CHECK(max_observable_gap(general_observables(s, t), moments_observables(gm)) < 1e-8);
    }
  }
  SUBCASE("negative time rejected") {
    CHECK_THROWS_AS(general_observables(reference_state(), -1.0), std::invalid_argument);
  }
}

TEST_CASE("closed forms equal the matrix route, including at sin-zero times") {
  std::mt19937_64 rng(0x7777ULL);
  for (int trial = 0; trial < 12; ++trial) {
    const GeneralState s = random_state(rng);
    std::vector<double> times;
    for (int i = 0; i <= 60; ++i) times.push_back(12.0 * i / 60);
    for (int n = 1; n <= 5; ++n) {
      times.push_back(n * std::numbers::pi / s.modes.omega_plus);
      times.push_back(n * std::numbers::pi / s.modes.omega_minus);
    }
    for (const double t : times) {
      const ObservablePoint a = general_observables(s, t);
      const ObservablePoint b = general_observables_matrix_route(s, t);
      const double scale = std::max({1.0, std::abs(a.y1_mean), std::abs(a.p1_mean)});
      CHECK(max_observable_gap(a, b) < 1e-11 * scale);
    }
  }
}

TEST_CASE("regularity at the sin-zero times") {
  std::mt19937_64 rng(0x4242ULL);
  for (int trial = 0; trial < 5; ++trial) {
    const GeneralState s = random_state(rng);
    for (int n = 1; n <= 20; ++n) {
      for (const double w : {s.modes.omega_plus, s.modes.omega_minus}) {
        const double t = n * std::numbers::pi / w;
        const ObservablePoint p = general_observables(s, t);
        CHECK(std::isfinite(p.y1_mean));
        CHECK(std::isfinite(p.y1_sigma));
        CHECK(std::isfinite(p.p1_mean));
        CHECK(std::isfinite(p.p1_sigma));
        CHECK(std::isfinite(p.product));
        const ObservablePoint lo = general_observables(s, t - 1e-9);
        const ObservablePoint hi = general_observables(s, t + 1e-9);
        CHECK(max_observable_gap(lo, hi) < 1e-6);
        // The wave function itself stays finite there too.
        const std::complex<double> psi = general_wavefunction(s, 0.3, -0.2, t);
        CHECK(std::isfinite(psi.real()));
        CHECK(std::isfinite(psi.imag()));
      }
    }
  }
}

TEST_CASE("|Xi|^2 honors its time-independent bounds") {
  SUBCASE("symmetric case: bounds collapse to [gamma^2, 1]") {
    const GeneralState s = make_general_state({1, 1, 1, 1, 1.5, 1}, 1.0);
    const XiBounds b = xi_bounds(s);
    CHECK(b.lower == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("reference parameters, dense sweep") {
    const GeneralState s = reference_state();
    const XiBounds b = xi_bounds(s);
    CHECK(b.lower > 0.0);
    CHECK(std::isfinite(b.upper));
    for (int i = 0; i <= 10000; ++i) {
      const double xi2 = std::norm(build_matrices(s, 50.0 * i / 10000).Xi);
      CHECK(xi2 >= b.lower * (1 - 1e-12));
      CHECK(xi2 <= b.upper * (1 + 1e-12));
    }
  }
  SUBCASE("random parameters, random times") {
    std::mt19937_64 rng(0xabcdULL);
    std::uniform_real_distribution<double> time(0.0, 100.0);
    for (int trial = 0; trial < 10; ++trial) {
      const GeneralState s = random_state(rng);
      const XiBounds b = xi_bounds(s);
      for (int i = 0; i < 1000; ++i) {
        const double xi2 = std::norm(build_matrices(s, time(rng)).Xi);
        CHECK(xi2 >= b.lower * (1 - 1e-12));
        CHECK(xi2 <= b.upper * (1 + 1e-12));
      }
    }
  }
}

TEST_CASE("Heisenberg floor and derivative consistency") {
  std::mt19937_64 rng(0x1357ULL);
  for (int trial = 0; trial < 8; ++trial) {
    const GeneralState s = random_state(rng);
    for (int i = 0; i <= 500; ++i) {
      const ObservablePoint p = general_observables(s, 15.0 * i / 500);
      CHECK(p.product >= 0.5 * s.params.hbar * (1 - 1e-12));
    }
  }
  const GeneralState s = reference_state();
  const double h = 1e-5;
  for (const double t : {0.2, 1.0, 3.1, 8.8}) {
    const double fd =
        (general_observables(s, t + h).y1_mean - general_observables(s, t - h).y1_mean) / (2 * h);
    CHECK(std::abs(fd - general_observables(s, t).p1_mean / s.params.m1) < 1e-8);
  }
}
