#include "oscpair/driver.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <random>

#include "oscpair/general.hpp"
#include "oscpair/moment_oracle.hpp"
#include "oscpair/normal_modes.hpp"
#include "oscpair/quadrature.hpp"
#include "oscpair/resonance.hpp"
#include "oscpair/symmetric.hpp"

namespace oscpair {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::Auto: return "auto";
    case Mode::Symmetric: return "symmetric";
    case Mode::General: return "general";
    case Mode::Resonance: return "resonance";
  }
  return "unknown";
}

const char* format_name(OutputFormat format) {
  return format == OutputFormat::Csv ? "csv" : "json";
}

Mode parse_mode(const std::string& name) {
  if (name == "auto") return Mode::Auto;
  if (name == "symmetric") return Mode::Symmetric;
  if (name == "general") return Mode::General;
  if (name == "resonance") return Mode::Resonance;
  throw ConfigError("mode must be one of: auto, symmetric, general, resonance");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("format must be csv or json");
}

void validate_config(const RunConfig& config) {
  try {
    validate(config.params);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what());
  }
  if (!std::isfinite(config.x0)) throw ConfigError("x0 must be finite");
  if (!(config.t_start >= 0.0)) throw ConfigError("t-start must be >= 0");
  if (!(config.t_end > config.t_start)) throw ConfigError("t-end must be > t-start");
  if (config.steps < 2) throw ConfigError("steps must be >= 2");
  if (!(config.oracle_dt > 0.0)) throw ConfigError("oracle-dt must be > 0");
  resolve_mode(config);
}

Mode resolve_mode(const RunConfig& config) {
  const OscillatorPair& p = config.params;
  const bool symmetric = p.m1 == p.m2 && p.k1 == p.k2;
  const double w1 = p.omega1();
  const double w2 = p.omega2();
  const bool resonant = std::abs(w1 - w2) < 1e-12 * w1;
  switch (config.mode) {
    case Mode::Auto:
      return symmetric ? Mode::Symmetric : (resonant ? Mode::Resonance : Mode::General);
    case Mode::Symmetric:
      if (!symmetric) throw ConfigError("mode=symmetric requires m1 == m2 and k1 == k2");
      return Mode::Symmetric;
    case Mode::Resonance:
      if (!resonant)
        throw ConfigError("mode=resonance requires omega1 == omega2 within 1e-12 relative");
      return Mode::Resonance;
    case Mode::General:
      return Mode::General;
  }
  throw ConfigError("unrecognized mode");
}

namespace {

std::function<ObservablePoint(double)> make_evaluator(const RunConfig& config, Mode resolved) {
  switch (resolved) {
    case Mode::Symmetric: {
      const SymmetricState state = make_symmetric_state(config.params, config.x0);
      return [state](double t) { return symmetric_observables(state, t); };
    }
    case Mode::Resonance: {
      const ResonanceState state = make_resonance_state(config.params, config.x0);
      return [state](double t) { return resonance_observables(state, t); };
    }
    default: {
      const GeneralState state = make_general_state(config.params, config.x0);
      return [state](double t) { return general_observables(state, t); };
    }
  }
}

std::vector<double> time_grid(double t_start, double t_end, int n) {
  std::vector<double> times(n);
  for (int i = 0; i < n; ++i)
    times[i] = t_start + (t_end - t_start) * static_cast<double>(i) / (n - 1);
  return times;
}

double observable_deviation(const ObservablePoint& a, const ObservablePoint& b) {
  return std::max({std::abs(a.y1_mean - b.y1_mean), std::abs(a.y1_sigma - b.y1_sigma),
                   std::abs(a.p1_mean - b.p1_mean), std::abs(a.p1_sigma - b.p1_sigma),
                   std::abs(a.product - b.product)});
}

/// Max relative deviation between two observable series.  Each column is
/// scaled by its peak magnitude; the mean columns (which pass through or
/// can be identically zero) are floored by the matching sigma column, the
/// natural magnitude with the same units.
double max_scaled_deviation(const std::vector<ObservablePoint>& a,
                            const std::vector<ObservablePoint>& b) {
  auto column = [](const ObservablePoint& p, int c) {
    switch (c) {
      case 0: return p.y1_mean;
      case 1: return p.y1_sigma;
      case 2: return p.p1_mean;
      case 3: return p.p1_sigma;
      default: return p.product;
    }
  };
  double peak[5] = {DBL_MIN, DBL_MIN, DBL_MIN, DBL_MIN, DBL_MIN};
  for (int c = 0; c < 5; ++c)
    for (std::size_t i = 0; i < a.size(); ++i)
      peak[c] = std::max({peak[c], std::abs(column(a[i], c)), std::abs(column(b[i], c))});
  const double scale[5] = {std::max(peak[0], peak[1]), peak[1], std::max(peak[2], peak[3]),
                           peak[3], peak[4]};
  double worst = 0.0;
  for (int c = 0; c < 5; ++c) {
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
      dev = std::max(dev, std::abs(column(a[i], c) - column(b[i], c)));
    worst = std::max(worst, dev / scale[c]);
  }
  return worst;
}

/// Uniform times in [t0, t1] that keep |sin(omega_pm t)| above the margin,
/// so the raw-matrix identities are sampled away from their removable
/// singularities.
std::vector<double> sampled_times_away_from_zeros(const NormalModes& modes, double t0, double t1,
                                                  int count, double margin, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(t0, t1);
  std::vector<double> times;
  times.reserve(count);
  long attempts = 0;
  const long max_attempts = 1000L * count;
  while (static_cast<int>(times.size()) < count && attempts++ < max_attempts) {
    const double t = uni(rng);
    if (std::abs(std::sin(modes.omega_plus * t)) <= margin) continue;
    if (std::abs(std::sin(modes.omega_minus * t)) <= margin) continue;
    times.push_back(t);
  }
  // A window so short that everything sits inside the margin: sample
  // unconditionally rather than spin (the identities are regular anyway).
  while (static_cast<int>(times.size()) < count) times.push_back(uni(rng));
  return times;
}

}  // namespace

SweepResult run_sweep(const RunConfig& config) {
  validate_config(config);
  SweepResult result;
  result.resolved_mode = resolve_mode(config);
  const auto eval = make_evaluator(config, result.resolved_mode);
  const std::vector<double> times = time_grid(config.t_start, config.t_end, config.steps);

  result.points.reserve(times.size());
  for (const double t : times) result.points.push_back(eval(t));

  if (config.oracle) {
    result.oracle_dev.reserve(times.size());
    GaussianMoments gm = initial_moments(config.params, config.x0);
    for (const ObservablePoint& point : result.points) {
      gm = evolve_moments(config.params, gm, point.t, config.oracle_dt);
      const double dev = observable_deviation(point, moments_observables(gm));
      result.oracle_dev.push_back(dev);
      result.oracle_max_dev = std::max(result.oracle_max_dev, dev);
    }
    result.oracle_within_tolerance = result.oracle_max_dev <= kOracleTolerance;
  }
  return result;
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

ValidationReport run_validate(const RunConfig& config) {
  validate_config(config);
  ValidationReport report;
  report.resolved_mode = resolve_mode(config);
  const auto add = [&report](const std::string& name, double residual, double tolerance) {
    report.checks.push_back({name, residual <= tolerance, residual, tolerance});
  };

  const OscillatorPair& params = config.params;
  const GeneralState state = make_general_state(params, config.x0);
  const NormalModes& modes = state.modes;
  const double t0 = config.t_start, t1 = config.t_end;

  // Coordinate map.
  add("mode_map_inverse",
      (modes.N * modes.N_inv - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  add("mode_map_det", std::abs(modes.N.determinant() - 1.0), 1e-14);

  // The rotation by alpha must diagonalize the rescaled stiffness matrix.
  {
    const double mu = modes.mu;
    const double km = params.kappa / mu;
    Eigen::Matrix2d k;
    k << modes.omega1 * modes.omega1 + km * std::sqrt(params.m2 / params.m1), -km, -km,
        modes.omega2 * modes.omega2 + km * std::sqrt(params.m1 / params.m2);
    Eigen::Matrix2d rot;
    rot << std::cos(modes.alpha), std::sin(modes.alpha), -std::sin(modes.alpha),
        std::cos(modes.alpha);
    const Eigen::Matrix2d diag = rot * k * rot.transpose();
    const double scale = modes.omega1 * modes.omega1 + modes.omega2 * modes.omega2 + km;
    const double off = std::abs(diag(0, 1)) / scale;
    const double freq = std::max(std::abs(diag(0, 0) - modes.omega_plus * modes.omega_plus),
                                 std::abs(diag(1, 1) - modes.omega_minus * modes.omega_minus)) /
                        scale;
    add("diagonalization_offdiag", off, 1e-12);
    add("diagonalization_frequencies", freq, 1e-12);
  }

  // Coefficient-matrix identities at sampled times.
  {
    const auto times = sampled_times_away_from_zeros(modes, t0 + 1e-3, t1, 200, 1e-3, 0x5eedULL);
    IdentityResiduals worst;
    for (const double t : times) {
      const IdentityResiduals r = identity_residuals(state, t);
      worst.amplitude_norm = std::max(worst.amplitude_norm, r.amplitude_norm);
      worst.det_product = std::max(worst.det_product, r.det_product);
      worst.det_real_part = std::max(worst.det_real_part, r.det_real_part);
      worst.adjugate_cross = std::max(worst.adjugate_cross, r.adjugate_cross);
    }
    add("identity_amplitude_norm", worst.amplitude_norm, 1e-10);
    add("identity_det_product", worst.det_product, 1e-10);
    add("identity_det_real_part", worst.det_real_part, 1e-10);
    add("identity_adjugate_cross", worst.adjugate_cross, 1e-10);
  }

  // |Xi|^2 containment within its time-independent envelope.
  {
    const XiBounds bounds = xi_bounds(state);
    double excursion = 0.0;
    for (const double t : time_grid(t0, t1, 10001)) {
      const double xi2 = std::norm(build_matrices(state, t).Xi);
      excursion = std::max({excursion, (bounds.lower - xi2) / bounds.lower,
                            (xi2 - bounds.upper) / bounds.upper});
    }
    add("xi_containment", std::max(0.0, excursion), 1e-12);
  }

  // Heisenberg floor and agreement of the two observable routes.
  {
    const auto eval = make_evaluator(config, report.resolved_mode);
    const auto times = time_grid(t0, t1, 2001);
    double floor_residual = 0.0;
    std::vector<ObservablePoint> closed, matrix;
    closed.reserve(501);
    matrix.reserve(501);
    for (const double t : times) {
      const ObservablePoint p = eval(t);
      floor_residual = std::max(floor_residual, 1.0 - p.product / (0.5 * params.hbar));
    }
    for (const double t : time_grid(t0, t1, 501)) {
      closed.push_back(general_observables(state, t));
      matrix.push_back(general_observables_matrix_route(state, t));
    }
    add("heisenberg_floor", std::max(0.0, floor_residual), 1e-12);
    add("matrix_route_agreement", max_scaled_deviation(closed, matrix), 1e-10);
  }

  // d<y1>/dt consistency with <p1>/m1 by central differences.
  {
    std::mt19937_64 rng(0xd1ffULL);
    const double h = 1e-5;
    const double lo = std::max(t0, h) + h;
    const double hi = t1 - h;
    if (hi > lo) {
      std::uniform_real_distribution<double> uni(lo, hi);
      const auto eval = make_evaluator(config, report.resolved_mode);
      double residual = 0.0;
      for (int i = 0; i < 100; ++i) {
        const double t = uni(rng);
        const double fd = (eval(t + h).y1_mean - eval(t - h).y1_mean) / (2.0 * h);
        residual = std::max(residual, std::abs(fd - eval(t).p1_mean / params.m1));
      }
      add("momentum_derivative", residual, 1e-8);
    }
  }

  // Reductions of the general machinery to the special cases.
  if (params.m1 == params.m2 && params.k1 == params.k2) {
    const SymmetricState sym = make_symmetric_state(params, config.x0);
    std::vector<ObservablePoint> a, b;
    for (const double t : time_grid(t0, t1, 1000)) {
      a.push_back(symmetric_observables(sym, t));
      b.push_back(general_observables(state, t));
    }
    add("symmetric_reduction", max_scaled_deviation(a, b), 1e-12);
  }
  if (std::abs(modes.omega1 - modes.omega2) < 1e-12 * modes.omega1) {
    const ResonanceState res = make_resonance_state(params, config.x0);
    std::vector<ObservablePoint> a, b;
    for (const double t : time_grid(t0, t1, 1000)) {
      a.push_back(resonance_observables(res, t));
      b.push_back(general_observables(state, t));
    }
    add("resonance_reduction", max_scaled_deviation(a, b), 1e-12);
  }

  // Marginal distributions stay normalized.
  {
    double residual = 0.0;
    for (const double t : time_grid(t0, t1, 5)) {
      const Gaussian1D g = general_reduced_distribution(state, t);
      const auto q = quadrature_normalize([&g](double x) { return g.pdf(x); }, g.mean, g.sigma,
                                          8.0, 1e-12);
      residual = std::max(residual, std::abs(q.value - 1.0));
    }
    add("marginal_normalization", residual, 1e-10);
  }

  if (config.oracle) {
    const auto eval = make_evaluator(config, report.resolved_mode);
    GaussianMoments gm = initial_moments(params, config.x0);
    double dev = 0.0;
    for (const double t : time_grid(t0, t1, 101)) {
      gm = evolve_moments(params, gm, t, config.oracle_dt);
      dev = std::max(dev, observable_deviation(eval(t), moments_observables(gm)));
    }
    add("oracle_agreement", dev, kOracleTolerance);
  }

  return report;
}

std::vector<BoundsRow> envelope_rows(const RunConfig& config) {
  validate_config(config);
  const Mode resolved = resolve_mode(config);
  std::vector<BoundsRow> rows;
  if (resolved == Mode::Symmetric || resolved == Mode::Resonance) {
    const ResonanceState res = make_resonance_state(config.params, config.x0);
    const ResonanceBounds b = resonance_bounds(res);
    rows.push_back({"sigma_y", b.sigma_y_min, b.sigma_y_max});
    rows.push_back({"sigma_p", b.sigma_p_min, b.sigma_p_max});
    rows.push_back({"product", b.product_min, b.product_max});
  }
  const XiBounds xb = xi_bounds(make_general_state(config.params, config.x0));
  rows.push_back({"xi_squared", xb.lower, xb.upper});
  return rows;
}

WavefunctionGrid wavefunction_grid(const RunConfig& config, double t, int n, double window) {
  validate_config(config);
  if (n < 2) throw ConfigError("grid must be at least 2x2");
  if (!(window > 0.0)) throw ConfigError("window must be > 0");
  if (!(t >= 0.0)) throw ConfigError("t must be >= 0");

  const GeneralState state = make_general_state(config.params, config.x0);
  const CoeffMatrices cm = build_matrices(state, t);
  const Eigen::Vector2d center = state.modes.N_inv * cm.mean_Y;
  const Eigen::Matrix2d nun = state.modes.N.transpose() * cm.U * state.modes.N;
  const double hbar = state.params.hbar;
  const double s1 = std::sqrt((hbar / (2.0 * state.modes.mu)) * nun(1, 1) / cm.det_U);
  const double s2 = std::sqrt((hbar / (2.0 * state.modes.mu)) * nun(0, 0) / cm.det_U);

  WavefunctionGrid grid;
  grid.n = n;
  grid.t = t;
  grid.y1.reserve(static_cast<std::size_t>(n) * n);
  grid.y2.reserve(static_cast<std::size_t>(n) * n);
  grid.density.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double y1 = center(0) - window * s1 + 2.0 * window * s1 * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double y2 = center(1) - window * s2 + 2.0 * window * s2 * j / (n - 1);
      grid.y1.push_back(y1);
      grid.y2.push_back(y2);
      grid.density.push_back(std::norm(general_wavefunction(state, cm, y1, y2)));
    }
  }
  return grid;
}

}  // namespace oscpair
