#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "oscpair/observable_point.hpp"
#include "oscpair/oscillator_pair.hpp"

namespace oscpair {

enum class Mode { Auto, Symmetric, General, Resonance };
enum class OutputFormat { Csv, Json };

const char* mode_name(Mode mode);
const char* format_name(OutputFormat format);
Mode parse_mode(const std::string& name);
OutputFormat parse_format(const std::string& name);

/// A malformed configuration; the CLI maps this to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  OscillatorPair params;
  double x0 = 1.0;
  double t_start = 0.0;
  double t_end = 10.0;
  int steps = 101;
  Mode mode = Mode::Auto;
  OutputFormat format = OutputFormat::Csv;
  bool oracle = false;
  double oracle_dt = 1e-4;
};

/// Throws ConfigError with a field-level diagnostic.
void validate_config(const RunConfig& config);

/// Auto dispatch: symmetric when m1 = m2 and k1 = k2, resonance when the
/// unperturbed frequencies agree to 1e-12 relative, general otherwise.
/// Explicit symmetric/resonance requests are checked against the same
/// conditions.
Mode resolve_mode(const RunConfig& config);

struct SweepResult {
  Mode resolved_mode = Mode::General;
  std::vector<ObservablePoint> points;
  /// Per-point max |closed form - oracle| over the five observables;
  /// empty unless the oracle cross-check was requested.
  std::vector<double> oracle_dev;
  double oracle_max_dev = 0.0;
  /// True when the oracle ran and stayed within tolerance everywhere.
  bool oracle_within_tolerance = true;
};

/// Oracle agreement threshold used by sweeps and the validation suite.
inline constexpr double kOracleTolerance = 1e-6;

/// Evaluates the dispatched closed forms on `steps` equally spaced times
/// in [t_start, t_end], optionally cross-checking each point against the
/// moment oracle.  Output ordering is by time, deterministically.
SweepResult run_sweep(const RunConfig& config);

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct ValidationReport {
  Mode resolved_mode = Mode::General;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Runs the full invariant suite on the configured parameters: coordinate
/// map and diagonalization checks, the coefficient-matrix identities,
/// |Xi|^2 containment, Heisenberg floor, derivative consistency between
/// the position and momentum expectations, closed-form vs matrix-route
/// agreement, reductions to the symmetric/resonance special cases where
/// applicable, marginal normalization, and (optionally) oracle agreement.
ValidationReport run_validate(const RunConfig& config);

struct BoundsRow {
  std::string quantity;
  double lower = 0.0;
  double upper = 0.0;
};

/// Time-independent envelopes for the configured system: sigma_y, sigma_p
/// and product ranges for symmetric/resonance parameters, and the |Xi|^2
/// bounds in every mode.
std::vector<BoundsRow> envelope_rows(const RunConfig& config);

struct WavefunctionGrid {
  int n = 0;
  double t = 0.0;
  /// Row-major samples: y1 varies slowest, y2 fastest.
  std::vector<double> y1, y2, density;
};

/// |Psi|^2 sampled on an n x n grid covering the marginal means
/// +- window sigma in each oscillator coordinate.
WavefunctionGrid wavefunction_grid(const RunConfig& config, double t, int n, double window);

}  // namespace oscpair
