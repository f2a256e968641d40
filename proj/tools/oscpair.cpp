#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscpair/driver.hpp"
#include "oscpair/emit.hpp"

namespace {

// Values captured from command-line flags; merged over the config file so
// that explicitly passed flags always win.
struct CliValues {
  std::string config_path;
  oscpair::RunConfig values;
  std::string mode = "auto";
  std::string format = "csv";
  // wavefunction subcommand extras
  double t = 0.0;
  std::string grid = "64x64";
  double window = 8.0;
  CLI::App* cmd = nullptr;
};

void add_common_options(CLI::App* cmd, CliValues& cli) {
  cmd->add_option("--config", cli.config_path,
                  "configuration file with [params], [sweep] and [output] sections");
  cmd->add_option("--m1", cli.values.params.m1, "mass of oscillator #1")->capture_default_str();
  cmd->add_option("--m2", cli.values.params.m2, "mass of oscillator #2")->capture_default_str();
  cmd->add_option("--k1", cli.values.params.k1, "spring constant of oscillator #1")
      ->capture_default_str();
  cmd->add_option("--k2", cli.values.params.k2, "spring constant of oscillator #2")
      ->capture_default_str();
  cmd->add_option("--kappa", cli.values.params.kappa, "coupling spring constant")
      ->capture_default_str();
  cmd->add_option("--hbar", cli.values.params.hbar, "action scale")->capture_default_str();
  cmd->add_option("--x0", cli.values.x0, "initial classical amplitude of oscillator #2")
      ->capture_default_str();
  cmd->add_option("--t-start", cli.values.t_start, "first sample time")->capture_default_str();
  cmd->add_option("--t-end", cli.values.t_end, "last sample time")->capture_default_str();
  cmd->add_option("--steps", cli.values.steps, "number of sample times (>= 2)")
      ->capture_default_str();
  cmd->add_option("--mode", cli.mode, "closed-form family to evaluate")
      ->check(CLI::IsMember({"auto", "symmetric", "general", "resonance"}))
      ->capture_default_str();
  cmd->add_option("--format", cli.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--oracle", cli.values.oracle,
                "cross-check closed forms against the moment-evolution oracle");
  cmd->add_option("--oracle-dt", cli.values.oracle_dt, "oracle integrator step size")
      ->capture_default_str();
}

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw oscpair::ConfigError(key + ": cannot parse '" + text + "' as a number");
  }
  if (used != text.size())
    throw oscpair::ConfigError(key + ": cannot parse '" + text + "' as a number");
  return value;
}

int parse_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw oscpair::ConfigError(key + ": cannot parse '" + text + "' as an integer");
  }
  if (used != text.size())
    throw oscpair::ConfigError(key + ": cannot parse '" + text + "' as an integer");
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text.empty()) return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw oscpair::ConfigError(key + ": cannot parse '" + text + "' as a boolean");
}

// Reads the [params]/[sweep]/[output] file via the CLI11 INI reader and
// folds it into `config`.  Unknown sections or keys are rejected with a
// field-level diagnostic.
void apply_config_file(const std::string& path, oscpair::RunConfig& config, std::string& mode,
                       std::string& format) {
  CLI::ConfigINI reader;
  std::vector<CLI::ConfigItem> items;
  try {
    items = reader.from_file(path);
  } catch (const CLI::FileError& e) {
    throw oscpair::ConfigError(e.what());
  }
  for (const CLI::ConfigItem& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    if (item.parents.size() != 1)
      throw oscpair::ConfigError("config entry '" + item.fullname() +
                                 "' must live in a [params], [sweep] or [output] section");
    const std::string& section = item.parents.front();
    const std::string key = section + "." + item.name;
    const std::string value = item.inputs.empty() ? std::string() : item.inputs.front();
    if (item.inputs.size() > 1)
      throw oscpair::ConfigError(key + ": expected a single value");

    if (section == "params") {
      if (item.name == "m1") config.params.m1 = parse_double(key, value);
      else if (item.name == "m2") config.params.m2 = parse_double(key, value);
      else if (item.name == "k1") config.params.k1 = parse_double(key, value);
      else if (item.name == "k2") config.params.k2 = parse_double(key, value);
      else if (item.name == "kappa") config.params.kappa = parse_double(key, value);
      else if (item.name == "hbar") config.params.hbar = parse_double(key, value);
      else if (item.name == "x0") config.x0 = parse_double(key, value);
      else throw oscpair::ConfigError("unknown config key '" + key + "'");
    } else if (section == "sweep") {
      if (item.name == "t-start") config.t_start = parse_double(key, value);
      else if (item.name == "t-end") config.t_end = parse_double(key, value);
      else if (item.name == "steps") config.steps = parse_int(key, value);
      else if (item.name == "mode") mode = value;
      else throw oscpair::ConfigError("unknown config key '" + key + "'");
    } else if (section == "output") {
      if (item.name == "format") format = value;
      else if (item.name == "oracle") config.oracle = parse_bool(key, value);
      else if (item.name == "oracle-dt") config.oracle_dt = parse_double(key, value);
      else throw oscpair::ConfigError("unknown config key '" + key + "'");
    } else {
      throw oscpair::ConfigError("unknown config section '" + section + "'");
    }
  }
}

// File values first, then every flag the user actually typed on top.
oscpair::RunConfig resolve_config(const CliValues& cli) {
  oscpair::RunConfig config;
  std::string mode = cli.mode;
  std::string format = cli.format;
  if (!cli.config_path.empty()) {
    mode = "auto";
    format = "csv";
    apply_config_file(cli.config_path, config, mode, format);
  }
  const CLI::App* cmd = cli.cmd;
  if (cmd->count("--m1")) config.params.m1 = cli.values.params.m1;
  if (cmd->count("--m2")) config.params.m2 = cli.values.params.m2;
  if (cmd->count("--k1")) config.params.k1 = cli.values.params.k1;
  if (cmd->count("--k2")) config.params.k2 = cli.values.params.k2;
  if (cmd->count("--kappa")) config.params.kappa = cli.values.params.kappa;
  if (cmd->count("--hbar")) config.params.hbar = cli.values.params.hbar;
  if (cmd->count("--x0")) config.x0 = cli.values.x0;
  if (cmd->count("--t-start")) config.t_start = cli.values.t_start;
  if (cmd->count("--t-end")) config.t_end = cli.values.t_end;
  if (cmd->count("--steps")) config.steps = cli.values.steps;
  if (cmd->count("--mode")) mode = cli.mode;
  if (cmd->count("--format")) format = cli.format;
  if (cmd->count("--oracle")) config.oracle = cli.values.oracle;
  if (cmd->count("--oracle-dt")) config.oracle_dt = cli.values.oracle_dt;
  config.mode = oscpair::parse_mode(mode);
  config.format = oscpair::parse_format(format);
  return config;
}

int parse_grid_spec(const std::string& spec) {
  int a = 0, b = 0;
  char extra = 0;
  if (std::sscanf(spec.c_str(), "%dx%d%c", &a, &b, &extra) != 2 || a != b || a < 2)
    throw oscpair::ConfigError("grid must have the form NxN with N >= 2");
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oscpair: exact quantum dynamics of two linearly coupled harmonic oscillators"};
  app.require_subcommand(1);

  CliValues cli;
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate oscillator-#1 observables on a time grid");
  CLI::App* validate = app.add_subcommand("validate", "run the invariant and identity suite");
  CLI::App* wavefunction =
      app.add_subcommand("wavefunction", "dump the joint position density |Psi|^2 on a grid");
  CLI::App* bounds = app.add_subcommand("bounds", "print time-independent uncertainty envelopes");
  add_common_options(sweep, cli);
  add_common_options(validate, cli);
  add_common_options(wavefunction, cli);
  add_common_options(bounds, cli);
  wavefunction->add_option("--t", cli.t, "evaluation time")->required();
  wavefunction->add_option("--grid", cli.grid, "grid resolution, NxN")->capture_default_str();
  wavefunction->add_option("--window", cli.window, "half-width in marginal sigmas")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cli.cmd = app.get_subcommands().front();
    const oscpair::RunConfig config = resolve_config(cli);
    const bool json = config.format == oscpair::OutputFormat::Json;

    if (cli.cmd == sweep) {
      const oscpair::SweepResult result = oscpair::run_sweep(config);
      std::cout << (json ? oscpair::sweep_json(config, result)
                         : oscpair::sweep_csv(config, result));
      if (config.oracle && !result.oracle_within_tolerance) {
        std::cerr << "oracle deviation " << oscpair::format_number(result.oracle_max_dev)
                  << " exceeds tolerance " << oscpair::format_number(oscpair::kOracleTolerance)
                  << "\n";
        return 1;
      }
    } else if (cli.cmd == validate) {
      const oscpair::ValidationReport report = oscpair::run_validate(config);
      std::cout << (json ? oscpair::validation_json(config, report)
                         : oscpair::validation_csv(report));
      if (!report.all_passed()) return 1;
    } else if (cli.cmd == wavefunction) {
      const int n = parse_grid_spec(cli.grid);
      const oscpair::WavefunctionGrid grid =
          oscpair::wavefunction_grid(config, cli.t, n, cli.window);
      std::cout << (json ? oscpair::wavefunction_json(config, grid)
                         : oscpair::wavefunction_csv(grid));
    } else if (cli.cmd == bounds) {
      const std::vector<oscpair::BoundsRow> rows = oscpair::envelope_rows(config);
      std::cout << (json ? oscpair::bounds_json(config, rows) : oscpair::bounds_csv(rows));
    }
  } catch (const oscpair::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
