#include "oscpair/emit.hpp"

#include <cstdio>

#include <json.hpp>

namespace oscpair {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

namespace {

ordered_json config_metadata(const RunConfig& config, Mode resolved) {
  ordered_json meta;
  meta["m1"] = config.params.m1;
  meta["m2"] = config.params.m2;
  meta["k1"] = config.params.k1;
  meta["k2"] = config.params.k2;
  meta["kappa"] = config.params.kappa;
  meta["hbar"] = config.params.hbar;
  meta["x0"] = config.x0;
  meta["t_start"] = config.t_start;
  meta["t_end"] = config.t_end;
  meta["steps"] = config.steps;
  meta["mode"] = mode_name(config.mode);
  meta["resolved_mode"] = mode_name(resolved);
  meta["format"] = format_name(config.format);
  meta["oracle"] = config.oracle;
  meta["oracle_dt"] = config.oracle_dt;
  return meta;
}

}  // namespace

std::string sweep_csv(const RunConfig& config, const SweepResult& result) {
  std::string out = "t,y1_mean,y1_sigma,p1_mean,p1_sigma,product";
  if (config.oracle) out += ",oracle_max_dev";
  out += '\n';
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const ObservablePoint& p = result.points[i];
    out += format_number(p.t) + ',' + format_number(p.y1_mean) + ',' +
           format_number(p.y1_sigma) + ',' + format_number(p.p1_mean) + ',' +
           format_number(p.p1_sigma) + ',' + format_number(p.product);
    if (config.oracle) out += ',' + format_number(result.oracle_dev[i]);
    out += '\n';
  }
  return out;
}

std::string sweep_json(const RunConfig& config, const SweepResult& result) {
  ordered_json doc = ordered_json::array();
  doc.push_back({{"config", config_metadata(config, result.resolved_mode)}});
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const ObservablePoint& p = result.points[i];
    ordered_json row;
    row["t"] = p.t;
    row["y1_mean"] = p.y1_mean;
    row["y1_sigma"] = p.y1_sigma;
    row["p1_mean"] = p.p1_mean;
    row["p1_sigma"] = p.p1_sigma;
    row["product"] = p.product;
    if (config.oracle) row["oracle_max_dev"] = result.oracle_dev[i];
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + '\n';
}

std::string validation_csv(const ValidationReport& report) {
  std::string out = "check,passed,residual,tolerance\n";
  for (const CheckResult& c : report.checks) {
    out += c.name + ',' + (c.passed ? "true" : "false") + ',' + format_number(c.residual) + ',' +
           format_number(c.tolerance) + '\n';
  }
  return out;
}

std::string validation_json(const RunConfig& config, const ValidationReport& report) {
  ordered_json doc = ordered_json::array();
  doc.push_back({{"config", config_metadata(config, report.resolved_mode)}});
  for (const CheckResult& c : report.checks) {
    ordered_json row;
    row["check"] = c.name;
    row["passed"] = c.passed;
    row["residual"] = c.residual;
    row["tolerance"] = c.tolerance;
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + '\n';
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::string out = "quantity,lower,upper\n";
  for (const BoundsRow& row : rows)
    out += row.quantity + ',' + format_number(row.lower) + ',' + format_number(row.upper) + '\n';
  return out;
}

std::string bounds_json(const RunConfig& config, const std::vector<BoundsRow>& rows) {
  ordered_json doc = ordered_json::array();
  doc.push_back({{"config", config_metadata(config, resolve_mode(config))}});
  for (const BoundsRow& row : rows) {
    ordered_json obj;
    obj["quantity"] = row.quantity;
    obj["lower"] = row.lower;
    obj["upper"] = row.upper;
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + '\n';
}

std::string wavefunction_csv(const WavefunctionGrid& grid) {
  std::string out = "y1,y2,density\n";
  for (std::size_t i = 0; i < grid.density.size(); ++i) {
    out += format_number(grid.y1[i]) + ',' + format_number(grid.y2[i]) + ',' +
           format_number(grid.density[i]) + '\n';
  }
  return out;
}

std::string wavefunction_json(const RunConfig& config, const WavefunctionGrid& grid) {
  ordered_json doc = ordered_json::array();
  ordered_json meta = config_metadata(config, resolve_mode(config));
  meta["t"] = grid.t;
  meta["grid"] = grid.n;
  doc.push_back({{"config", std::move(meta)}});
  for (std::size_t i = 0; i < grid.density.size(); ++i) {
    ordered_json row;
    row["y1"] = grid.y1[i];
    row["y2"] = grid.y2[i];
    row["density"] = grid.density[i];
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + '\n';
}

}  // namespace oscpair
