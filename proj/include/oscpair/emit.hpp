#pragma once

#include <string>

#include "oscpair/driver.hpp"

namespace oscpair {

/// Decimal with 17 significant digits: round-trip exact for binary64.
std::string format_number(double value);

std::string sweep_csv(const RunConfig& config, const SweepResult& result);
std::string sweep_json(const RunConfig& config, const SweepResult& result);

std::string validation_csv(const ValidationReport& report);
std::string validation_json(const RunConfig& config, const ValidationReport& report);

std::string bounds_csv(const std::vector<BoundsRow>& rows);
std::string bounds_json(const RunConfig& config, const std::vector<BoundsRow>& rows);

std::string wavefunction_csv(const WavefunctionGrid& grid);
std::string wavefunction_json(const RunConfig& config, const WavefunctionGrid& grid);

}  // namespace oscpair
