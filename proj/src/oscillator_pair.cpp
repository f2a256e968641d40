#include "oscpair/oscillator_pair.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace oscpair {

namespace {

void require_positive(double value, const char* field) {
  if (!(std::isfinite(value) && value > 0.0))
    throw std::invalid_argument(std::string(field) + " must be finite and > 0");
}

}  // namespace

void validate(const OscillatorPair& params) {
  require_positive(params.m1, "m1");
  require_positive(params.m2, "m2");
  require_positive(params.k1, "k1");
  require_positive(params.k2, "k2");
  require_positive(params.hbar, "hbar");
  if (!(std::isfinite(params.kappa) && params.kappa >= 0.0))
    throw std::invalid_argument("kappa must be finite and >= 0");
}

}  // namespace oscpair
