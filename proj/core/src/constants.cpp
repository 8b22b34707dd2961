#include "halfspin/constants.hpp"

#include <cmath>
#include <string>

#include "halfspin/error.hpp"

namespace halfspin {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw Error(ErrorCode::InvalidConstants,
                std::string(name) + " must be finite and positive, got " +
                    std::to_string(value));
  }
}

}  // namespace

Constants::Constants(double hbar, double gamma, double omega)
    : hbar_(hbar), gamma_(gamma), omega_(omega) {
  require_positive(hbar, "hbar");
  require_positive(gamma, "gamma");
  require_positive(omega, "omega");
}

double Constants::length_scale() const noexcept { return std::sqrt(hbar_ / gamma_); }

}  // namespace halfspin
