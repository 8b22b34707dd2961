#include "halfspin/eigenfunction.hpp"

#include <cmath>
#include <numbers>

#include "halfspin/quadrature.hpp"

namespace halfspin {

Eigenfunction::Eigenfunction(RadialSeries series, Constants constants)
    : series_(std::move(series)), constants_(constants) {
  const double radial = physical_norm(series_, constants_);
  norm_constant_ = 1.0 / std::sqrt(2.0 * std::numbers::pi * radial);
}

double Eigenfunction::rho(double r) const noexcept { return r / constants_.length_scale(); }

std::complex<double> Eigenfunction::operator()(double r, double theta) const {
  const double phase = quantum_numbers().m().twice() * theta;
  return norm_constant_ * eval_radial(series_, rho(r)) * std::polar(1.0, phase);
}

double Eigenfunction::density(double r) const {
  const double amplitude = norm_constant_ * eval_radial(series_, rho(r));
  return amplitude * amplitude;
}

Eigenfunction make_eigenfunction(const QuantumNumbers& qn, const Constants& constants) {
  return Eigenfunction(recursion_coefficients(qn), constants);
}

std::complex<double> eval_psi(const Eigenfunction& eig, double r, double theta) {
  return eig(r, theta);
}

}  // namespace halfspin
