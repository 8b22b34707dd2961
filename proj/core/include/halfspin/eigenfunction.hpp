#pragma once

#include <complex>

#include "halfspin/constants.hpp"
#include "halfspin/radial_series.hpp"

namespace halfspin {

/// psi(r, theta) = C exp(i 2m theta) R(rho(r)),  rho = sqrt(gamma / hbar) r,
/// with C > 0 fixed so that the integral of |psi|^2 r dr dtheta is 1.
///
/// The angular factor carries no 1/hbar so that S3 psi = hbar m psi holds
/// for any hbar; at hbar = 1 it coincides with exp(i 2m theta / hbar).
class Eigenfunction {
 public:
  Eigenfunction(RadialSeries series, Constants constants);

  const RadialSeries& series() const noexcept { return series_; }
  const QuantumNumbers& quantum_numbers() const noexcept { return series_.quantum_numbers(); }
  const Constants& constants() const noexcept { return constants_; }
  double norm_constant() const noexcept { return norm_constant_; }

  double rho(double r) const noexcept;
  std::complex<double> operator()(double r, double theta) const;
  /// |psi(r, .)|^2, independent of theta.
  double density(double r) const;

 private:
  RadialSeries series_;
  Constants constants_;
  double norm_constant_;
};

Eigenfunction make_eigenfunction(const QuantumNumbers& qn, const Constants& constants = {});

std::complex<double> eval_psi(const Eigenfunction& eig, double r, double theta);

}  // namespace halfspin
