#pragma once

namespace halfspin {

/// Physical scales. All numerics run in the dimensionless coordinate
/// rho = sqrt(gamma / hbar) * r; these constants only enter at the
/// conversion boundary.
class Constants {
 public:
  Constants() = default;
  /// Throws Error(InvalidConstants) unless every value is finite and positive.
  Constants(double hbar, double gamma, double omega = 1.0);

  double hbar() const noexcept { return hbar_; }
  /// Structure constant sqrt(alpha / beta).
  double gamma() const noexcept { return gamma_; }
  double omega() const noexcept { return omega_; }

  /// Physical length of one rho unit: sqrt(hbar / gamma).
  double length_scale() const noexcept;

 private:
  double hbar_ = 1.0;
  double gamma_ = 1.0;
  double omega_ = 1.0;
};

}  // namespace halfspin
