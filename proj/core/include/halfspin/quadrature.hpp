#pragma once

#include "halfspin/constants.hpp"
#include "halfspin/quantum_numbers.hpp"
#include "halfspin/radial_series.hpp"

namespace halfspin {

/// Relative size of the neglected Gaussian tail beyond the integration cutoff.
inline constexpr double kTailTolerance = 1e-14;

/// Integral of R(rho)^2 rho^power over [0, inf) by adaptive Gauss-Kronrod
/// on [0, rho_cut], where rho_cut is grown until an upper bound on the tail
/// (upper incomplete gamma functions of the expanded integrand) drops below
/// kTailTolerance of the integral. Requires power >= 0.
double radial_moment(const RadialSeries& series, int power);

/// Upper bound on the integral of |R(rho)^2 rho^power| over [cut, inf).
double radial_tail_bound(const RadialSeries& series, int power, double cut);

/// Dimensionless norm: integral of R^2 rho d rho.
double quadrature_norm(const RadialSeries& series);

/// Integral of R(rho(r))^2 r dr in physical units; (hbar / gamma) times the
/// dimensionless norm.
double physical_norm(const RadialSeries& series, const Constants& constants);

/// First moment <rho> of the density in rho units.
double mean_rho(const QuantumNumbers& qn);

/// <r> in physical units: sqrt(hbar / gamma) * <rho>.
double mean_radius(const QuantumNumbers& qn, const Constants& constants);

}  // namespace halfspin
