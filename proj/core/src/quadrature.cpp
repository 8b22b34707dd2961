#include "halfspin/quadrature.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "halfspin/error.hpp"

namespace halfspin {

namespace {

// R^2 rho^power = exp(-rho^2) * sum_k b_k rho^k.
std::map<int, double> expanded_integrand(const RadialSeries& series, int power) {
  const auto a = series.coefficients();
  const int s = series.exponent();
  std::map<int, double> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const int k = 2 * s + 2 * static_cast<int>(i + j) + power;
      terms[k] += a[i] * a[j];
    }
  }
  return terms;
}

double integrate_segment(const RadialSeries& series, int power, double lo, double hi) {
  using boost::math::quadrature::gauss_kronrod;
  auto f = [&](double rho) {
    const double r = eval_radial(series, rho);
    return r * r * std::pow(rho, power);
  };
  double error = 0.0;
  return gauss_kronrod<double, 61>::integrate(f, lo, hi, 8, 1e-14, &error);
}

}  // namespace

double radial_tail_bound(const RadialSeries& series, int power, double cut) {
  double bound = 0.0;
  for (const auto& [k, b] : expanded_integrand(series, power)) {
    bound += std::abs(b) * 0.5 * boost::math::tgamma(0.5 * (k + 1), cut * cut);
  }
  return bound;
}

double radial_moment(const RadialSeries& series, int power) {
  if (power < 0) {
    throw Error(ErrorCode::InvalidArgument, "moment power must be >= 0");
  }
  // Unit-width panels keep each Kronrod segment well resolved for the
  // oscillatory polynomial factor of high states.
  const double start = std::sqrt(2.0 * series.quantum_numbers().lambda() + power) + 2.0;
  double cut = 0.0;
  double total = 0.0;
  while (cut < start) {
    const double next = std::min(cut + 1.0, start);
    total += integrate_segment(series, power, cut, next);
    cut = next;
  }
  while (radial_tail_bound(series, power, cut) >= kTailTolerance * std::abs(total)) {
    total += integrate_segment(series, power, cut, cut + 1.0);
    cut += 1.0;
  }
  return total;
}

double quadrature_norm(const RadialSeries& series) { return radial_moment(series, 1); }

double physical_norm(const RadialSeries& series, const Constants& constants) {
  return constants.hbar() / constants.gamma() * quadrature_norm(series);
}

double mean_rho(const QuantumNumbers& qn) {
  const auto series = recursion_coefficients(qn);
  return radial_moment(series, 2) / radial_moment(series, 1);
}

double mean_radius(const QuantumNumbers& qn, const Constants& constants) {
  return constants.length_scale() * mean_rho(qn);
}

}  // namespace halfspin
