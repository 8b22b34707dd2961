#include "halfspin/density.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include <Eigen/Dense>

#include "halfspin/eigenfunction.hpp"
#include "halfspin/error.hpp"
#include "halfspin/format.hpp"

namespace halfspin {

std::vector<double> radial_nodes(const QuantumNumbers& qn) {
  const int k = qn.radial_order();
  if (k == 0) return {};
  const double alpha = qn.exponent();
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(k, k);
  for (int j = 0; j < k; ++j) {
    jacobi(j, j) = 2.0 * j + alpha + 1.0;
    if (j + 1 < k) {
      const double b = std::sqrt((j + 1.0) * (j + 1.0 + alpha));
      jacobi(j, j + 1) = -b;
      jacobi(j + 1, j) = -b;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  std::vector<double> nodes;
  for (int j = 0; j < k; ++j) nodes.push_back(std::sqrt(solver.eigenvalues()(j)));
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

std::vector<std::size_t> local_maxima(std::span<const DensitySample> samples) {
  std::vector<std::size_t> peaks;
  if (samples.size() < 3) return peaks;
  double top = 0.0;
  for (const auto& s : samples) top = std::max(top, s.density);
  const double floor = kPeakFloor * top;
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const double d = samples[i].density;
    if (d > samples[i - 1].density && d > samples[i + 1].density && d > floor) {
      peaks.push_back(i);
    }
  }
  return peaks;
}

DensityProfile density_profile(const QuantumNumbers& qn, const Constants& constants,
                               const RadialGrid& grid) {
  if (!grid.covers(qn.lambda())) {
    throw Error(ErrorCode::InvalidGrid,
                "rho_max must be >= 2 sqrt(lambda) for lambda=" + std::to_string(qn.lambda()));
  }
  const auto nodes = radial_nodes(qn);
  double previous = 0.0;
  for (double node : nodes) {
    if (grid.spacing() > 0.5 * (node - previous)) {
      throw Error(ErrorCode::GridTooCoarse,
                  "spacing " + format_real(grid.spacing()) +
                      " cannot separate radial nodes (gap " + format_real(node - previous) + ")");
    }
    previous = node;
  }

  const auto eig = make_eigenfunction(qn, constants);
  const double scale = constants.length_scale();
  DensityProfile profile{qn, constants, eig.norm_constant(), {}, 0, {}};
  profile.samples.reserve(static_cast<std::size_t>(grid.npoints()) + 1);
  for (int i = 0; i <= grid.npoints(); ++i) {
    const double rho = grid.node(i);
    profile.samples.push_back({rho, eig.density(rho * scale)});
  }
  for (std::size_t i : local_maxima(profile.samples)) {
    profile.peak_radii.push_back(profile.samples[i].rho);
  }
  profile.ring_count = static_cast<int>(profile.peak_radii.size());
  return profile;
}

void write_csv(std::ostream& out, const DensityProfile& profile) {
  out << "rho,density\n";
  for (const auto& s : profile.samples) {
    out << format_real(s.rho) << ',' << format_real(s.density) << '\n';
  }
}

}  // namespace halfspin
