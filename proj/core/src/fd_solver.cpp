#include "halfspin/fd_solver.hpp"

#include <cmath>
#include <string>

#include <lapacke.h>

#include "halfspin/error.hpp"
#include "halfspin/quadrature.hpp"

namespace halfspin {

std::vector<FdEigenpair> fd_eigensolve(HalfInteger abs_m, const RadialGrid& grid, int count) {
  const int n = grid.interior_count();
  if (count < 1 || count > n) {
    throw Error(ErrorCode::InvalidArgument,
                "count must be in [1, " + std::to_string(n) + "], got " + std::to_string(count));
  }
  const double h = grid.spacing();
  const double s = abs_m.abs().twice();
  const double centrifugal = s * s - 0.25;

  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> off(static_cast<std::size_t>(n), -1.0 / (h * h));
  for (int i = 0; i < n; ++i) {
    const double rho = grid.node(i + 1);
    diag[static_cast<std::size_t>(i)] = 2.0 / (h * h) + rho * rho + centrifugal / (rho * rho);
  }

  lapack_int found = 0;
  std::vector<double> values(static_cast<std::size_t>(n));
  std::vector<double> vectors(static_cast<std::size_t>(n) * static_cast<std::size_t>(count));
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(count));
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), off.data(),
                                         0.0, 0.0, 1, count, 0.0, &found, values.data(),
                                         vectors.data(), n, support.data());
  if (info != 0 || found != count) {
    throw Error(ErrorCode::InvalidArgument,
                "tridiagonal eigensolve failed (info=" + std::to_string(info) + ")");
  }

  std::vector<FdEigenpair> pairs(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    auto& pair = pairs[static_cast<std::size_t>(k)];
    pair.lambda = 0.5 * values[static_cast<std::size_t>(k)];
    const auto first = vectors.begin() + static_cast<std::ptrdiff_t>(k) * n;
    pair.u.assign(first, first + n);
    double norm = 0.0;
    for (double v : pair.u) norm += v * v;
    norm = std::sqrt(norm * h);
    for (double& v : pair.u) v /= norm;
  }
  return pairs;
}

double series_fd_deviation(const RadialSeries& series, const RadialGrid& grid,
                           std::span<const double> fd_u) {
  if (static_cast<int>(fd_u.size()) != grid.interior_count()) {
    throw Error(ErrorCode::InvalidArgument, "FD vector does not match grid");
  }
  const double scale = 1.0 / std::sqrt(quadrature_norm(series));
  std::vector<double> analytic(fd_u.size());
  std::vector<double> numeric(fd_u.size());
  double overlap = 0.0;
  for (std::size_t i = 0; i < fd_u.size(); ++i) {
    const double rho = grid.node(static_cast<int>(i) + 1);
    analytic[i] = scale * eval_radial(series, rho);
    numeric[i] = fd_u[i] / std::sqrt(rho);
    overlap += analytic[i] * numeric[i] * rho;
  }
  const double sign = overlap < 0.0 ? -1.0 : 1.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < fd_u.size(); ++i) {
    worst = std::max(worst, std::abs(analytic[i] - sign * numeric[i]));
  }
  return worst;
}

double compare_series_vs_fd(const QuantumNumbers& qn, const RadialGrid& grid) {
  if (!grid.covers(qn.lambda())) {
    throw Error(ErrorCode::InvalidGrid,
                "rho_max must be >= 2 sqrt(lambda) for lambda=" + std::to_string(qn.lambda()));
  }
  const int order = qn.radial_order();
  const auto pairs = fd_eigensolve(qn.abs_m(), grid, order + 1);
  return series_fd_deviation(recursion_coefficients(qn), grid,
                             pairs[static_cast<std::size_t>(order)].u);
}

}  // namespace halfspin
