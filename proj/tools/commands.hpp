#pragma once

#include <optional>
#include <string>
#include <vector>

#include "output.hpp"

namespace halfspin::cli {

/// Flags shared by the subcommands. Only the fields a command reads matter.
struct RunConfig {
  int lambda = 2;
  int m2 = 1;
  int lambda_max = 10;
  double gamma = 1.0;
  double hbar = 1.0;
  double omega = 1.0;
  std::optional<double> rho_max;
  int npoints = 2000;
  Format format = Format::Csv;
  std::optional<std::string> output;
  bool dimensionless = false;

  // table
  bool golden_check = false;
  std::string golden_path;

  // eigfn
  double theta = 0.0;
  int samples = 200;

  // density
  std::optional<std::string> sidecar;

  // verify
  int nmax = 8;
  std::vector<double> gammas;

  // oracle
  int count = 3;
};

int cmd_table(const RunConfig& config);
int cmd_eigfn(const RunConfig& config);
int cmd_density(const RunConfig& config);
int cmd_radius(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_oracle(const RunConfig& config);

}  // namespace halfspin::cli
