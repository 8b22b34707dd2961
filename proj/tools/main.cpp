#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "commands.hpp"
#include "halfspin/error.hpp"

using namespace halfspin::cli;

namespace {

void add_format(CLI::App* cmd, RunConfig& config) {
  static const std::map<std::string, Format> formats{{"csv", Format::Csv},
                                                     {"json", Format::Json}};
  cmd->add_option("--format", config.format, "Output format: csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("-o,--output", config.output, "Write to this file instead of stdout");
}

void add_constants(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--gamma", config.gamma, "Oscillator constant gamma");
  cmd->add_option("--hbar", config.hbar, "Reduced Planck constant");
  cmd->add_option("--omega", config.omega, "Angular frequency");
}

void add_state(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--lambda", config.lambda, "Principal quantum number")->required();
  cmd->add_option("--m2", config.m2, "Twice the magnetic quantum number (odd)")->required();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  config.golden_path = HALFSPIN_GOLDEN_TABLE;

  CLI::App app{"Spectrum, eigenfunctions and numerical oracles for the half-spin oscillator"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "halfspin 0.1.0");

  auto* table = app.add_subcommand("table", "Enumerate the spectrum table");
  table->add_option("--lambda-max", config.lambda_max, "Largest lambda to enumerate");
  table->add_flag("--golden-check", config.golden_check,
                  "Compare with the golden table and exit 3 on mismatch");
  table->add_option("--golden", config.golden_path, "Golden table JSON file");
  add_constants(table, config);
  add_format(table, config);

  auto* eigfn = app.add_subcommand("eigfn", "Sample psi(r, theta) along a ray");
  add_state(eigfn, config);
  eigfn->add_option("--theta", config.theta, "Polar angle");
  eigfn->add_option("--samples", config.samples, "Number of radial samples");
  eigfn->add_option("--rho-max", config.rho_max, "Outer radius in rho units");
  eigfn->add_flag("--dimensionless", config.dimensionless, "Use hbar = gamma = 1");
  add_constants(eigfn, config);
  add_format(eigfn, config);

  auto* density = app.add_subcommand("density", "Radial probability density profile");
  add_state(density, config);
  density->add_option("--rho-max", config.rho_max, "Outer radius in rho units");
  density->add_option("--npoints", config.npoints, "Grid intervals");
  density->add_flag("--dimensionless", config.dimensionless, "Report rho and density in rho units");
  density->add_option("--sidecar", config.sidecar, "Where to write the JSON summary");
  add_constants(density, config);
  add_format(density, config);

  auto* radius = app.add_subcommand("radius", "Mean radius <r>");
  add_state(radius, config);
  radius->add_flag("--dimensionless", config.dimensionless, "Report <rho>");
  add_constants(radius, config);
  add_format(radius, config);

  auto* verify = app.add_subcommand("verify", "Matrix and finite-difference consistency checks");
  verify->add_option("--nmax", config.nmax, "Fock basis cutoff");
  verify->add_option("--gamma", config.gammas, "Values of gamma to check")->delimiter(',');
  verify->add_option("--hbar", config.hbar, "Reduced Planck constant");
  add_format(verify, config);

  auto* oracle = app.add_subcommand("oracle", "Finite-difference radial eigenvalues");
  oracle->add_option("--m2", config.m2, "Twice the magnetic quantum number (odd)");
  oracle->add_option("--count", config.count, "Number of levels");
  oracle->add_option("--rho-max", config.rho_max, "Outer radius in rho units");
  oracle->add_option("--npoints", config.npoints, "Grid intervals");
  add_format(oracle, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("InvalidArgument", e.what());
    return kExitInvalidInput;
  }

  try {
    if (*table) return cmd_table(config);
    if (*eigfn) return cmd_eigfn(config);
    if (*density) return cmd_density(config);
    if (*radius) return cmd_radius(config);
    if (*verify) return cmd_verify(config);
    if (*oracle) return cmd_oracle(config);
  } catch (const halfspin::Error& e) {
    report_error(halfspin::to_string(e.code()), e.what());
    return e.code() == halfspin::ErrorCode::DegeneracyResolutionFailed ? kExitVerificationFailed
                                                                       : kExitInvalidInput;
  } catch (const std::exception& e) {
    report_error("IoError", e.what());
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
