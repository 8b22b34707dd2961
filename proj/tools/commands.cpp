#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "halfspin/halfspin.hpp"

namespace halfspin::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read golden file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string multiplicity_text(const MultiplicityCell& cell) {
  switch (cell.kind) {
    case MultiplicityCell::Kind::Finite: return std::to_string(cell.value);
    case MultiplicityCell::Kind::Infinite: return "inf";
    case MultiplicityCell::Kind::Unset: break;
  }
  return "";
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Constants constants_of(const RunConfig& config) {
  return Constants(config.hbar, config.gamma, config.omega);
}

QuantumNumbers quantum_numbers_of(const RunConfig& config) {
  return validate(config.lambda, HalfInteger::from_twice(config.m2));
}

double default_rho_max(int lambda) { return std::max(12.0, 3.0 * std::sqrt(lambda) + 3.0); }

Json header(const QuantumNumbers& qn) {
  Json doc;
  doc["schema_version"] = 1;
  doc["lambda"] = qn.lambda();
  doc["m2"] = qn.m().twice();
  doc["ell_times2"] = qn.ell().twice();
  doc["bigN"] = qn.big_n();
  return doc;
}

}  // namespace

int cmd_table(const RunConfig& config) {
  const auto rows = enumerate_table(config.lambda_max);
  std::string text;
  if (config.format == Format::Json) {
    Json doc;
    doc["schema_version"] = 1;
    doc["lambda_max"] = config.lambda_max;
    doc["lambda_min"] = lambda_min();
    doc["e_min"] = json_real(e_min(constants_of(config)));
    doc["rows"] = Json::parse(table_to_json(rows));
    text = dump(doc);
  } else {
    std::ostringstream out;
    out << "lambda,ell_times2,absM_times2,bigN,multiplicity\n";
    for (const auto& r : rows) {
      out << r.lambda << ',' << r.ell.twice() << ',' << r.abs_m.twice() << ',' << r.big_n << ','
          << multiplicity_text(r.multiplicity) << '\n';
    }
    text = out.str();
  }
  emit(config.output, text);

  if (config.golden_check) {
    auto golden = table_from_json(read_file(config.golden_path));
    const int golden_max = golden.empty() ? 0 : golden.back().lambda;
    const int upto = std::min(config.lambda_max, golden_max);
    std::vector<SpectrumRow> ours;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(ours),
                 [&](const SpectrumRow& r) { return r.lambda <= upto; });
    std::erase_if(golden, [&](const SpectrumRow& r) { return r.lambda > upto; });
    if (ours != golden) {
      report_error("GoldenMismatch", "enumeration differs from " + config.golden_path +
                                         " for lambda <= " + std::to_string(upto));
      return kExitGoldenMismatch;
    }
  }
  return kExitOk;
}

int cmd_eigfn(const RunConfig& config) {
  const auto qn = quantum_numbers_of(config);
  const Constants constants = config.dimensionless ? Constants() : constants_of(config);
  const auto eig = make_eigenfunction(qn, constants);
  const double r_max =
      config.rho_max.value_or(default_rho_max(qn.lambda())) * constants.length_scale();
  if (config.samples < 2) throw Error(ErrorCode::InvalidArgument, "--samples must be >= 2");
  const char* radius = config.dimensionless ? "rho" : "r";

  std::string text;
  if (config.format == Format::Json) {
    Json doc = header(qn);
    doc["exponent"] = qn.exponent();
    Json coeffs = Json::array();
    for (const auto& c : eig.series().exact_coefficients()) coeffs.push_back(c.str());
    doc["coefficients"] = coeffs;
    doc["norm_constant"] = json_real(eig.norm_constant());
    doc["theta"] = json_real(config.theta);
    Json samples = Json::array();
    for (int i = 0; i < config.samples; ++i) {
      const double r = r_max * i / (config.samples - 1);
      const auto psi = eig(r, config.theta);
      Json s;
      s[radius] = json_real(r);
      s["re"] = json_real(psi.real());
      s["im"] = json_real(psi.imag());
      s["density"] = json_real(std::norm(psi));
      samples.push_back(s);
    }
    doc["samples"] = samples;
    text = dump(doc);
  } else {
    std::ostringstream out;
    out << radius << ",re,im,density\n";
    for (int i = 0; i < config.samples; ++i) {
      const double r = r_max * i / (config.samples - 1);
      const auto psi = eig(r, config.theta);
      out << format_real(r) << ',' << format_real(psi.real()) << ',' << format_real(psi.imag())
          << ',' << format_real(std::norm(psi)) << '\n';
    }
    text = out.str();
  }
  emit(config.output, text);
  return kExitOk;
}

int cmd_density(const RunConfig& config) {
  const auto qn = quantum_numbers_of(config);
  const Constants constants = constants_of(config);
  const RadialGrid grid(config.rho_max.value_or(default_rho_max(qn.lambda())), config.npoints);
  const auto profile = density_profile(qn, constants, grid);

  // Dimensionless output uses the rho coordinate and a density normalized
  // over rho drho dtheta.
  const double length = config.dimensionless ? 1.0 : constants.length_scale();
  const double density_scale =
      config.dimensionless ? constants.hbar() / constants.gamma() : 1.0;
  const char* radius = config.dimensionless ? "rho" : "r";

  Json meta = header(qn);
  meta["units"] = config.dimensionless ? "dimensionless" : "physical";
  meta["ring_count"] = profile.ring_count;
  Json peaks = Json::array();
  for (double p : profile.peak_radii) peaks.push_back(json_real(p * length));
  meta["peak_radii"] = peaks;
  meta["norm_constant"] = json_real(profile.norm_constant * std::sqrt(density_scale));

  if (config.format == Format::Json) {
    Json samples = Json::array();
    for (const auto& s : profile.samples) {
      Json item;
      item[radius] = json_real(s.rho * length);
      item["density"] = json_real(s.density * density_scale);
      samples.push_back(item);
    }
    meta["samples"] = samples;
    emit(config.output, dump(meta));
    return kExitOk;
  }

  std::ostringstream out;
  out << radius << ",density\n";
  for (const auto& s : profile.samples) {
    out << format_real(s.rho * length) << ',' << format_real(s.density * density_scale) << '\n';
  }
  emit(config.output, out.str());

  std::optional<std::string> sidecar = config.sidecar;
  if (!sidecar && config.output && !config.output->empty() && *config.output != "-") {
    sidecar = *config.output + ".json";
  }
  if (sidecar) emit(sidecar, dump(meta));
  return kExitOk;
}

int cmd_radius(const RunConfig& config) {
  const auto qn = quantum_numbers_of(config);
  const Constants constants = constants_of(config);
  const double length = config.dimensionless ? 1.0 : constants.length_scale();
  const double value = mean_rho(qn) * length;
  std::optional<double> closed;
  if (qn.lambda() == 2) closed = 3.0 * std::sqrt(std::numbers::pi) / 4.0 * length;

  std::string text;
  if (config.format == Format::Json) {
    Json doc = header(qn);
    doc["gamma"] = json_real(constants.gamma());
    doc["hbar"] = json_real(constants.hbar());
    doc["units"] = config.dimensionless ? "dimensionless" : "physical";
    doc["mean_radius"] = json_real(value);
    doc["closed_form"] = closed ? json_real(*closed) : Json(nullptr);
    doc["relative_deviation"] =
        closed ? json_real(std::abs(value - *closed) / *closed) : Json(nullptr);
    text = dump(doc);
  } else {
    std::ostringstream out;
    out << "lambda,m2,gamma,hbar,mean_radius,closed_form,relative_deviation\n";
    out << qn.lambda() << ',' << qn.m().twice() << ',' << format_real(constants.gamma()) << ','
        << format_real(constants.hbar()) << ',' << format_real(value) << ',';
    if (closed) out << format_real(*closed) << ',' << format_real(std::abs(value - *closed) / *closed);
    else out << ',';
    out << '\n';
    text = out.str();
  }
  emit(config.output, text);
  return kExitOk;
}

namespace {

struct Check {
  std::string name;
  std::optional<double> gamma;
  double value;
  double tolerance;
  bool pass() const { return value < tolerance; }
};

std::vector<Check> operator_checks(int nmax, double gamma, double hbar) {
  const auto ops = OperatorSet::build(nmax, Constants(hbar, gamma));
  std::vector<Check> checks;
  checks.push_back({"hermiticity", gamma, hermiticity_defect(ops), 1e-12});
  checks.push_back({"s0_s3_commutator", gamma, commutator_defect(ops), 1e-12});
  checks.push_back({"s2_identity", gamma, verify_identity(ops), 1e-10 * hbar * hbar});

  const auto spectrum = s0_interior_spectrum(ops);
  double worst_s0 = 0.0;
  std::size_t k = 0;
  for (int n = 0; n <= nmax - 2; ++n) {
    for (int d = 0; d <= n && k < spectrum.size(); ++d, ++k) {
      worst_s0 = std::max(worst_s0, std::abs(spectrum[k] - (n + 1.0)) / (n + 1.0));
    }
  }
  if (k != spectrum.size()) worst_s0 = 1.0;
  checks.push_back({"s0_spectrum", gamma, worst_s0, 1e-10});

  const auto pairs = joint_spectrum(ops);
  double worst_s2 = 0.0;
  std::map<int, std::multiset<int>> odd_sectors;
  for (const auto& p : pairs) {
    worst_s2 = std::max(worst_s2, std::abs(p.s2 - (p.lambda * p.lambda - 1.0) / 4.0));
    const int twice_m = static_cast<int>(std::lround(2.0 * p.m));
    if (twice_m % 2 != 0) {
      odd_sectors[static_cast<int>(std::lround(p.lambda))].insert(std::abs(twice_m));
    }
  }
  checks.push_back({"s2_eigenvalue_relation", gamma, worst_s2, 1e-9});

  // Half-integral sectors against the terminating table rows.
  const int lambda_top = std::min(nmax - 1, 10);
  std::map<int, std::multiset<int>> table;
  if (lambda_top >= 2) {
    for (const auto& r : enumerate_table(lambda_top)) {
      if (!r.terminating) continue;
      table[r.lambda].insert(r.abs_m.twice());
      table[r.lambda].insert(r.abs_m.twice());
    }
  }
  std::erase_if(odd_sectors, [&](const auto& kv) { return kv.first > lambda_top; });
  checks.push_back({"half_integral_sectors_match_table", gamma, odd_sectors == table ? 0.0 : 1.0,
                    0.5});
  return checks;
}

}  // namespace

int cmd_verify(const RunConfig& config) {
  if (config.nmax < 4) {
    throw Error(ErrorCode::CutoffTooSmall,
                "verify needs nmax >= 4, got " + std::to_string(config.nmax));
  }
  std::vector<double> gammas = config.gammas.empty() ? std::vector<double>{config.gamma}
                                                     : config.gammas;
  std::vector<Check> checks;
  for (double gamma : gammas) {
    auto part = operator_checks(config.nmax, gamma, config.hbar);
    checks.insert(checks.end(), part.begin(), part.end());
  }

  const auto grid = RadialGrid::reference();
  const auto fd = fd_eigensolve(HalfInteger::from_twice(1), grid, 3);
  double worst_fd = 0.0;
  for (std::size_t k = 0; k < fd.size(); ++k) {
    worst_fd = std::max(worst_fd, std::abs(fd[k].lambda - (2.0 + 2.0 * k)));
  }
  checks.push_back({"fd_eigenvalues_half_spin", std::nullopt, worst_fd, 1e-3});
  double worst_dev = 0.0;
  for (int lambda = 2; lambda <= 10; lambda += 2) {
    for (int twice = 1; twice <= lambda - 1; twice += 2) {
      worst_dev = std::max(
          worst_dev, compare_series_vs_fd(validate(lambda, HalfInteger::from_twice(twice)), grid));
    }
  }
  checks.push_back({"series_vs_fd", std::nullopt, worst_dev, 1e-3});

  const bool all_pass =
      std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
  std::string text;
  if (config.format == Format::Json) {
    Json doc;
    doc["schema_version"] = 1;
    doc["nmax"] = config.nmax;
    Json list = Json::array();
    for (const auto& c : checks) {
      Json item;
      item["check"] = c.name;
      item["gamma"] = c.gamma ? json_real(*c.gamma) : Json(nullptr);
      item["value"] = json_real(c.value);
      item["tolerance"] = json_real(c.tolerance);
      item["pass"] = c.pass();
      list.push_back(item);
    }
    doc["checks"] = list;
    doc["all_pass"] = all_pass;
    text = dump(doc);
  } else {
    std::ostringstream out;
    out << "status,check,gamma,value,tolerance\n";
    for (const auto& c : checks) {
      out << (c.pass() ? "PASS" : "FAIL") << ',' << c.name << ','
          << (c.gamma ? format_real(*c.gamma) : std::string()) << ',' << format_real(c.value)
          << ',' << format_real(c.tolerance) << '\n';
    }
    text = out.str();
  }
  emit(config.output, text);
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_oracle(const RunConfig& config) {
  const HalfInteger m = HalfInteger::from_twice(config.m2);
  if (!m.is_half_integral()) {
    throw Error(ErrorCode::NotHalfInteger, "--m2 must be odd, got " + std::to_string(config.m2));
  }
  const RadialGrid grid(config.rho_max.value_or(12.0), config.npoints);
  const auto pairs = fd_eigensolve(m.abs(), grid, config.count);

  Json rows = Json::array();
  std::ostringstream out;
  out << "index,lambda_fd,lambda_exact,abs_error,series_fd_deviation\n";
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const int exact = 1 + m.abs().twice() + 2 * static_cast<int>(k);
    const auto qn = validate(exact, m);
    const double deviation = series_fd_deviation(recursion_coefficients(qn), grid, pairs[k].u);
    const double error = std::abs(pairs[k].lambda - exact);
    out << k << ',' << format_real(pairs[k].lambda) << ',' << exact << ',' << format_real(error)
        << ',' << format_real(deviation) << '\n';
    Json item;
    item["index"] = k;
    item["lambda_fd"] = json_real(pairs[k].lambda);
    item["lambda_exact"] = exact;
    item["abs_error"] = json_real(error);
    item["series_fd_deviation"] = json_real(deviation);
    rows.push_back(item);
  }
  if (config.format == Format::Json) {
    Json doc;
    doc["schema_version"] = 1;
    doc["m2"] = config.m2;
    doc["rho_max"] = json_real(grid.rho_max());
    doc["npoints"] = grid.npoints();
    doc["levels"] = rows;
    emit(config.output, dump(doc));
  } else {
    emit(config.output, out.str());
  }
  return kExitOk;
}

}  // namespace halfspin::cli
