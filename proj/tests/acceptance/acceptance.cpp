// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "halfspin/halfspin.hpp"
#include "support/oracles.hpp"

using namespace halfspin;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;
  std::function<Outcome()> run;
};

HalfInteger half(int twice) { return HalfInteger::from_twice(twice); }

std::vector<QuantumNumbers> all_valid(int lambda_max) {
  std::vector<QuantumNumbers> out;
  for (int lambda = 2; lambda <= lambda_max; lambda += 2) {
    for (int twice = -(lambda - 1); twice <= lambda - 1; twice += 2) {
      out.push_back(validate(lambda, half(twice)));
    }
  }
  return out;
}

std::string num(double v) { return format_real(v); }

std::string tag(const QuantumNumbers& qn) {
  return "lambda=" + std::to_string(qn.lambda()) + " 2m=" + std::to_string(qn.m().twice());
}

nlohmann::json golden() {
  std::ifstream in(HALFSPIN_GOLDEN_TABLE);
  return nlohmann::json::parse(in);
}

Outcome table_reproduction() {
  Outcome out;
  const auto rows = enumerate_table(10);
  const auto gold = golden();
  out.require(rows.size() == gold.size(), "row count " + std::to_string(rows.size()) + " vs " +
                                              std::to_string(gold.size()));
  int terminating = 0;
  int infinite = 0;
  for (std::size_t i = 0; i < std::min(rows.size(), gold.size()); ++i) {
    const auto& r = rows[i];
    const auto& g = gold[i];
    const std::string at = "row " + std::to_string(i);
    out.require(r.lambda == g["lambda"].get<int>(), at + " lambda");
    out.require(r.ell.twice() == g["ell_times2"].get<int>(), at + " ell");
    out.require(r.abs_m.twice() == g["absM_times2"].get<int>(), at + " |m|");
    out.require(r.big_n == g["bigN"].get<int>(), at + " N");
    const auto& mult = g["multiplicity"];
    if (mult.is_null()) {
      out.require(r.terminating && r.multiplicity.kind == MultiplicityCell::Kind::Unset,
                  at + " multiplicity blank");
    } else if (mult.is_string()) {
      out.require(!r.terminating && r.multiplicity.kind == MultiplicityCell::Kind::Infinite,
                  at + " multiplicity inf");
    } else {
      out.require(r.multiplicity == MultiplicityCell::finite(mult.get<int>()),
                  at + " multiplicity value");
    }
    terminating += r.terminating ? 1 : 0;
    infinite += r.multiplicity.kind == MultiplicityCell::Kind::Infinite ? 1 : 0;
    out.require(r.terminating == (r.lambda % 2 == 0), at + " termination flag");
  }
  out.require(terminating == 15 && infinite == 10, "terminating/infinite counts");
  if (out.pass) {
    out.detail = std::to_string(rows.size()) + " rows match golden (" +
                 std::to_string(terminating) + " terminating, " + std::to_string(infinite) +
                 " infinite)";
  }
  return out;
}

Outcome mean_radius_closed_form() {
  Outcome out;
  const auto qn = validate(2, half(1));
  const double closed = 3.0 * std::sqrt(std::numbers::pi) / 4.0;
  const double value = mean_radius(qn, Constants(1.0, 1.0));
  const double rel = std::abs(value - closed) / closed;
  out.require(rel < 1e-9, "relative deviation " + num(rel));
  const double ratio = mean_radius(qn, Constants(1.0, 1.0)) / mean_radius(qn, Constants(1.0, 16.0));
  out.require(std::abs(ratio - 4.0) < 1e-10, "gamma ratio " + num(ratio));
  if (out.pass) {
    out.detail = "<r>=" + num(value) + " rel.dev=" + num(rel) + " ratio(1,16)=" + num(ratio);
  }
  return out;
}

Outcome operator_identity() {
  Outcome out;
  double worst = 0.0;
  for (double gamma : {0.5, 1.0, 2.0}) {
    const auto ops = OperatorSet::build(8, Constants(1.0, gamma));
    const double defect = verify_identity(ops);
    worst = std::max(worst, defect);
    out.require(defect < 1e-10, "gamma=" + num(gamma) + " defect " + num(defect));
  }
  if (out.pass) out.detail = "max interior defect " + num(worst) + " hbar^2";
  return out;
}

Outcome eigenvalue_relation() {
  Outcome out;
  // (lambda, |2m|) pairs with their multiplicity from the golden terminating rows.
  std::map<int, std::multiset<int>> expected;
  for (const auto& g : golden()) {
    const int lambda = g["lambda"].get<int>();
    if (lambda % 2 != 0 || lambda > 6) continue;
    expected[lambda].insert(g["absM_times2"].get<int>());
    expected[lambda].insert(g["absM_times2"].get<int>());
  }
  double worst = 0.0;
  for (double gamma : {0.5, 1.0, 2.0}) {
    const auto pairs = joint_spectrum(OperatorSet::build(8, Constants(1.0, gamma)));
    std::map<int, std::multiset<int>> found;
    for (const auto& p : pairs) {
      const double err = std::abs(p.s2 - (p.lambda * p.lambda - 1.0) / 4.0);
      worst = std::max(worst, err);
      out.require(err < 1e-9 && p.s2_residual < 1e-9,
                  "gamma=" + num(gamma) + " lambda=" + num(p.lambda) + " m=" + num(p.m));
      const int twice_m = static_cast<int>(std::lround(2.0 * p.m));
      const int lambda = static_cast<int>(std::lround(p.lambda));
      if (twice_m % 2 != 0 && lambda <= 6) found[lambda].insert(std::abs(twice_m));
    }
    out.require(found == expected, "odd-2m content differs at gamma=" + num(gamma));
  }
  if (out.pass) out.detail = "max |s2-(lambda^2-1)/4| " + num(worst) + "; odd-2m sectors match";
  return out;
}

Outcome fd_convergence() {
  Outcome out;
  const auto coarse = fd_eigensolve(half(1), RadialGrid(12.0, 2000), 3);
  const auto fine = fd_eigensolve(half(1), RadialGrid(12.0, 4000), 3);
  double worst = 0.0;
  double min_ratio = 1e300;
  double max_ratio = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double exact = 2.0 + 2.0 * k;
    const double e1 = std::abs(coarse[k].lambda - exact);
    const double e2 = std::abs(fine[k].lambda - exact);
    worst = std::max(worst, e1);
    out.require(e1 < 1e-3, "level " + std::to_string(k) + " error " + num(e1));
    const double ratio = e1 / e2;
    min_ratio = std::min(min_ratio, ratio);
    max_ratio = std::max(max_ratio, ratio);
    out.require(ratio > 3.5 && ratio < 4.5, "level " + std::to_string(k) + " ratio " + num(ratio));
  }
  if (out.pass) {
    out.detail = "max error " + num(worst) + ", refinement ratio in [" + num(min_ratio) + ", " +
                 num(max_ratio) + "]";
  }
  return out;
}

Outcome series_oracle_agreement() {
  Outcome out;
  const auto grid = RadialGrid::reference();
  double worst_laguerre = 0.0;
  double worst_fd = 0.0;
  for (const auto& qn : all_valid(10)) {
    const auto s = recursion_coefficients(qn);
    // Fit the constant on the first sample, then check every other one.
    double c = 0.0;
    double largest = 0.0;
    double defect = 0.0;
    for (int i = 1; i <= 400; ++i) {
      const double rho = 0.02 * i;
      const double a = eval_radial(s, rho);
      const double b = laguerre_oracle(qn, rho);
      if (i == 1) c = a / b;
      largest = std::max(largest, std::abs(a));
      defect = std::max(defect, std::abs(a - c * b));
    }
    worst_laguerre = std::max(worst_laguerre, defect / largest);
    out.require(defect < 1e-12 * largest, tag(qn) + " laguerre " + num(defect / largest));
    const double dev = compare_series_vs_fd(qn, grid);
    worst_fd = std::max(worst_fd, dev);
    out.require(dev < 1e-3, tag(qn) + " fd deviation " + num(dev));
  }
  if (out.pass) {
    out.detail = "laguerre rel " + num(worst_laguerre) + ", fd pointwise " + num(worst_fd);
  }
  return out;
}

Outcome termination_and_parity() {
  Outcome out;
  for (const auto& qn : all_valid(40)) {
    if (qn.m().twice() < 0) continue;
    const auto series = recursion_coefficients(qn);
    const auto& exact = series.exact_coefficients();
    out.require(series.next_coefficient() == 0, tag(qn) + " a_{N+2} != 0");
    const int s = qn.exponent();
    const int count = static_cast<int>(exact.size()) + 1;
    const auto even = testing::frobenius_terms(qn.lambda(), s, s, 0, count);
    const auto odd = testing::frobenius_terms(qn.lambda(), s, s - 1, 1, count);
    for (int k = 0; k < count; ++k) {
      out.require(even[k].power == odd[k].power && even[k].coeff == odd[k].coeff,
                  tag(qn) + " parity branches differ");
      if (k < count - 1) out.require(even[k].coeff == exact[k], tag(qn) + " coefficient");
    }
  }
  double worst_gap = 0.0;
  for (int lambda = 3; lambda <= 39; lambda += 2) {
    for (int twice = 1; twice <= lambda - 2; twice += 2) {
      const auto c = nonterminating_prefix_exact(lambda, half(twice), 101);
      const bool nonzero = std::none_of(c.begin(), c.end(), [](const Rational& a) { return a == 0; });
      out.require(nonzero, "zero coefficient at lambda=" + std::to_string(lambda));
      if (lambda > 9) continue;
      const double ratio = static_cast<double>(c[100] / c[99]);
      const double gap = std::abs(ratio - 0.01) / 0.01;
      worst_gap = std::max(worst_gap, gap);
      out.require(gap < 0.1, "lambda=" + std::to_string(lambda) + " ratio gap " + num(gap));
    }
  }
  if (out.pass) {
    out.detail = "a_{N+2}=0 to lambda=40; branches equal; ratio gap (table odd rows) " +
                 num(worst_gap);
  }
  return out;
}

Outcome ring_structure() {
  Outcome out;
  const auto grid = RadialGrid::reference();
  for (const auto& qn : all_valid(10)) {
    const auto p = density_profile(qn, {}, grid);
    const int expected = (qn.ell().twice() - qn.abs_m().twice()) / 2 + 1;
    out.require(p.ring_count == expected, tag(qn) + " rings " + std::to_string(p.ring_count));
    out.require(p.samples.front().density == 0.0, tag(qn) + " density(0)");
  }
  const double inner = density_profile(validate(2, half(1)), {}, grid).peak_radii.front();
  const double outer = density_profile(validate(8, half(7)), {}, grid).peak_radii.front();
  out.require(outer > inner, "peak radius ordering");
  if (out.pass) {
    out.detail = "30 states; peak(7/2,7/2)=" + num(outer) + " > peak(1/2,1/2)=" + num(inner);
  }
  return out;
}

Outcome spectral_gap() {
  Outcome out;
  const int strict = lambda_min();
  const int relaxed = lambda_min(Admissibility::RelaxedIntegerM);
  const double e = e_min(Constants(1.0, 1.0, 1.0));
  out.require(strict == 2, "lambda_min " + std::to_string(strict));
  out.require(e == 2.0, "e_min " + num(e));
  out.require(relaxed == 1, "relaxed lambda_min " + std::to_string(relaxed));
  if (out.pass) {
    out.detail = "lambda_min=2, e_min=" + num(e) + ", relaxed lambda_min=" + std::to_string(relaxed);
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Spectrum table reproduction", 1.0, table_reproduction},
      {2, "Mean radius closed form", 1.0, mean_radius_closed_form},
      {3, "Operator identity", 5.0, operator_identity},
      {4, "Eigenvalue relation", 5.0, eigenvalue_relation},
      {5, "FD oracle convergence", 10.0, fd_convergence},
      {6, "Series-oracle agreement", 10.0, series_oracle_agreement},
      {7, "Termination and parity", 10.0, termination_and_parity},
      {8, "Ring structure", 10.0, ring_structure},
      {9, "Spectral gap", 1.0, spectral_gap},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.time_limit) {
      outcome.pass = false;
      outcome.detail += " (over the " + num(c.time_limit) + " s limit)";
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("%s  [%d] %s: %s (%.3f s)\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), outcome.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
