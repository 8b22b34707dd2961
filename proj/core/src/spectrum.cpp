#include "halfspin/spectrum.hpp"

#include <string>

#include <json.hpp>

#include "halfspin/error.hpp"

namespace halfspin {

namespace {

bool terminates(int lambda, int twice_abs_m, Admissibility rule) {
  const int big_n = lambda - 1 - twice_abs_m;
  if (big_n < 0 || big_n % 2 != 0) return false;
  return rule == Admissibility::RelaxedIntegerM || twice_abs_m % 2 != 0;
}

std::vector<SpectrumRow> block(int lambda, Admissibility rule) {
  std::vector<SpectrumRow> rows;
  const int first = rule == Admissibility::HalfIntegral ? 1 : 0;
  const int step = rule == Admissibility::HalfIntegral ? 2 : 1;
  for (int twice = first; twice <= lambda - 1; twice += step) {
    SpectrumRow row;
    row.lambda = lambda;
    row.ell = HalfInteger::from_twice(lambda - 1);
    row.abs_m = HalfInteger::from_twice(twice);
    row.big_n = lambda - 1 - twice;
    row.terminating = terminates(lambda, twice, rule);
    row.multiplicity = row.terminating ? MultiplicityCell::unset() : MultiplicityCell::infinite();
    rows.push_back(row);
  }
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it->terminating) {
      it->multiplicity = MultiplicityCell::finite(lambda);
      break;
    }
  }
  return rows;
}

}  // namespace

std::vector<SpectrumRow> enumerate_table(int lambda_max, Admissibility rule) {
  if (lambda_max < 2) {
    throw Error(ErrorCode::BadBound,
                "lambda_max must be >= 2, got " + std::to_string(lambda_max));
  }
  std::vector<SpectrumRow> rows;
  const int first = rule == Admissibility::HalfIntegral ? 2 : 1;
  for (int lambda = first; lambda <= lambda_max; ++lambda) {
    auto b = block(lambda, rule);
    rows.insert(rows.end(), b.begin(), b.end());
  }
  return rows;
}

int multiplicity(HalfInteger ell) {
  if (ell.twice() <= 0) {
    throw Error(ErrorCode::InvalidArgument, "ell must be positive, got " + ell.str());
  }
  if (!ell.is_half_integral()) {
    throw Error(ErrorCode::IntegerEll,
                "ell=" + ell.str() + " is an integer; no terminating solutions exist");
  }
  return ell.twice() + 1;
}

int lambda_min(Admissibility rule) {
  constexpr int kSearchLimit = 64;
  for (int bound = 2; bound <= kSearchLimit; bound *= 2) {
    for (const auto& row : enumerate_table(bound, rule)) {
      if (row.terminating) return row.lambda;
    }
  }
  throw Error(ErrorCode::BadBound, "no terminating row below lambda=64");
}

double e_min(const Constants& constants) {
  return lambda_min() * constants.hbar() * constants.omega();
}

std::string table_to_json(std::span<const SpectrumRow> rows) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json item;
    item["lambda"] = row.lambda;
    item["ell_times2"] = row.ell.twice();
    item["absM_times2"] = row.abs_m.twice();
    item["bigN"] = row.big_n;
    switch (row.multiplicity.kind) {
      case MultiplicityCell::Kind::Unset: item["multiplicity"] = nullptr; break;
      case MultiplicityCell::Kind::Finite: item["multiplicity"] = row.multiplicity.value; break;
      case MultiplicityCell::Kind::Infinite: item["multiplicity"] = "inf"; break;
    }
    list.push_back(std::move(item));
  }
  return list.dump(2) + "\n";
}

std::vector<SpectrumRow> table_from_json(std::string_view text) {
  std::vector<SpectrumRow> rows;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw Error(ErrorCode::InvalidArgument, "table JSON must be a list");
    for (const auto& item : doc) {
      SpectrumRow row;
      row.lambda = item.at("lambda").get<int>();
      row.ell = HalfInteger::from_twice(item.at("ell_times2").get<int>());
      row.abs_m = HalfInteger::from_twice(item.at("absM_times2").get<int>());
      const auto& n = item.at("bigN");
      row.big_n = n.is_null() ? row.lambda - 1 - row.abs_m.twice() : n.get<int>();
      const auto& mult = item.at("multiplicity");
      if (mult.is_null()) {
        row.multiplicity = MultiplicityCell::unset();
      } else if (mult.is_string()) {
        if (mult.get<std::string>() != "inf") {
          throw Error(ErrorCode::InvalidArgument, "multiplicity string must be \"inf\"");
        }
        row.multiplicity = MultiplicityCell::infinite();
      } else {
        row.multiplicity = MultiplicityCell::finite(mult.get<int>());
      }
      row.terminating = row.multiplicity.kind != MultiplicityCell::Kind::Infinite;
      rows.push_back(row);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed table JSON: ") + e.what());
  }
  return rows;
}

}  // namespace halfspin
