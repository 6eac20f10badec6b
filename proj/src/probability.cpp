// Copyright 2026 The Boolos Engine Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boolos/probability.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace boolos {

Rational paper_claimed(int k) {
  switch (k) {
    case 0: return make_rational(1, 6);
    case 1: return make_rational(1, 6);
    case 2: return make_rational(1, 3);
  }
  throw std::out_of_range("published figures exist only for k = 0, 1, 2");
}

std::vector<Rational> paper_case_terms(int k) {
  const Rational third = make_rational(1, 3);
  const Rational two_thirds = make_rational(2, 3);
  const Rational half = make_rational(1, 2);
  const Rational quarter = make_rational(1, 4);
  const Rational one = 1;
  switch (k) {
    // Addressee Random, then addressee not Random.
    case 1: return {Rational(third * half), Rational(two_thirds * quarter)};
    case 2: return {Rational(third * one), Rational(two_thirds * one * half)};
  }
  throw std::out_of_range("published case products exist only for k = 1, 2");
}

std::pair<Rational, Rational> first_step_admissibility(const Question& q,
                                                       RandomVariant variant) {
  const Rational per_case = make_rational(1, 3 * kNumWorlds);
  Rational heads = 0, tails = 0;
  for (God g : kGods) {
    for (const World& w : all_worlds()) {
      Role r = w.role(g);
      if (admissible(q, w, g, speaking_mode(r, Coin::Heads), variant)) {
        heads += per_case;
      }
      if (admissible(q, w, g, speaking_mode(r, Coin::Tails), variant)) {
        tails += per_case;
      }
    }
  }
  const Rational coin = make_rational(1, 2);
  return {coin * heads, coin * tails};
}

Theorem2Report theorem2_report(const Prior& prior, RandomVariant variant,
                               const SearchConfig& config) {
  Theorem2Report report;
  for (int k = 0; k <= 2; ++k) {
    Theorem2Row row;
    row.k = k;
    row.paper_claimed = paper_claimed(k);
    if (k > 0) row.paper_case_terms = paper_case_terms(k);
    row.engine_optimum = optimal_success(k, prior, variant, config);
    row.claimed_agrees = row.engine_optimum == row.paper_claimed;
    Rational sum = 0;
    for (const auto& t : row.paper_case_terms) sum += t;
    if (k == 0) sum = row.paper_claimed;
    row.case_sum_agrees = row.engine_optimum == sum;
    report.rows.push_back(std::move(row));
  }
  return report;
}

nlohmann::ordered_json to_json(const Theorem2Report& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json j;
    j["k"] = row.k;
    j["paper_claimed"] = format_rational(row.paper_claimed);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : row.paper_case_terms) terms.push_back(format_rational(t));
    j["paper_case_terms"] = std::move(terms);
    j["engine_optimum"] = format_rational(row.engine_optimum);
    j["claimed_agrees"] = row.claimed_agrees;
    j["case_sum_agrees"] = row.case_sum_agrees;
    rows.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["rows"] = std::move(rows);
  return out;
}

std::string format_table(const Theorem2Report& r) {
  std::ostringstream out;
  auto yes_no = [](bool b) { return b ? "yes" : "NO"; };
  out << std::left << std::setw(3) << "k" << std::setw(10) << "claimed"
      << std::setw(18) << "case terms" << std::setw(10) << "case sum"
      << std::setw(10) << "engine" << std::setw(16) << "engine=claimed"
      << "engine=case sum\n";
  for (const auto& row : r.rows) {
    std::string terms, sum = "-";
    Rational total = 0;
    for (std::size_t i = 0; i < row.paper_case_terms.size(); ++i) {
      if (i) terms += " + ";
      terms += format_rational(row.paper_case_terms[i]);
      total += row.paper_case_terms[i];
    }
    if (terms.empty()) {
      terms = "-";
    } else {
      sum = format_rational(total);
    }
    out << std::setw(3) << row.k << std::setw(10)
        << format_rational(row.paper_claimed) << std::setw(18) << terms
        << std::setw(10) << sum << std::setw(10)
        << format_rational(row.engine_optimum) << std::setw(16)
        << yes_no(row.claimed_agrees)
        << (row.k == 0 ? "-" : yes_no(row.case_sum_agrees)) << "\n";
  }
  return out.str();
}

}  // namespace boolos
