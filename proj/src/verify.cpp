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

#include "boolos/verify.hpp"

#include <functional>
#include <sstream>

#include "boolos/belief.hpp"
#include "boolos/probability.hpp"
#include "boolos/strategy.hpp"

namespace boolos {

namespace {

CheckResult run_check(const std::string& name,
                      const std::function<bool(std::string&)>& body) {
  CheckResult r;
  r.name = name;
  try {
    r.passed = body(r.detail);
  } catch (const ResourceLimitError& e) {
    r.passed = false;
    r.resource_limited = true;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

// What the self-referential question does to a god of `role` speaking in
// `mode`: nothing survives a truthful speaker, both words survive a liar,
// and the uniform Random variant ignores the content.
AnswerSet expected_q_answers(Role role, Mode mode, RandomVariant variant) {
  if (role == Role::Random && variant == RandomVariant::RabernUniform) {
    return AnswerSet::both();
  }
  return mode == Mode::Truthful ? AnswerSet() : AnswerSet::both();
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyConfig& config) {
  std::vector<CheckResult> out;
  const Question q_self = parse("you answer no-word");

  out.push_back(run_check("counting bound", [](std::string& detail) {
    bool ok = counting_bound(6, 2, 1) && counting_bound(6, 2, 2) &&
              !counting_bound(6, 2, 3);
    detail = "2^1 < 6, 2^2 < 6, 2^3 >= 6";
    return ok;
  }));

  for (int depth : {1, 2}) {
    out.push_back(run_check(
        "no certain solver with " + std::to_string(depth) + " question" +
            (depth == 1 ? "" : "s"),
        [&](std::string& detail) {
          SearchResult r =
              exhaustive_search(depth, config.prior, config.variant, config.search);
          detail = "optimum " + format_rational(r.optimal_success) + ", " +
                   std::to_string(r.explored_classes) + " classes explored";
          return !r.certain_solver_exists;
        }));
  }

  out.push_back(run_check("built-in three-question solver", [&](std::string& detail) {
    StrategyTree t = builtin_three_question();
    auto v = validate(t, config.prior, config.variant);
    if (v) {
      detail = v->describe();
      return false;
    }
    Rational p = success_probability(t, config.prior, config.variant);
    bool certain = is_certain_solver(t, config.prior, config.variant);
    detail = "depth " + std::to_string(t.depth()) + ", success " +
             format_rational(p);
    return t.depth() == 3 && certain && p == 1;
  }));

  out.push_back(run_check("self-referential question admissibility",
                          [&](std::string& detail) {
    bool ok = true;
    std::ostringstream table;
    for (Role role : kRoles) {
      table << to_string(role) << ":";
      for (Coin coin : kCoins) {
        Mode mode = speaking_mode(role, coin);
        AnswerSet expected = expected_q_answers(role, mode, config.variant);
        std::optional<AnswerSet> seen;
        for (const World& w : all_worlds()) {
          AnswerSet got = answer_set(q_self, w, god_with_role(w.scenario, role),
                                     mode, config.variant);
          ok = ok && got == expected;
          seen = got;
        }
        table << " " << to_string(coin) << "=" << seen->str();
      }
      table << "; ";
    }
    BeliefState initial(config.prior);
    for (God g : kGods) {
      bool can_ask = askable(q_self, g, initial, config.variant);
      table << "askable first to " << to_string(g) << "="
            << (can_ask ? "yes" : "no") << " ";
      ok = ok && !can_ask;
    }
    detail = table.str();
    return ok;
  }));

  out.push_back(run_check("first-step admissibility chances", [&](std::string& detail) {
    auto [heads, tails] = first_step_admissibility(q_self, config.variant);
    detail = "heads " + format_rational(heads) + ", tails " +
             format_rational(tails);
    if (config.variant == RandomVariant::BoolosCoin) {
      return heads == make_rational(1, 6) && tails == make_rational(1, 3);
    }
    return heads == make_rational(1, 3) && tails == make_rational(1, 3);
  }));

  out.push_back(run_check("published constants", [](std::string& detail) {
    auto t1 = paper_case_terms(1);
    auto t2 = paper_case_terms(2);
    detail = "claimed 1/6, 1/6, 1/3; case terms [1/6, 1/6], [1/3, 1/3]";
    return paper_claimed(0) == make_rational(1, 6) &&
           paper_claimed(1) == make_rational(1, 6) &&
           paper_claimed(2) == make_rational(1, 3) && t1.size() == 2 &&
           t1[0] == make_rational(1, 6) && t1[1] == make_rational(1, 6) &&
           t2.size() == 2 && t2[0] == make_rational(1, 3) &&
           t2[1] == make_rational(1, 3);
  }));

  out.push_back(run_check("chance-of-success report", [&](std::string& detail) {
    Theorem2Report r = theorem2_report(config.prior, config.variant, config.search);
    const Rational top = config.prior.max_scenario_mass();
    bool ok = r.rows.size() == 3 && r.rows[0].engine_optimum == top &&
              r.rows[1].engine_optimum <= 2 * top &&
              r.rows[2].engine_optimum <= 4 * top &&
              r.rows[0].engine_optimum <= r.rows[1].engine_optimum &&
              r.rows[1].engine_optimum <= r.rows[2].engine_optimum;
    detail = "\n" + format_table(r);
    return ok;
  }));

  return out;
}

int verification_exit_code(const std::vector<CheckResult>& results) {
  bool failed = false, limited = false;
  for (const auto& r : results) {
    failed = failed || !r.passed;
    limited = limited || r.resource_limited;
  }
  if (limited) return 3;
  return failed ? 1 : 0;
}

nlohmann::ordered_json to_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["resource_limited"] = r.resource_limited;
    j["detail"] = r.detail;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["checks"] = std::move(checks);
  out["exit_code"] = verification_exit_code(results);
  return out;
}

std::string format_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : r.resource_limited ? "CAP  " : "FAIL ")
        << r.name << ": " << r.detail << "\n";
  }
  return out.str();
}

}  // namespace boolos
