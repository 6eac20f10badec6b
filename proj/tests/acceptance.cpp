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

// Acceptance suite: one PASS/FAIL line per criterion, exact rational
// comparisons throughout. Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "boolos/probability.hpp"
#include "boolos/search.hpp"
#include "boolos/session.hpp"
#include "boolos/strategy.hpp"
#include "test_support.hpp"

using namespace boolos;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

const Question kSelf = Question::answer_means_no();

Outcome counting() {
  bool ok = counting_bound(6, 2, 1) && counting_bound(6, 2, 2) &&
            !counting_bound(6, 2, 3);
  return {ok, "6 scenarios vs 2, 4, 8 reply sequences"};
}

Outcome impossibility() {
  Prior uniform = uniform_prior();
  SearchResult r1 = exhaustive_search(1, uniform);
  SearchResult r2 = exhaustive_search(2, uniform);
  bool ok = !r1.certain_solver_exists && !r2.certain_solver_exists;
  return {ok, "depth 1: " + std::to_string(r1.explored_classes) +
                  " classes, depth 2: " + std::to_string(r2.explored_classes) +
                  " classes, no certain solver"};
}

Outcome existence() {
  Prior uniform = uniform_prior();
  StrategyTree t = builtin_three_question();
  bool valid = !validate(t, uniform);
  Rational p = valid ? success_probability(t, uniform) : Rational(0);
  bool ok = valid && is_certain_solver(t, uniform) && p == 1 &&
            testing::reference_success(t) == 1;
  return {ok, "success " + format_rational(p)};
}

Outcome self_reference() {
  bool ok = true;
  for (const World& w : all_worlds()) {
    for (God g : kGods) {
      ok = ok && answer_set(kSelf, w, g, Mode::Truthful).empty() &&
           answer_set(kSelf, w, g, Mode::Lying) == AnswerSet::both();
    }
  }
  BeliefState uniform(uniform_prior());
  for (God g : kGods) ok = ok && !askable(kSelf, g, uniform);
  return {ok, "truthful {} and lying {Da, Ja} in all 12 worlds; not askable first"};
}

Outcome first_step() {
  auto [h, t] = first_step_admissibility(kSelf);
  bool ok = h == make_rational(1, 6) && t == make_rational(1, 3);
  return {ok, "(" + format_rational(h) + ", " + format_rational(t) + ")"};
}

Outcome constants() {
  bool ok = paper_claimed(0) == make_rational(1, 6) &&
            paper_claimed(1) == make_rational(1, 6) &&
            paper_claimed(2) == make_rational(1, 3);
  // Each term rebuilt from its factors.
  std::vector<Rational> one = {make_rational(1, 3) * make_rational(1, 2),
                               make_rational(2, 3) * make_rational(1, 4)};
  std::vector<Rational> two = {make_rational(1, 3) * 1,
                               make_rational(2, 3) * 1 * make_rational(1, 2)};
  ok = ok && paper_case_terms(1) == one && paper_case_terms(2) == two &&
       one[0] == make_rational(1, 6) && one[1] == make_rational(1, 6) &&
       two[0] == make_rational(1, 3) && two[1] == make_rational(1, 3);
  return {ok, "claimed 1/6, 1/6, 1/3; case terms [1/6, 1/6] and [1/3, 1/3]"};
}

Outcome zero_questions() {
  Rational v = optimal_success(0, uniform_prior());
  return {v == make_rational(1, 6), format_rational(v)};
}

Outcome one_two_questions() {
  Prior uniform = uniform_prior();
  Rational v1 = optimal_success(1, uniform);
  Rational v2 = optimal_success(2, uniform);
  Rational explicit_tree = success_probability(builtin_one_question(), uniform);
  bool ok = v1 <= make_rational(2, 6) && v2 <= make_rational(4, 6) &&
            explicit_tree == make_rational(1, 3) && v1 >= explicit_tree && v2 >= v1;

  Theorem2Report r = theorem2_report(uniform);
  ok = ok && r.rows.size() == 3;
  for (const auto& row : r.rows) {
    Rational sum = 0;
    for (const auto& t : row.paper_case_terms) sum += t;
    if (row.k == 0) sum = row.paper_claimed;
    ok = ok && row.claimed_agrees == (row.engine_optimum == row.paper_claimed) &&
         row.case_sum_agrees == (row.engine_optimum == sum);
  }
  std::string text = format_table(r);
  ok = ok && text.find(format_rational(v2)) != std::string::npos;
  return {ok, "engine 1/6, " + format_rational(v1) + ", " + format_rational(v2) +
                  " beside claimed 1/6, 1/6, 1/3"};
}

Outcome rabern() {
  bool ok = true;
  for (const World& w : all_worlds()) {
    God random = god_with_role(w.scenario, Role::Random);
    God truthful = god_with_role(w.scenario, Role::True);
    for (Mode m : kModes) {
      ok = ok && admissible(kSelf, w, random, m, RandomVariant::RabernUniform);
    }
    ok = ok && !admissible(kSelf, w, truthful, Mode::Truthful,
                           RandomVariant::RabernUniform);
  }
  return {ok, "Random admissible on heads and tails; True still inadmissible"};
}

// The literal question text, checked as stated.
Outcome embedded(const std::function<Question(const Question&)>& form,
                 std::uint64_t seed) {
  testing::QuestionGenerator gen(seed, /*self_referential=*/false);
  int failures = 0, trials = 0;
  std::string first;
  while (trials < 1000) {
    Question p = gen.next(3);
    World w = gen.world();
    God g = gen.god();
    Role r = w.role(g);
    if (r == Role::Random) continue;
    ++trials;
    Question q = form(p);
    AnswerSet set = answer_set(q, w, g, speaking_mode(r, Coin::Heads));
    Answer expected = evaluate(p, w, g) ? Answer::Da : Answer::Ja;
    if (set != AnswerSet::only(expected)) {
      if (failures++ == 0) {
        first = "e.g. \"" + print(q) + "\" to " + to_string(g) + " (" +
                to_string(r) + ") in " + w.label() + " gives " + set.str();
      }
    }
  }
  std::string detail = std::to_string(trials - failures) + "/1000 agree";
  if (failures) detail += "; " + first;
  return {failures == 0, detail};
}

Outcome duality() {
  testing::QuestionGenerator gen(1011, /*self_referential=*/true);
  int self_ref = 0;
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    Question q = gen.next(4);
    if (is_self_referential(q)) ++self_ref;
    World w = gen.world();
    God g = gen.god();
    ok = ok && answer_set(negate(q), w, g, Mode::Truthful) ==
                   answer_set(q, w, g, Mode::Lying);
  }
  ok = ok && self_ref > 0;
  return {ok, "1000 triples, " + std::to_string(self_ref) + " self-referential"};
}

Outcome determinism() {
  const std::string script =
      "ask A: da means yes iff (you are True iff B is Random)\n"
      "ask C: you answer no-word\n"
      "ask B: da means yes iff true\n"
      "ask C: A is Random\n"
      "guess S3\n";
  auto run = [&](std::uint64_t seed) {
    SessionConfig cfg;
    cfg.seed = seed;
    std::istringstream in(script);
    std::ostringstream out;
    SessionTranscript t = run_session(cfg, in, out);
    return out.str() + format_text(t) + to_json(t).dump();
  };
  bool ok = true;
  for (std::uint64_t seed : {1ull, 42ull, 2026ull}) ok = ok && run(seed) == run(seed);

  Prior uniform = uniform_prior();
  auto a = to_json(exhaustive_search(2, uniform)).dump();
  auto b = to_json(exhaustive_search(2, uniform)).dump();
  ok = ok && a == b;
  return {ok, "transcripts and depth-2 witnesses identical across runs"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"counting bound", counting},
      {"no certain solver with one or two questions", impossibility},
      {"built-in three-question solver is certain", existence},
      {"self-referential question admissibility", self_reference},
      {"first-step admissibility chances", first_step},
      {"published constants", constants},
      {"zero-question optimum", zero_questions},
      {"one- and two-question optima", one_two_questions},
      {"uniform Random variant contrast", rabern},
      {"embedded question \"da means yes iff p\"",
       [] {
         return embedded(
             [](const Question& p) { return iff(Question::da_means_yes(), p); },
             1010);
       }},
      {"negation duality", duality},
      {"determinism", determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::printf("%s %2zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].name, o.detail.c_str());
  }

  // Companion to criterion 10, informational only.
  Outcome companion = embedded(
      [](const Question& p) {
        return iff(Question::da_means_yes(), iff(Question::you_are(Role::True), p));
      },
      1010);
  std::printf("INFO    \"da means yes iff (you are True iff p)\": %s %s\n",
              companion.passed ? "holds," : "fails,", companion.detail.c_str());

  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
