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

#include "boolos/strategy.hpp"

#include <algorithm>

namespace boolos {

StrategyTree StrategyTree::guess(Scenario s) {
  auto node = std::make_shared<Node>();
  node->scenario = s;
  return StrategyTree(std::move(node));
}

StrategyTree StrategyTree::ask(God addressee, Question q, StrategyTree on_da,
                               StrategyTree on_ja) {
  auto node = std::make_shared<Node>();
  node->addressee = addressee;
  node->question = std::move(q);
  node->on_da = std::make_shared<const StrategyTree>(std::move(on_da));
  node->on_ja = std::make_shared<const StrategyTree>(std::move(on_ja));
  return StrategyTree(std::move(node));
}

int StrategyTree::depth() const {
  if (is_guess()) return 0;
  return 1 + std::max(on(Answer::Da).depth(), on(Answer::Ja).depth());
}

bool operator==(const StrategyTree& a, const StrategyTree& b) {
  if (a.is_guess() || b.is_guess()) {
    return a.is_guess() && b.is_guess() && a.guessed() == b.guessed();
  }
  return a.addressee() == b.addressee() && a.question() == b.question() &&
         a.on(Answer::Da) == b.on(Answer::Da) &&
         a.on(Answer::Ja) == b.on(Answer::Ja);
}

std::string Violation::describe() const {
  return "question \"" + question + "\" to " + to_string(addressee) + " at " +
         (path.empty() ? std::string("root") : path) +
         " is not askable: " + witness.describe();
}

InvalidStrategy::InvalidStrategy(const Violation& v)
    : std::invalid_argument(v.describe()), violation_(v) {}

namespace {

std::string extend(const std::string& path, Answer a) {
  std::string step = a == Answer::Da ? "da" : "ja";
  return path.empty() ? step : path + "/" + step;
}

std::optional<Violation> validate_at(const StrategyTree& t,
                                     const BeliefState& belief,
                                     const std::string& path,
                                     RandomVariant variant) {
  if (t.is_guess()) return std::nullopt;
  if (auto bad = find_inadmissibility(t.question(), t.addressee(), belief,
                                      variant)) {
    return Violation{path, t.addressee(), print(t.question()), *bad};
  }
  for (Answer a : kAnswers) {
    if (sgn(answer_probability(belief, t.question(), t.addressee(), a,
                               variant)) == 0) {
      continue;
    }
    BeliefState next = update(belief, t.question(), t.addressee(), a, variant);
    if (auto v = validate_at(t.on(a), next, extend(path, a), variant)) return v;
  }
  return std::nullopt;
}

// Unnormalized: `mass` holds P(world and path so far).
Rational success_mass(const StrategyTree& t,
                      const std::array<Rational, kNumWorlds>& mass,
                      RandomVariant variant) {
  if (t.is_guess()) {
    std::size_t s = index_of(t.guessed());
    return mass[s * 2] + mass[s * 2 + 1];
  }
  Rational total = 0;
  for (Answer a : kAnswers) {
    std::array<Rational, kNumWorlds> next;
    bool any = false;
    for (const World& w : all_worlds()) {
      Rational& slot = next[w.index()];
      slot = 0;
      if (sgn(mass[w.index()]) == 0) continue;
      slot = mass[w.index()] *
             likelihood(a, t.question(), w, t.addressee(), variant);
      any = any || sgn(slot) > 0;
    }
    if (any) total += success_mass(t.on(a), next, variant);
  }
  return total;
}

// Every reachable leaf for world `w` names its scenario.
bool always_correct(const StrategyTree& t, const World& w,
                    RandomVariant variant) {
  if (t.is_guess()) return t.guessed() == w.scenario;
  for (Mode m : possible_modes(w, t.addressee())) {
    AnswerSet set = answer_set(t.question(), w, t.addressee(), m, variant);
    if (set.empty()) return false;
    for (Answer a : kAnswers) {
      if (set.contains(a) && !always_correct(t.on(a), w, variant)) return false;
    }
  }
  return true;
}

StrategyTree map_guesses(const StrategyTree& t,
                         const std::optional<BeliefState>& belief,
                         RandomVariant variant) {
  if (t.is_guess()) {
    return StrategyTree::guess(belief ? belief->best_scenario() : Scenario::S1);
  }
  auto child = [&](Answer a) -> std::optional<BeliefState> {
    if (!belief) return std::nullopt;
    if (sgn(answer_probability(*belief, t.question(), t.addressee(), a,
                               variant)) == 0) {
      return std::nullopt;
    }
    return update(*belief, t.question(), t.addressee(), a, variant);
  };
  return StrategyTree::ask(
      t.addressee(), t.question(),
      map_guesses(t.on(Answer::Da), child(Answer::Da), variant),
      map_guesses(t.on(Answer::Ja), child(Answer::Ja), variant));
}

// Replied to with Da by True and False alike exactly when `p` holds.
Question embedded(Question p) {
  return iff(Question::da_means_yes(),
             iff(Question::you_are(Role::True), std::move(p)));
}

// Da from True, Ja from False.
Question true_or_false() {
  return iff(Question::da_means_yes(), Question::constant(true));
}

// Both questions to `god`: first whether it is True, then whether A is Random.
StrategyTree identify_via(God god, Scenario true_and_a_random,
                          Scenario true_and_a_not_random,
                          Scenario false_and_a_random,
                          Scenario false_and_a_not_random) {
  Question a_random = embedded(Question::is_role(God::A, Role::Random));
  return StrategyTree::ask(
      god, true_or_false(),
      StrategyTree::ask(god, a_random, StrategyTree::guess(true_and_a_random),
                        StrategyTree::guess(true_and_a_not_random)),
      StrategyTree::ask(god, a_random, StrategyTree::guess(false_and_a_random),
                        StrategyTree::guess(false_and_a_not_random)));
}

}  // namespace

std::optional<Violation> validate(const StrategyTree& t, const Prior& prior,
                                  RandomVariant variant) {
  return validate_at(t, BeliefState(prior), "", variant);
}

Rational success_probability(const StrategyTree& t, const Prior& prior,
                             RandomVariant variant) {
  if (auto v = validate(t, prior, variant)) throw InvalidStrategy(*v);
  return success_mass(t, prior.weights(), variant);
}

bool is_certain_solver(const StrategyTree& t, const Prior& prior,
                       RandomVariant variant) {
  if (validate(t, prior, variant)) return false;
  for (const World& w : all_worlds()) {
    if (sgn(prior.weight(w)) == 0) continue;
    if (!always_correct(t, w, variant)) return false;
  }
  return true;
}

StrategyTree builtin_three_question() {
  // Da: either A is not Random and B is, or A is Random; C is not Random.
  // Ja: B is not Random.
  return StrategyTree::ask(
      God::A, embedded(Question::is_role(God::B, Role::Random)),
      identify_via(God::C, Scenario::S6, Scenario::S4, Scenario::S5,
                   Scenario::S2),
      identify_via(God::B, Scenario::S5, Scenario::S3, Scenario::S6,
                   Scenario::S1));
}

StrategyTree builtin_one_question() {
  return StrategyTree::ask(God::A,
                           iff(Question::da_means_yes(),
                               Question::is_role(God::B, Role::Random)),
                           StrategyTree::guess(Scenario::S2),
                           StrategyTree::guess(Scenario::S1));
}

StrategyTree paper_two_question_fragment() {
  Question rome = true_or_false();
  auto stub = StrategyTree::guess(Scenario::S1);
  StrategyTree plan = StrategyTree::ask(
      God::A, embedded(Question::is_role(God::B, Role::Random)),
      StrategyTree::ask(God::C, rome, stub, stub),
      StrategyTree::ask(God::B, rome, stub, stub));
  return with_map_guesses(plan, uniform_prior());
}

StrategyTree with_map_guesses(const StrategyTree& t, const Prior& prior,
                              RandomVariant variant) {
  return map_guesses(t, BeliefState(prior), variant);
}

nlohmann::ordered_json to_json(const StrategyTree& t) {
  nlohmann::ordered_json j;
  if (t.is_guess()) {
    j["guess"] = to_string(t.guessed());
    return j;
  }
  nlohmann::ordered_json ask;
  ask["to"] = to_string(t.addressee());
  ask["q"] = print(t.question());
  ask["da"] = to_json(t.on(Answer::Da));
  ask["ja"] = to_json(t.on(Answer::Ja));
  j["ask"] = std::move(ask);
  return j;
}

namespace {

StrategyTree load(const nlohmann::json& j, int remaining,
                  const std::string& path) {
  auto fail = [&](const std::string& what) {
    throw StrategyFormatError((path.empty() ? std::string("root") : path) +
                              ": " + what);
  };
  if (!j.is_object() || j.size() != 1) {
    fail("node must be an object with exactly one of \"ask\" or \"guess\"");
  }
  if (j.contains("guess")) {
    const auto& g = j["guess"];
    auto s = g.is_string() ? parse_scenario(g.get<std::string>()) : std::nullopt;
    if (!s) fail("guess must be one of \"S1\"..\"S6\"");
    return StrategyTree::guess(*s);
  }
  if (!j.contains("ask")) fail("unknown node kind");
  if (remaining == 0) fail("tree exceeds the depth limit");
  const auto& ask = j["ask"];
  if (!ask.is_object()) fail("\"ask\" must be an object");
  for (const char* key : {"to", "q", "da", "ja"}) {
    if (!ask.contains(key)) fail(std::string("\"ask\" is missing \"") + key + "\"");
  }
  auto god = ask["to"].is_string() ? parse_god(ask["to"].get<std::string>())
                                   : std::nullopt;
  if (!god) fail("\"to\" must be \"A\", \"B\" or \"C\"");
  if (!ask["q"].is_string()) fail("\"q\" must be a string");
  std::optional<Question> q;
  try {
    q = parse(ask["q"].get<std::string>());
  } catch (const ParseError& e) {
    fail(e.what());
  }
  int next = remaining < 0 ? remaining : remaining - 1;
  return StrategyTree::ask(*god, *q,
                           load(ask["da"], next, extend(path, Answer::Da)),
                           load(ask["ja"], next, extend(path, Answer::Ja)));
}

}  // namespace

StrategyTree strategy_from_json(const nlohmann::json& j, int max_depth) {
  return load(j, max_depth, "");
}

}  // namespace boolos
