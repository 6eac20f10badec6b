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

// strategy.hpp -- adaptive interrogation plans.

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "boolos/belief.hpp"
#include "boolos/oracle.hpp"
#include "boolos/question.hpp"
#include "boolos/world.hpp"

namespace boolos {

/// Either ask one god one question and continue on the reply, or stop and
/// name a scenario. Immutable; subtrees are shared.
class StrategyTree {
 public:
  static StrategyTree guess(Scenario s);
  static StrategyTree ask(God addressee, Question q, StrategyTree on_da,
                          StrategyTree on_ja);

  bool is_guess() const { return !node_->question.has_value(); }
  Scenario guessed() const { return node_->scenario; }
  God addressee() const { return node_->addressee; }
  const Question& question() const { return *node_->question; }
  const StrategyTree& on(Answer a) const {
    return a == Answer::Da ? *node_->on_da : *node_->on_ja;
  }

  /// Most questions asked along any path.
  int depth() const;

  friend bool operator==(const StrategyTree& a, const StrategyTree& b);

 private:
  struct Node {
    Scenario scenario = Scenario::S1;
    God addressee = God::A;
    std::optional<Question> question;
    std::shared_ptr<const StrategyTree> on_da;
    std::shared_ptr<const StrategyTree> on_ja;
  };
  explicit StrategyTree(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// First Ask node (in depth-first, Da-before-Ja order) whose question is not
/// askable under the belief reaching it.
struct Violation {
  std::string path;  // replies leading to the node, e.g. "da/ja"; "" = root
  God addressee;
  std::string question;
  Inadmissibility witness;

  std::string describe() const;
};

/// Walks the tree propagating beliefs. Branches with zero probability are
/// never reached and are not checked.
std::optional<Violation> validate(const StrategyTree& t, const Prior& prior,
                                  RandomVariant variant = RandomVariant::BoolosCoin);

class InvalidStrategy : public std::invalid_argument {
 public:
  explicit InvalidStrategy(const Violation& v);
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// Exact probability that the guess reached equals the true scenario.
/// Throws InvalidStrategy if validate() reports a violation.
Rational success_probability(const StrategyTree& t, const Prior& prior,
                             RandomVariant variant = RandomVariant::BoolosCoin);

/// Valid, and correct along every reachable path for every world in the
/// prior's support, every coin face and every resolution of a two-word
/// answer set. Checked by path enumeration, not via success_probability.
bool is_certain_solver(const StrategyTree& t, const Prior& prior,
                       RandomVariant variant = RandomVariant::BoolosCoin);

/// Find a certainly non-Random god with one embedded question, learn whether
/// it is True or False with a second, and ask it where Random is with a third.
StrategyTree builtin_three_question();

/// Asks A "da means yes iff B is Random" and guesses S2 on Da, S1 on Ja.
StrategyTree builtin_one_question();

/// Two-question plan: the first question to A locates a certainly
/// non-Random god, which then gets the "da means yes iff true" question;
/// leaves guess the most probable scenario.
StrategyTree paper_two_question_fragment();

/// Replaces every leaf with the most probable scenario of the belief reaching
/// it (lowest index on ties). Unreached leaves guess S1.
StrategyTree with_map_guesses(const StrategyTree& t, const Prior& prior,
                              RandomVariant variant = RandomVariant::BoolosCoin);

/// {"ask": {"to": "A", "q": "...", "da": ..., "ja": ...}} / {"guess": "S3"}.
nlohmann::ordered_json to_json(const StrategyTree& t);

class StrategyFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws StrategyFormatError on malformed input or a tree deeper than
/// `max_depth` (negative disables the check).
StrategyTree strategy_from_json(const nlohmann::json& j, int max_depth = 3);

}  // namespace boolos
