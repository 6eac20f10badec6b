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

// belief.hpp -- exact posterior over the 12 worlds.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "boolos/oracle.hpp"
#include "boolos/question.hpp"
#include "boolos/rational.hpp"
#include "boolos/world.hpp"

namespace boolos {

class ImpossibleObservation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normalized weights over worlds with non-empty support.
class BeliefState {
 public:
  /// Equal to the prior.
  explicit BeliefState(const Prior& prior);

  const Rational& weight(const World& w) const { return weights_[w.index()]; }
  const std::array<Rational, kNumWorlds>& weights() const { return weights_; }

  bool in_support(const World& w) const {
    return (support_ >> w.index()) & 1;
  }
  /// Bit i set iff world i has positive weight.
  std::uint16_t support_mask() const { return support_; }

  Rational scenario_mass(Scenario s) const;
  /// Most probable scenario; lowest index among ties.
  Scenario best_scenario() const;

  /// {"S1/da=yes": "1/12", ...} over all 12 worlds.
  nlohmann::ordered_json to_json() const;
  /// Reads the same shape. Missing worlds get weight 0. Throws InvalidPrior
  /// if the weights are negative or do not sum to 1.
  static BeliefState from_json(const nlohmann::json& j);

  friend bool operator==(const BeliefState& a, const BeliefState& b) {
    return a.weights_ == b.weights_;
  }

 private:
  friend BeliefState update(const BeliefState&, const Question&, God, Answer,
                            RandomVariant);
  BeliefState() = default;
  void recompute_support();

  std::array<Rational, kNumWorlds> weights_;
  std::uint16_t support_ = 0;
};

BeliefState initial_belief(const Prior& prior);

/// P(reply == a | world w): 0, 1/2 or 1. Random's coin is marginalized.
/// Throws NatureViolation if some speaking mode open to the addressee leaves
/// it with no answer.
Rational likelihood(Answer a, const Question& q, const World& w, God addressee,
                    RandomVariant variant = RandomVariant::BoolosCoin);

/// P(reply == a) under `b`.
Rational answer_probability(const BeliefState& b, const Question& q,
                            God addressee, Answer a,
                            RandomVariant variant = RandomVariant::BoolosCoin);

/// Bayes' rule with exact renormalization. Throws ImpossibleObservation if
/// the observed reply has probability zero under `b`.
BeliefState update(const BeliefState& b, const Question& q, God addressee,
                   Answer a, RandomVariant variant = RandomVariant::BoolosCoin);

/// Reads a prior from the belief serialization format.
Prior prior_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const Prior& p);

}  // namespace boolos
