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

#include "boolos/belief.hpp"

namespace boolos {

BeliefState::BeliefState(const Prior& prior) : weights_(prior.weights()) {
  recompute_support();
}

void BeliefState::recompute_support() {
  support_ = 0;
  for (std::size_t i = 0; i < kNumWorlds; ++i) {
    if (sgn(weights_[i]) > 0) support_ |= static_cast<std::uint16_t>(1u << i);
  }
}

Rational BeliefState::scenario_mass(Scenario s) const {
  return weights_[index_of(s) * 2] + weights_[index_of(s) * 2 + 1];
}

Scenario BeliefState::best_scenario() const {
  Scenario best = Scenario::S1;
  Rational best_mass = scenario_mass(best);
  for (Scenario s : kScenarios) {
    Rational m = scenario_mass(s);
    if (m > best_mass) {
      best = s;
      best_mass = m;
    }
  }
  return best;
}

nlohmann::ordered_json BeliefState::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const World& w : all_worlds()) {
    j[w.label()] = format_rational(weights_[w.index()]);
  }
  return j;
}

BeliefState BeliefState::from_json(const nlohmann::json& j) {
  return BeliefState(prior_from_json(j));
}

BeliefState initial_belief(const Prior& prior) { return BeliefState(prior); }

namespace {

// Probability that a god in `mode` replies `a`: a two-word answer set is
// resolved uniformly.
Rational reply_share(Answer a, const Question& q, const World& w,
                     God addressee, Mode mode, RandomVariant variant) {
  AnswerSet set = answer_set(q, w, addressee, mode, variant);
  if (set.empty()) {
    throw NatureViolation(to_string(addressee) + " has no admissible answer to \"" +
                          print(q) + "\" in world " + w.label() + " while " +
                          to_string(mode));
  }
  if (!set.contains(a)) return 0;
  return make_rational(1, set.size());
}

}  // namespace

Rational likelihood(Answer a, const Question& q, const World& w, God addressee,
                    RandomVariant variant) {
  Role role = w.role(addressee);
  if (role != Role::Random) {
    return reply_share(a, q, w, addressee, speaking_mode(role, Coin::Heads),
                       variant);
  }
  if (variant == RandomVariant::RabernUniform) return make_rational(1, 2);
  Rational total = reply_share(a, q, w, addressee, Mode::Truthful, variant) +
                   reply_share(a, q, w, addressee, Mode::Lying, variant);
  return total / 2;
}

Rational answer_probability(const BeliefState& b, const Question& q,
                            God addressee, Answer a, RandomVariant variant) {
  Rational total = 0;
  for (const World& w : all_worlds()) {
    if (!b.in_support(w)) continue;
    total += b.weight(w) * likelihood(a, q, w, addressee, variant);
  }
  return total;
}

BeliefState update(const BeliefState& b, const Question& q, God addressee,
                   Answer a, RandomVariant variant) {
  BeliefState out;
  Rational total = 0;
  for (const World& w : all_worlds()) {
    Rational& slot = out.weights_[w.index()];
    if (b.in_support(w)) {
      slot = b.weight(w) * likelihood(a, q, w, addressee, variant);
      total += slot;
    } else {
      slot = 0;
    }
  }
  if (sgn(total) == 0) {
    throw ImpossibleObservation("reply " + to_string(a) + " from " +
                                to_string(addressee) + " to \"" + print(q) +
                                "\" has probability zero");
  }
  for (auto& x : out.weights_) x /= total;
  out.recompute_support();
  return out;
}

Prior prior_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidPrior("prior must be a JSON object");
  std::array<Rational, kNumWorlds> weights;
  for (auto& x : weights) x = 0;
  for (const auto& [key, value] : j.items()) {
    auto w = parse_world(key);
    if (!w) throw InvalidPrior("unknown world label '" + key + "'");
    if (!value.is_string()) {
      throw InvalidPrior("weight for " + key + " must be a \"num/den\" string");
    }
    try {
      weights[w->index()] = parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InvalidPrior(key + ": " + e.what());
    }
  }
  return Prior(std::move(weights));
}

nlohmann::ordered_json to_json(const Prior& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const World& w : all_worlds()) {
    j[w.label()] = format_rational(p.weight(w));
  }
  return j;
}

}  // namespace boolos
