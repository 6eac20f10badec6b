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

#include "boolos/oracle.hpp"

#include <algorithm>
#include <cctype>

#include "boolos/belief.hpp"

namespace boolos {

std::string to_string(Mode m) {
  return m == Mode::Truthful ? "Truthful" : "Lying";
}

std::string to_string(RandomVariant v) {
  return v == RandomVariant::BoolosCoin ? "boolos" : "rabern";
}

std::optional<Mode> parse_mode(std::string_view text) {
  std::string lower(text);
  for (auto& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "truthful") return Mode::Truthful;
  if (lower == "lying") return Mode::Lying;
  return std::nullopt;
}

std::optional<RandomVariant> parse_variant(std::string_view text) {
  if (text == "boolos") return RandomVariant::BoolosCoin;
  if (text == "rabern") return RandomVariant::RabernUniform;
  return std::nullopt;
}

std::string AnswerSet::str() const {
  if (bits_ == 3) return "{Da, Ja}";
  if (bits_ == 1) return "{Da}";
  if (bits_ == 2) return "{Ja}";
  return "{}";
}

Mode speaking_mode(Role r, Coin coin) {
  switch (r) {
    case Role::True: return Mode::Truthful;
    case Role::False: return Mode::Lying;
    case Role::Random: break;
  }
  return coin == Coin::Heads ? Mode::Truthful : Mode::Lying;
}

AnswerSet answer_set(const Question& q, const World& w, God addressee,
                     Mode mode, RandomVariant variant) {
  if (variant == RandomVariant::RabernUniform &&
      w.role(addressee) == Role::Random) {
    return AnswerSet::both();
  }
  AnswerSet out;
  for (Answer a : kAnswers) {
    bool asserted = means_yes(a, w.language);
    bool truth = evaluate(q, w, addressee, a);
    bool consistent = mode == Mode::Truthful ? asserted == truth
                                             : asserted != truth;
    if (consistent) out.insert(a);
  }
  return out;
}

bool admissible(const Question& q, const World& w, God addressee, Mode mode,
                RandomVariant variant) {
  return !answer_set(q, w, addressee, mode, variant).empty();
}

std::vector<Mode> possible_modes(const World& w, God addressee) {
  Role r = w.role(addressee);
  if (r == Role::Random) return {Mode::Truthful, Mode::Lying};
  return {speaking_mode(r, Coin::Heads)};
}

std::string Inadmissibility::describe() const {
  return "addressee could be " + to_string(role) + " (world " + world.label() +
         ", mode " + to_string(mode) + ")";
}

std::optional<Inadmissibility> find_inadmissibility(const Question& q,
                                                    God addressee,
                                                    const BeliefState& belief,
                                                    RandomVariant variant) {
  for (const World& w : all_worlds()) {
    if (!belief.in_support(w)) continue;
    for (Mode m : possible_modes(w, addressee)) {
      if (!admissible(q, w, addressee, m, variant)) {
        return Inadmissibility{w, m, w.role(addressee)};
      }
    }
  }
  return std::nullopt;
}

bool askable(const Question& q, God addressee, const BeliefState& belief,
             RandomVariant variant) {
  return !find_inadmissibility(q, addressee, belief, variant).has_value();
}

bool draw_bit(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

Answer draw_answer(const Question& q, const World& w, God addressee, Coin coin,
                   std::mt19937_64& rng, RandomVariant variant) {
  Mode mode = speaking_mode(w.role(addressee), coin);
  AnswerSet set = answer_set(q, w, addressee, mode, variant);
  if (set.empty()) {
    throw NatureViolation(to_string(addressee) + " cannot answer \"" +
                          print(q) + "\" in world " + w.label() + " while " +
                          to_string(mode));
  }
  if (set.size() == 1) {
    return set.contains(Answer::Da) ? Answer::Da : Answer::Ja;
  }
  return draw_bit(rng) ? Answer::Ja : Answer::Da;
}

Signature likelihood_signature(const Question& q, God addressee,
                               RandomVariant variant) {
  Signature sig{};
  for (const World& w : all_worlds()) {
    std::size_t slot = w.index() * 2;
    if (w.role(addressee) == Role::Random) {
      std::uint8_t truthful =
          answer_set(q, w, addressee, Mode::Truthful, variant).bits();
      std::uint8_t lying =
          answer_set(q, w, addressee, Mode::Lying, variant).bits();
      sig[slot] = std::min(truthful, lying);
      sig[slot + 1] = std::max(truthful, lying);
    } else {
      Mode m = speaking_mode(w.role(addressee), Coin::Heads);
      sig[slot] = answer_set(q, w, addressee, m, variant).bits();
      sig[slot + 1] = kNoMode;
    }
  }
  return sig;
}

}  // namespace boolos
