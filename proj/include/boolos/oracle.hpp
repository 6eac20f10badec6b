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

// oracle.hpp -- how a god answers.
//
// A god in a given speaking mode may utter word `a` exactly when the assertion
// carried by `a` ("yes" or "no") has the right truth value for the question as
// evaluated under the hypothesis that the reply is `a`. For ordinary questions
// exactly one word qualifies. For self-referential ones the set of consistent
// replies can be empty (the question is inadmissible) or contain both words.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "boolos/question.hpp"
#include "boolos/world.hpp"

namespace boolos {

class BeliefState;

enum class Mode : std::uint8_t { Truthful, Lying };

enum class RandomVariant : std::uint8_t {
  /// Random flips a hidden coin and then tells the truth or lies.
  BoolosCoin,
  /// Random ignores the question and utters a uniformly chosen word.
  RabernUniform,
};

inline constexpr std::array<Mode, 2> kModes = {Mode::Truthful, Mode::Lying};

std::string to_string(Mode m);           // "Truthful" / "Lying"
std::string to_string(RandomVariant v);  // "boolos" / "rabern"
std::optional<Mode> parse_mode(std::string_view text);
std::optional<RandomVariant> parse_variant(std::string_view text);

/// Subset of {Da, Ja}. Empty means the god cannot reply without violating its
/// nature.
class AnswerSet {
 public:
  constexpr AnswerSet() = default;
  static constexpr AnswerSet both() { return AnswerSet(3); }
  static constexpr AnswerSet only(Answer a) { return AnswerSet(bit(a)); }

  constexpr bool contains(Answer a) const { return (bits_ & bit(a)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return (bits_ & 1) + ((bits_ >> 1) & 1); }
  constexpr void insert(Answer a) { bits_ |= bit(a); }
  constexpr std::uint8_t bits() const { return bits_; }

  /// "{}", "{Da}", "{Ja}" or "{Da, Ja}".
  std::string str() const;

  friend constexpr bool operator==(AnswerSet, AnswerSet) = default;

 private:
  constexpr explicit AnswerSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(Answer a) {
    return a == Answer::Da ? 1 : 2;
  }
  std::uint8_t bits_ = 0;
};

Mode speaking_mode(Role r, Coin coin);

AnswerSet answer_set(const Question& q, const World& w, God addressee,
                     Mode mode,
                     RandomVariant variant = RandomVariant::BoolosCoin);

bool admissible(const Question& q, const World& w, God addressee, Mode mode,
                RandomVariant variant = RandomVariant::BoolosCoin);

/// The speaking modes `addressee` may be in at world `w`: both for Random,
/// the fixed one otherwise.
std::vector<Mode> possible_modes(const World& w, God addressee);

/// A (world, mode) situation in which a question cannot be answered.
struct Inadmissibility {
  World world;
  Mode mode;
  Role role;  // the addressee's role in `world`

  std::string describe() const;
};

/// First situation (canonical world order, Truthful before Lying) in the
/// support of `belief` where `q` put to `addressee` has an empty answer set.
std::optional<Inadmissibility> find_inadmissibility(const Question& q,
                                                    God addressee,
                                                    const BeliefState& belief,
                                                    RandomVariant variant);

bool askable(const Question& q, God addressee, const BeliefState& belief,
             RandomVariant variant = RandomVariant::BoolosCoin);

class NatureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Uniform bit drawn from the session stream. All randomness in the engine
/// goes through here so runs are reproducible across standard libraries.
bool draw_bit(std::mt19937_64& rng);

/// The god's actual reply. A two-word answer set is resolved uniformly with a
/// draw from `rng`; a singleton consumes nothing. Throws NatureViolation when
/// the answer set is empty.
Answer draw_answer(const Question& q, const World& w, God addressee, Coin coin,
                   std::mt19937_64& rng,
                   RandomVariant variant = RandomVariant::BoolosCoin);

/// Per world (canonical order), the answer sets the addressee produces over
/// the speaking modes it can be in, as two raw-bit slots. When the mode is
/// decided by a fair coin the pair is sorted, since the coin is never
/// observed; when the mode is fixed the second slot holds kNoMode. Questions
/// with equal signatures behave identically in every strategy.
using Signature = std::array<std::uint8_t, kNumWorlds * 2>;
inline constexpr std::uint8_t kNoMode = 0xff;

Signature likelihood_signature(const Question& q, God addressee,
                               RandomVariant variant = RandomVariant::BoolosCoin);

}  // namespace boolos
