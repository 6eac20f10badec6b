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

// world.hpp -- the finite sample space: gods, roles, scenarios, word meanings.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boolos/rational.hpp"

namespace boolos {

enum class God : std::uint8_t { A, B, C };
enum class Role : std::uint8_t { True, False, Random };

/// One of the six assignments of roles to gods, in table order.
enum class Scenario : std::uint8_t { S1, S2, S3, S4, S5, S6 };

/// What "da" means; "ja" always means the other word.
enum class Language : std::uint8_t { DaYes, DaNo };

enum class Coin : std::uint8_t { Heads, Tails };

inline constexpr std::array<God, 3> kGods = {God::A, God::B, God::C};
inline constexpr std::array<Role, 3> kRoles = {Role::True, Role::False,
                                               Role::Random};
inline constexpr std::array<Scenario, 6> kScenarios = {
    Scenario::S1, Scenario::S2, Scenario::S3,
    Scenario::S4, Scenario::S5, Scenario::S6};
inline constexpr std::array<Language, 2> kLanguages = {Language::DaYes,
                                                       Language::DaNo};
inline constexpr std::array<Coin, 2> kCoins = {Coin::Heads, Coin::Tails};

inline constexpr std::size_t kNumScenarios = 6;
inline constexpr std::size_t kNumWorlds = 12;

constexpr std::size_t index_of(God g) { return static_cast<std::size_t>(g); }
constexpr std::size_t index_of(Role r) { return static_cast<std::size_t>(r); }
constexpr std::size_t index_of(Scenario s) {
  return static_cast<std::size_t>(s);
}

Role role_of(Scenario s, God g);

/// The god holding role `r` in scenario `s`.
God god_with_role(Scenario s, Role r);

/// A scenario together with a language map: the whole hidden state.
struct World {
  Scenario scenario = Scenario::S1;
  Language language = Language::DaYes;

  /// Position in canonical order: S1..S6 outer, da=yes before da=no.
  constexpr std::size_t index() const {
    return index_of(scenario) * 2 + static_cast<std::size_t>(language);
  }
  constexpr bool da_means_yes() const { return language == Language::DaYes; }
  Role role(God g) const { return role_of(scenario, g); }

  /// "S4/da=no"
  std::string label() const;

  friend constexpr bool operator==(const World&, const World&) = default;
};

/// All 12 worlds in canonical order.
const std::array<World, kNumWorlds>& all_worlds();

constexpr World world_at(std::size_t index) {
  return World{static_cast<Scenario>(index / 2),
               static_cast<Language>(index % 2)};
}

std::string to_string(God g);
std::string to_string(Role r);
std::string to_string(Scenario s);
std::string to_string(Language l);  // "da=yes" / "da=no"
std::string to_string(Coin c);

std::optional<God> parse_god(std::string_view text);
std::optional<Role> parse_role(std::string_view text);
std::optional<Scenario> parse_scenario(std::string_view text);
std::optional<Language> parse_language(std::string_view text);
/// Accepts a world label such as "S4/da=no".
std::optional<World> parse_world(std::string_view text);

class InvalidPrior : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Probability weights over the 12 worlds. Always nonnegative and summing to
/// exactly one.
class Prior {
 public:
  /// Throws InvalidPrior on a negative weight or a total different from 1.
  explicit Prior(std::array<Rational, kNumWorlds> weights);

  const Rational& weight(const World& w) const { return weights_[w.index()]; }
  const std::array<Rational, kNumWorlds>& weights() const { return weights_; }

  Rational scenario_mass(Scenario s) const;
  Rational language_mass(Language l) const;
  Rational max_scenario_mass() const;

  /// A prior putting all mass on one world.
  static Prior point(const World& w);

 private:
  std::array<Rational, kNumWorlds> weights_;
};

/// Uniform over the 12 worlds: scenario and language independent and uniform.
Prior uniform_prior();

}  // namespace boolos
