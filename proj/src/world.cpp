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

#include "boolos/world.hpp"

#include <algorithm>
#include <cctype>

namespace boolos {

namespace {

// Rows S1..S6, columns A, B, C.
constexpr Role kTable[kNumScenarios][3] = {
    {Role::True, Role::False, Role::Random},
    {Role::True, Role::Random, Role::False},
    {Role::False, Role::True, Role::Random},
    {Role::False, Role::Random, Role::True},
    {Role::Random, Role::True, Role::False},
    {Role::Random, Role::False, Role::True},
};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

Role role_of(Scenario s, God g) { return kTable[index_of(s)][index_of(g)]; }

God god_with_role(Scenario s, Role r) {
  for (God g : kGods) {
    if (role_of(s, g) == r) return g;
  }
  throw std::logic_error("scenario table is not a bijection");
}

std::string World::label() const {
  return to_string(scenario) + "/" + to_string(language);
}

const std::array<World, kNumWorlds>& all_worlds() {
  static const std::array<World, kNumWorlds> worlds = [] {
    std::array<World, kNumWorlds> out;
    for (std::size_t i = 0; i < kNumWorlds; ++i) out[i] = world_at(i);
    return out;
  }();
  return worlds;
}

std::string to_string(God g) {
  switch (g) {
    case God::A: return "A";
    case God::B: return "B";
    case God::C: return "C";
  }
  return "?";
}

std::string to_string(Role r) {
  switch (r) {
    case Role::True: return "True";
    case Role::False: return "False";
    case Role::Random: return "Random";
  }
  return "?";
}

std::string to_string(Scenario s) {
  return "S" + std::to_string(index_of(s) + 1);
}

std::string to_string(Language l) {
  return l == Language::DaYes ? "da=yes" : "da=no";
}

std::string to_string(Coin c) { return c == Coin::Heads ? "heads" : "tails"; }

std::optional<God> parse_god(std::string_view text) {
  for (God g : kGods) {
    if (iequals(text, to_string(g))) return g;
  }
  return std::nullopt;
}

std::optional<Role> parse_role(std::string_view text) {
  for (Role r : kRoles) {
    if (iequals(text, to_string(r))) return r;
  }
  return std::nullopt;
}

std::optional<Scenario> parse_scenario(std::string_view text) {
  for (Scenario s : kScenarios) {
    if (iequals(text, to_string(s))) return s;
  }
  return std::nullopt;
}

std::optional<Language> parse_language(std::string_view text) {
  for (Language l : kLanguages) {
    if (iequals(text, to_string(l))) return l;
  }
  return std::nullopt;
}

std::optional<World> parse_world(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto s = parse_scenario(text.substr(0, slash));
  auto l = parse_language(text.substr(slash + 1));
  if (!s || !l) return std::nullopt;
  return World{*s, *l};
}

Prior::Prior(std::array<Rational, kNumWorlds> weights)
    : weights_(std::move(weights)) {
  Rational total = 0;
  for (const auto& w : weights_) {
    if (sgn(w) < 0) throw InvalidPrior("prior weight is negative");
    total += w;
  }
  if (total != 1) {
    throw InvalidPrior("prior weights sum to " + format_rational(total) +
                       ", not 1");
  }
}

Rational Prior::scenario_mass(Scenario s) const {
  return weights_[index_of(s) * 2] + weights_[index_of(s) * 2 + 1];
}

Rational Prior::language_mass(Language l) const {
  Rational total = 0;
  for (const World& w : all_worlds()) {
    if (w.language == l) total += weights_[w.index()];
  }
  return total;
}

Rational Prior::max_scenario_mass() const {
  Rational best = 0;
  for (Scenario s : kScenarios) best = std::max(best, scenario_mass(s));
  return best;
}

Prior Prior::point(const World& w) {
  std::array<Rational, kNumWorlds> weights;
  for (auto& x : weights) x = 0;
  weights[w.index()] = 1;
  return Prior(std::move(weights));
}

Prior uniform_prior() {
  std::array<Rational, kNumWorlds> weights;
  for (auto& x : weights) x = make_rational(1, kNumWorlds);
  return Prior(std::move(weights));
}

}  // namespace boolos
