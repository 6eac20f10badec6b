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

#include <set>

#include "doctest.h"

#include "boolos/world.hpp"
#include "test_support.hpp"

using namespace boolos;

TEST_SUITE("world") {

TEST_CASE("twelve worlds in canonical order") {
  const auto& worlds = all_worlds();
  CHECK(worlds.size() == 12);
  CHECK(worlds[0].scenario == Scenario::S1);
  CHECK(worlds[0].language == Language::DaYes);
  CHECK(worlds[1].language == Language::DaNo);
  CHECK(worlds[11].scenario == Scenario::S6);
  for (std::size_t i = 0; i < worlds.size(); ++i) CHECK(worlds[i].index() == i);
  CHECK(role_of(worlds[0].scenario, God::A) == Role::True);
  CHECK(role_of(worlds[0].scenario, God::B) == Role::False);
  CHECK(role_of(worlds[0].scenario, God::C) == Role::Random);
  CHECK(worlds[8].scenario == Scenario::S5);
  CHECK(worlds[8].role(God::A) == Role::Random);
}

TEST_CASE("role table") {
  CHECK(role_of(Scenario::S1, God::A) == Role::True);
  CHECK(role_of(Scenario::S4, God::B) == Role::Random);
  CHECK(role_of(Scenario::S6, God::C) == Role::True);
  for (int s = 0; s < 6; ++s) {
    for (int g = 0; g < 3; ++g) {
      CHECK(role_of(kScenarios[s], kGods[g]) == testing::table_role(s, g));
    }
  }
}

TEST_CASE("scenarios are the six permutations, each once") {
  std::set<std::array<Role, 3>> seen;
  for (Scenario s : kScenarios) {
    std::array<Role, 3> row = {role_of(s, God::A), role_of(s, God::B),
                               role_of(s, God::C)};
    std::set<Role> distinct(row.begin(), row.end());
    CHECK(distinct.size() == 3);
    seen.insert(row);
    for (Role r : kRoles) CHECK(role_of(s, god_with_role(s, r)) == r);
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("uniform prior") {
  Prior p = uniform_prior();
  Rational total = 0;
  for (const World& w : all_worlds()) {
    CHECK(p.weight(w) == make_rational(1, 12));
    total += p.weight(w);
  }
  CHECK(total == 1);
  CHECK(p.scenario_mass(Scenario::S3) == make_rational(1, 6));
  CHECK(p.language_mass(Language::DaYes) == make_rational(1, 2));
  CHECK(p.max_scenario_mass() == make_rational(1, 6));
}

TEST_CASE("prior validation") {
  std::array<Rational, kNumWorlds> zeros;
  for (auto& x : zeros) x = 0;
  CHECK_THROWS_AS(Prior{zeros}, InvalidPrior);

  auto negative = uniform_prior().weights();
  negative[0] = make_rational(-1, 12);
  negative[1] = make_rational(3, 12);
  CHECK_THROWS_AS(Prior{negative}, InvalidPrior);

  Prior point = Prior::point(World{Scenario::S2, Language::DaNo});
  CHECK(point.scenario_mass(Scenario::S2) == 1);
  CHECK(point.language_mass(Language::DaYes) == 0);
}

TEST_CASE("names round-trip") {
  for (const World& w : all_worlds()) {
    auto parsed = parse_world(w.label());
    REQUIRE(parsed);
    CHECK(*parsed == w);
  }
  CHECK(World{Scenario::S4, Language::DaNo}.label() == "S4/da=no");
  CHECK(to_string(Scenario::S1) == "S1");
  CHECK(to_string(Language::DaYes) == "da=yes");
  CHECK_FALSE(parse_world("S7/da=yes"));
  CHECK_FALSE(parse_world("S1"));
  CHECK(parse_role("random") == Role::Random);
  CHECK_FALSE(parse_god("D"));
}

TEST_CASE("rational text form") {
  CHECK(format_rational(make_rational(2, 12)) == "1/6");
  CHECK(format_rational(Rational(1)) == "1/1");
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(parse_rational("3/9") == make_rational(1, 3));
  CHECK(parse_rational("2") == 2);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x/2"));
  CHECK_THROWS(parse_rational(""));
}

}  // TEST_SUITE
