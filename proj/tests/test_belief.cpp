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

#include "doctest.h"

#include "boolos/belief.hpp"
#include "test_support.hpp"

using namespace boolos;

namespace {

// Posterior after one reply, by enumerating world x coin face with the
// reference reply rule.
std::array<Rational, kNumWorlds> reference_posterior(const Question& q, God g,
                                                     Answer observed) {
  std::array<Rational, kNumWorlds> mass;
  Rational total = 0;
  for (std::size_t i = 0; i < kNumWorlds; ++i) {
    mass[i] = 0;
    for (bool heads : {true, false}) {
      if (testing::reference_reply(q, world_at(i), g, heads) == observed) {
        mass[i] += make_rational(1, 24);
      }
    }
    total += mass[i];
  }
  for (auto& m : mass) m /= total;
  return mass;
}

}  // namespace

TEST_SUITE("belief") {

TEST_CASE("initial belief") {
  BeliefState b = initial_belief(uniform_prior());
  for (const World& w : all_worlds()) CHECK(b.weight(w) == make_rational(1, 12));
  CHECK(b.support_mask() == 0xfff);

  World s1{Scenario::S1, Language::DaYes};
  BeliefState point = initial_belief(Prior::point(s1));
  CHECK(point.weight(s1) == 1);
  CHECK(point.support_mask() == 1);
}

TEST_CASE("likelihood") {
  Question q = parse("da means yes iff B is Random");
  for (Language l : kLanguages) {
    CHECK(likelihood(Answer::Da, q, World{Scenario::S2, l}, God::A) == 1);
    CHECK(likelihood(Answer::Da, q, World{Scenario::S5, l}, God::A) ==
          make_rational(1, 2));
  }
  // A is True in S1; a tautology must get the yes-word, which is Da.
  CHECK(likelihood(Answer::Ja, parse("true"), World{Scenario::S1, Language::DaYes},
                   God::A) == 0);
  CHECK_THROWS_AS(likelihood(Answer::Da, parse("you answer no-word"),
                             World{Scenario::S1, Language::DaYes}, God::A),
                  NatureViolation);
  CHECK(likelihood(Answer::Da, parse("you answer no-word"),
                   World{Scenario::S3, Language::DaYes}, God::A) ==
        make_rational(1, 2));
  CHECK(likelihood(Answer::Da, parse("A is True"),
                   World{Scenario::S5, Language::DaYes}, God::A,
                   RandomVariant::RabernUniform) == make_rational(1, 2));
}

TEST_CASE("update after the B-is-Random question") {
  Question q = parse("da means yes iff B is Random");
  BeliefState post = update(BeliefState(uniform_prior()), q, God::A, Answer::Da);

  auto expected = reference_posterior(q, God::A, Answer::Da);
  for (const World& w : all_worlds()) CHECK(post.weight(w) == expected[w.index()]);

  // Frozen from the enumeration above.
  CHECK(post.scenario_mass(Scenario::S1) == 0);
  CHECK(post.scenario_mass(Scenario::S2) == make_rational(1, 3));
  CHECK(post.scenario_mass(Scenario::S3) == make_rational(1, 3));
  CHECK(post.scenario_mass(Scenario::S4) == 0);
  CHECK(post.scenario_mass(Scenario::S5) == make_rational(1, 6));
  CHECK(post.scenario_mass(Scenario::S6) == make_rational(1, 6));
  CHECK(post.weight(World{Scenario::S2, Language::DaNo}) == make_rational(1, 6));
}

TEST_CASE("update matches enumeration for random extensional questions") {
  testing::QuestionGenerator gen(31, /*self_referential=*/false);
  BeliefState uniform(uniform_prior());
  for (int i = 0; i < 100; ++i) {
    Question q = gen.next(3);
    God g = gen.god();
    for (Answer a : kAnswers) {
      if (sgn(answer_probability(uniform, q, g, a)) == 0) continue;
      auto expected = reference_posterior(q, g, a);
      BeliefState post = update(uniform, q, g, a);
      for (const World& w : all_worlds()) {
        CHECK(post.weight(w) == expected[w.index()]);
      }
    }
  }
}

TEST_CASE("point belief is unchanged by a consistent answer") {
  World w{Scenario::S4, Language::DaNo};
  BeliefState b(Prior::point(w));
  Question q = parse("C is True");
  Answer a = likelihood(Answer::Da, q, w, God::C) == 1 ? Answer::Da : Answer::Ja;
  CHECK(update(b, q, God::C, a) == b);
}

TEST_CASE("impossible observation") {
  std::array<Rational, kNumWorlds> w;
  for (auto& x : w) x = 0;
  w[0] = make_rational(1, 2);  // S1/da=yes
  w[1] = make_rational(1, 2);  // S1/da=no
  BeliefState s1(Prior{w});
  Question taut = parse("true");
  // True says the yes-word: Da under da=yes, Ja under da=no.
  BeliefState yes_only(Prior::point(World{Scenario::S1, Language::DaYes}));
  CHECK_THROWS_AS(update(yes_only, taut, God::A, Answer::Ja), ImpossibleObservation);
  BeliefState no_only(Prior::point(World{Scenario::S1, Language::DaNo}));
  CHECK_THROWS_AS(update(no_only, taut, God::A, Answer::Da), ImpossibleObservation);
  // With both languages possible either reply can occur and fixes the language.
  CHECK(answer_probability(s1, taut, God::A, Answer::Da) == make_rational(1, 2));
  CHECK(update(s1, taut, God::A, Answer::Da).support_mask() == 1);
}

TEST_CASE("belief invariants over random questions") {
  testing::QuestionGenerator gen(37, /*self_referential=*/false);
  BeliefState uniform(uniform_prior());
  for (int i = 0; i < 100; ++i) {
    Question q = gen.next(3);
    God g = gen.god();
    Rational total = 0;
    for (Answer a : kAnswers) total += answer_probability(uniform, q, g, a);
    CHECK(total == 1);
    for (Answer a : kAnswers) {
      if (sgn(answer_probability(uniform, q, g, a)) == 0) continue;
      BeliefState post = update(uniform, q, g, a);
      Rational sum = 0;
      for (const auto& x : post.weights()) sum += x;
      CHECK(sum == 1);
      CHECK((post.support_mask() & ~uniform.support_mask()) == 0);
    }
  }
}

TEST_CASE("non-Random addressee splits the support") {
  // Support: worlds where A is not Random (S1..S4).
  std::array<Rational, kNumWorlds> w;
  for (std::size_t i = 0; i < kNumWorlds; ++i) {
    w[i] = i < 8 ? make_rational(1, 8) : Rational(0);
  }
  BeliefState b(Prior{w});
  testing::QuestionGenerator gen(41, /*self_referential=*/false);
  for (int i = 0; i < 100; ++i) {
    Question q = gen.next(3);
    std::uint16_t masks[2] = {0, 0};
    for (Answer a : kAnswers) {
      if (sgn(answer_probability(b, q, God::A, a)) == 0) continue;
      masks[a == Answer::Da ? 0 : 1] = update(b, q, God::A, a).support_mask();
    }
    CHECK((masks[0] & masks[1]) == 0);
  }
}

TEST_CASE("serialization") {
  BeliefState b(uniform_prior());
  auto j = b.to_json();
  CHECK(j["S4/da=no"] == "1/12");
  CHECK(j.size() == 12);
  CHECK(BeliefState::from_json(j) == b);

  nlohmann::json partial = {{"S1/da=yes", "1/2"}, {"S2/da=no", "1/2"}};
  Prior p = prior_from_json(partial);
  CHECK(p.weight(World{Scenario::S1, Language::DaYes}) == make_rational(1, 2));
  CHECK(p.weight(World{Scenario::S3, Language::DaYes}) == 0);

  CHECK_THROWS_AS(prior_from_json({{"S1/da=yes", "1/2"}}), InvalidPrior);
  CHECK_THROWS_AS(prior_from_json({{"S9/da=yes", "1/1"}}), InvalidPrior);
  CHECK_THROWS_AS(prior_from_json({{"S1/da=yes", 1}}), InvalidPrior);
}

}  // TEST_SUITE
