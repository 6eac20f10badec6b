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

#include "boolos/question.hpp"
#include "test_support.hpp"

using namespace boolos;

namespace {

const World kS5Yes{Scenario::S5, Language::DaYes};
const World kS2No{Scenario::S2, Language::DaNo};

}  // namespace

TEST_SUITE("question") {

TEST_CASE("parse atoms") {
  CHECK(parse("A is Random") == Question::is_role(God::A, Role::Random));
  CHECK(parse("da means yes iff true") ==
        iff(Question::da_means_yes(), Question::constant(true)));
  CHECK(parse("you answer no-word") == Question::answer_means_no());
  CHECK(parse("ja means yes") == negate(Question::da_means_yes()));
  CHECK(parse("you are False") == Question::you_are(Role::False));
  CHECK(parse("TRUE") == Question::constant(true));
  CHECK(parse("b IS random") == Question::is_role(God::B, Role::Random));
}

TEST_CASE("precedence and associativity") {
  auto a = Question::is_role(God::A, Role::True);
  auto b = Question::is_role(God::B, Role::True);
  auto c = Question::is_role(God::C, Role::True);
  CHECK(parse("A is True or B is True and C is True") == disj(a, conj(b, c)));
  CHECK(parse("A is True and B is True or C is True") == disj(conj(a, b), c));
  CHECK(parse("A is True or B is True or C is True") == disj(disj(a, b), c));
  CHECK(parse("A is True iff B is True or C is True") == iff(a, disj(b, c)));
  CHECK(parse("not A is True and B is True") == conj(negate(a), b));
  CHECK(parse("(A is True iff B is True) implies C is True") ==
        implies(iff(a, b), c));
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::size_t(-1);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("   "), ParseError);
  CHECK(position_of("D is True") == 0);
  CHECK(position_of("A is Liar") == 5);
  CHECK(position_of("A is True and") == 13);
  CHECK(position_of("(A is True") == 10);
  CHECK(position_of("A is True)") == 9);
  CHECK(position_of("da means no") == 9);
  CHECK(position_of("A is True iff B is True iff C is True") == 24);
  CHECK(position_of("A is True; B") == 9);
  CHECK_THROWS_AS(parse("you answer yes-word"), ParseError);
}

TEST_CASE("print") {
  CHECK(print(Question::is_role(God::B, Role::True)) == "B is True");
  CHECK(print(negate(Question::da_means_yes())) == "not (da means yes)");
  CHECK(print(iff(Question::da_means_yes(),
                  Question::is_role(God::B, Role::Random))) ==
        "da means yes iff B is Random");
  CHECK(print(parse("not (not (A is Random))")) == "not (not (A is Random))");
  CHECK(print(parse("(A is True iff B is True) iff C is True")) ==
        "(A is True iff B is True) iff C is True");
  CHECK(print(parse("A is True or (B is True or C is True)")) ==
        "A is True or (B is True or C is True)");
  CHECK(print(parse("not true")) == "not true");
}

TEST_CASE("round trip over random ASTs") {
  testing::QuestionGenerator gen(20261016);
  for (int i = 0; i < 2000; ++i) {
    Question q = gen.next(5);
    std::string text = print(q);
    INFO(text);
    REQUIRE(parse(text) == q);
    CHECK(print(parse(text)) == text);
  }
}

TEST_CASE("self reference detection") {
  CHECK(is_self_referential(parse("you answer no-word")));
  CHECK_FALSE(is_self_referential(parse("da means yes iff true")));
  CHECK(is_self_referential(parse("not (you answer no-word)")));
  CHECK(is_self_referential(parse("A is True and (B is False or you answer no-word)")));
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(parse("A is Random"), kS5Yes, God::B));
  CHECK_FALSE(evaluate(parse("you answer no-word"), kS5Yes, God::A, Answer::Da));
  CHECK(evaluate(parse("you answer no-word"), kS5Yes, God::A, Answer::Ja));
  CHECK_FALSE(evaluate(parse("da means yes iff B is Random"), kS2No, God::A));
  CHECK(evaluate(parse("you are Random"), kS5Yes, God::A));
  CHECK_FALSE(evaluate(parse("you are Random"), kS5Yes, God::B));
}

TEST_CASE("evaluate agrees with a hand truth table") {
  // da means yes iff B is Random, from the role table typed in again.
  Question q = parse("da means yes iff B is Random");
  for (std::size_t i = 0; i < kNumWorlds; ++i) {
    World w = world_at(i);
    bool b_random = testing::table_role(static_cast<int>(w.scenario), 1) ==
                    Role::Random;
    bool expected = w.da_means_yes() == b_random;
    for (God g : kGods) CHECK(evaluate(q, w, g) == expected);
  }
}

TEST_CASE("missing candidate") {
  CHECK_THROWS_AS(evaluate(parse("you answer no-word"), kS5Yes, God::A),
                  MissingCandidate);
  // Not reached: the left operand already decides.
  CHECK_FALSE(evaluate(parse("false and you answer no-word"), kS5Yes, God::A));
}

TEST_CASE("negation is pointwise complement on extensional questions") {
  testing::QuestionGenerator gen(7, /*self_referential=*/false);
  for (int i = 0; i < 300; ++i) {
    Question q = gen.next(4);
    for (const World& w : all_worlds()) {
      for (God g : kGods) {
        CHECK(evaluate(negate(q), w, g) == !evaluate(q, w, g));
      }
    }
  }
}

}  // TEST_SUITE
