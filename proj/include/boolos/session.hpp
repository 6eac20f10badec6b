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

// session.hpp -- a seeded interrogation against a hidden world.
//
// Input is line oriented:
//
//   ask <god>: <question>     e.g. "ask A: da means yes iff B is Random"
//   guess <scenario>          e.g. "guess S3"
//
// Blank lines and lines starting with '#' are ignored. A question that does
// not parse, or that the addressee might be unable to answer given what the
// interrogator knows so far, is rejected without using up the budget.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "boolos/oracle.hpp"
#include "boolos/question.hpp"
#include "boolos/rational.hpp"
#include "boolos/world.hpp"

namespace boolos {

struct SessionConfig {
  std::uint64_t seed = 0;
  RandomVariant variant = RandomVariant::BoolosCoin;
  Prior prior = uniform_prior();
  int max_questions = 3;
};

struct SessionTurn {
  God addressee;
  std::string question;  // canonical DSL text
  Coin coin;
  Answer answer;
  Rational answer_probability;  // P(answer) under the interrogator's belief
};

struct SessionRejection {
  std::string input;
  std::string reason;
};

struct SessionTranscript {
  std::uint64_t seed = 0;
  RandomVariant variant = RandomVariant::BoolosCoin;
  World hidden;
  Rational hidden_prior;
  std::vector<Coin> coins;
  std::vector<SessionTurn> turns;
  std::vector<SessionRejection> rejections;
  std::optional<Scenario> guess;
  Rational guess_posterior;  // interrogator's belief in the guess
  std::string verdict;       // "success", "failure" or "no-guess"
};

/// Draws a world from `prior` using one exact uniform integer draw.
World sample_world(const Prior& prior, std::mt19937_64& rng);

/// Plays one session reading commands from `in` and writing the
/// interrogator-facing dialogue to `out`. The hidden world is only shown
/// after a guess or at end of input.
SessionTranscript run_session(const SessionConfig& config, std::istream& in,
                              std::ostream& out);

nlohmann::ordered_json to_json(const SessionTranscript& t);
std::string format_text(const SessionTranscript& t);

}  // namespace boolos
