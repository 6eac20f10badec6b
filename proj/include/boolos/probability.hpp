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

// probability.hpp -- published chance-of-success figures next to computed
// optima.
//
// The published figures for k = 0, 1, 2 questions are transcribed as fixed
// constants together with the case products they were derived from. They are
// reported side by side with the exhaustive-search optimum; neither ever
// replaces the other.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "boolos/oracle.hpp"
#include "boolos/question.hpp"
#include "boolos/rational.hpp"
#include "boolos/search.hpp"
#include "boolos/world.hpp"

namespace boolos {

/// Published success probability with k questions: 1/6, 1/6, 1/3.
/// Throws std::out_of_range outside 0..2.
Rational paper_claimed(int k);

/// The published case products for k = 1 ((1/3)(1/2), (2/3)(1/4)) and
/// k = 2 ((1/3)(1), (2/3)(1)(1/2)), multiplied out exactly. Throws
/// std::out_of_range outside 1..2.
std::vector<Rational> paper_case_terms(int k);

/// Chance that `q` is admissible for the god it is first put to, split by
/// the face of Random's coin: 1/2 * P(admissible | heads) and
/// 1/2 * P(admissible | tails), with the addressee and the world uniform.
std::pair<Rational, Rational> first_step_admissibility(
    const Question& q, RandomVariant variant = RandomVariant::BoolosCoin);

struct Theorem2Row {
  int k = 0;
  Rational paper_claimed;
  std::vector<Rational> paper_case_terms;  // empty for k = 0
  Rational engine_optimum;
  bool claimed_agrees = false;    // engine_optimum == paper_claimed
  bool case_sum_agrees = false;   // engine_optimum == sum of case terms
};

struct Theorem2Report {
  std::vector<Theorem2Row> rows;  // k = 0, 1, 2
};

/// Throws ResourceLimitError from the underlying search.
Theorem2Report theorem2_report(const Prior& prior,
                               RandomVariant variant = RandomVariant::BoolosCoin,
                               const SearchConfig& config = {});

nlohmann::ordered_json to_json(const Theorem2Report& r);
/// Aligned plain-text table.
std::string format_table(const Theorem2Report& r);

}  // namespace boolos
