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

// search.hpp -- exhaustive strategy synthesis over extensional questions.
//
// An extensional question is identified with its truth table over the 12
// worlds (a 12-bit mask, bit i = world i in canonical order). Every god is
// asked every one of the 4096 tables at every node, modulo questions that
// induce the same reply likelihoods on the current support.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "boolos/oracle.hpp"
#include "boolos/rational.hpp"
#include "boolos/strategy.hpp"
#include "boolos/world.hpp"

namespace boolos {

/// True when k questions with N possible replies each cannot separate M
/// possibilities, i.e. N^k < M.
bool counting_bound(std::uint64_t m, std::uint64_t n, std::uint64_t k);

/// DNF question whose truth table over the 12 worlds is `truth_table`.
Question proposition_question(std::uint16_t truth_table);

struct SearchConfig {
  /// Cap on memoized belief states; exceeding it raises ResourceLimitError.
  std::size_t max_states = 2'000'000;
  /// Skip questions whose reply likelihoods on the current support match an
  /// earlier one.
  bool deduplicate = true;
  bool memoize = true;
  /// Depth 3 searches are refused unless this is set.
  bool allow_depth3 = false;
};

struct SearchResult {
  int depth = 0;
  bool certain_solver_exists = false;
  std::optional<StrategyTree> witness;
  Rational optimal_success;
  StrategyTree optimal_witness = StrategyTree::guess(Scenario::S1);
  std::uint64_t explored_classes = 0;
  std::uint64_t memo_states = 0;
};

class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::uint64_t explored_classes, std::uint64_t states);
  std::uint64_t explored_classes() const { return explored_classes_; }
  std::uint64_t states() const { return states_; }

 private:
  std::uint64_t explored_classes_;
  std::uint64_t states_;
};

/// Best strategy of at most `depth` questions. Ties go to the earliest
/// candidate: stopping before asking, then gods A < B < C, then ascending
/// truth table. Throws std::invalid_argument for a depth outside 0..3 (or 3
/// without allow_depth3) and ResourceLimitError when the memo fills up.
SearchResult exhaustive_search(int depth, const Prior& prior,
                               RandomVariant variant = RandomVariant::BoolosCoin,
                               const SearchConfig& config = {});

Rational optimal_success(int depth, const Prior& prior,
                         RandomVariant variant = RandomVariant::BoolosCoin,
                         const SearchConfig& config = {});

nlohmann::ordered_json to_json(const SearchResult& r);

}  // namespace boolos
