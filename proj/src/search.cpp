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

#include "boolos/search.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "boolos/belief.hpp"

namespace boolos {

bool counting_bound(std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  std::uint64_t outcomes = 1;
  for (std::uint64_t i = 0; i < k && outcomes < m; ++i) {
    if (n != 0 && outcomes > UINT64_MAX / n) return false;
    outcomes *= n;
  }
  return outcomes < m;
}

Question proposition_question(std::uint16_t truth_table) {
  constexpr std::uint16_t kAll = (1u << kNumWorlds) - 1;
  constexpr std::uint16_t kDaYes = 0x555;  // even indices
  truth_table &= kAll;
  if (truth_table == 0) return Question::constant(false);
  if (truth_table == kAll) return Question::constant(true);
  if (truth_table == kDaYes) return Question::da_means_yes();
  if (truth_table == (kAll & ~kDaYes)) return negate(Question::da_means_yes());

  std::optional<Question> out;
  for (Scenario s : kScenarios) {
    bool yes = (truth_table >> (index_of(s) * 2)) & 1;
    bool no = (truth_table >> (index_of(s) * 2 + 1)) & 1;
    if (!yes && !no) continue;
    Question term = conj(Question::is_role(God::A, role_of(s, God::A)),
                         Question::is_role(God::B, role_of(s, God::B)));
    if (!(yes && no)) {
      Question lang = Question::da_means_yes();
      term = conj(term, yes ? lang : negate(lang));
    }
    out = out ? disj(*out, term) : term;
  }
  return *out;
}

ResourceLimitError::ResourceLimitError(std::uint64_t explored_classes,
                                       std::uint64_t states)
    : std::runtime_error("search memo exceeded its cap after " +
                         std::to_string(states) + " states and " +
                         std::to_string(explored_classes) +
                         " explored question classes"),
      explored_classes_(explored_classes),
      states_(states) {}

namespace {

using Weights = std::array<Rational, kNumWorlds>;

struct Solution {
  Rational value;
  StrategyTree tree;
};

Rational max_scenario_mass(const Weights& w, Scenario* arg = nullptr) {
  Rational best = -1;
  for (Scenario s : kScenarios) {
    Rational m = w[index_of(s) * 2] + w[index_of(s) * 2 + 1];
    if (m > best) {
      best = m;
      if (arg) *arg = s;
    }
  }
  return best;
}

class Searcher {
 public:
  Searcher(RandomVariant variant, const SearchConfig& config)
      : config_(config) {
    // Reply behavior of an extensional question at a world depends only on
    // its truth value there, so tabulate the oracle once per (god, world).
    for (God g : kGods) {
      for (const World& w : all_worlds()) {
        for (int v = 0; v < 2; ++v) {
          Rational p = likelihood(Answer::Da, Question::constant(v != 0), w, g,
                                  variant);
          twice_da_[index_of(g)][w.index()][v] =
              static_cast<std::uint8_t>(mpz_class(p * 2).get_ui());
        }
      }
    }
  }

  Solution solve(const Weights& belief, int depth) {
    std::string key;
    if (config_.memoize) {
      key.reserve(96);
      key += static_cast<char>('0' + depth);
      for (const auto& x : belief) {
        key += ':';
        key += x.get_str();
      }
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Solution out = compute(belief, depth);
    if (config_.memoize) {
      if (memo_.size() >= config_.max_states) {
        throw ResourceLimitError(explored_, memo_.size());
      }
      memo_.emplace(std::move(key), out);
    }
    return out;
  }

  std::uint64_t explored() const { return explored_; }
  std::uint64_t states() const { return memo_.size(); }

 private:
  Solution compute(const Weights& belief, int depth) {
    Scenario best_guess = Scenario::S1;
    Rational best = max_scenario_mass(belief, &best_guess);
    StrategyTree best_tree = StrategyTree::guess(best_guess);
    if (depth == 0 || best == 1) return {best, best_tree};

    Rational scale = 1;  // 2^(depth - 1)
    for (int i = 1; i < depth; ++i) scale *= 2;

    std::uint16_t support = 0;
    for (std::size_t i = 0; i < kNumWorlds; ++i) {
      if (sgn(belief[i]) > 0) support |= static_cast<std::uint16_t>(1u << i);
    }

    for (God g : kGods) {
      const auto& table = twice_da_[index_of(g)];
      std::unordered_set<std::uint32_t> seen;
      for (std::uint32_t mask = 0; mask < (1u << kNumWorlds); ++mask) {
        if (config_.deduplicate) {
          std::uint32_t key = 0;
          for (std::size_t i = 0; i < kNumWorlds; ++i) {
            key *= 3;
            if ((support >> i) & 1) key += table[i][(mask >> i) & 1];
          }
          if (!seen.insert(key).second) continue;
        }
        ++explored_;

        Weights on_da, on_ja;
        Rational p_da = 0, p_ja = 0;
        for (std::size_t i = 0; i < kNumWorlds; ++i) {
          on_da[i] = 0;
          on_ja[i] = 0;
          if (!((support >> i) & 1)) continue;
          int twice = table[i][(mask >> i) & 1];
          if (twice != 0) on_da[i] = belief[i] * twice / 2;
          if (twice != 2) on_ja[i] = belief[i] * (2 - twice) / 2;
          p_da += on_da[i];
          p_ja += on_ja[i];
        }

        // A depth-d subtree wins at most 2^d times the largest scenario mass.
        Rational bound = std::min(Rational(max_scenario_mass(on_da) * scale),
                                  p_da) +
                         std::min(Rational(max_scenario_mass(on_ja) * scale),
                                  p_ja);
        // Cannot strictly beat the incumbent.
        if (bound <= best) continue;

        Rational value = 0;
        std::optional<StrategyTree> subtree[2];
        for (Answer a : kAnswers) {
          Weights& w = a == Answer::Da ? on_da : on_ja;
          const Rational& p = a == Answer::Da ? p_da : p_ja;
          if (sgn(p) == 0) {
            subtree[a == Answer::Da ? 0 : 1] = StrategyTree::guess(best_guess);
            continue;
          }
          for (auto& x : w) x /= p;
          Solution child = solve(w, depth - 1);
          value += p * child.value;
          subtree[a == Answer::Da ? 0 : 1] = child.tree;
        }
        if (value > best) {
          best = value;
          best_tree = StrategyTree::ask(
              g, proposition_question(static_cast<std::uint16_t>(mask)),
              *subtree[0], *subtree[1]);
          if (best == 1) return {best, best_tree};
        }
      }
    }
    return {best, best_tree};
  }

  SearchConfig config_;
  std::array<std::array<std::array<std::uint8_t, 2>, kNumWorlds>, 3> twice_da_{};
  std::unordered_map<std::string, Solution> memo_;
  std::uint64_t explored_ = 0;
};

}  // namespace

SearchResult exhaustive_search(int depth, const Prior& prior,
                               RandomVariant variant,
                               const SearchConfig& config) {
  if (depth < 0 || depth > 3) {
    throw std::invalid_argument("search depth must be between 0 and 3");
  }
  if (depth == 3 && !config.allow_depth3) {
    throw std::invalid_argument("full depth-3 search is disabled");
  }
  Searcher searcher(variant, config);
  Solution best = searcher.solve(prior.weights(), depth);

  SearchResult r;
  r.depth = depth;
  r.optimal_success = best.value;
  r.optimal_witness = best.tree;
  r.certain_solver_exists = best.value == 1;
  if (r.certain_solver_exists) r.witness = best.tree;
  r.explored_classes = searcher.explored();
  r.memo_states = searcher.states();
  return r;
}

Rational optimal_success(int depth, const Prior& prior, RandomVariant variant,
                         const SearchConfig& config) {
  return exhaustive_search(depth, prior, variant, config).optimal_success;
}

nlohmann::ordered_json to_json(const SearchResult& r) {
  nlohmann::ordered_json j;
  j["depth"] = r.depth;
  j["certain_solver_exists"] = r.certain_solver_exists;
  j["optimal_success"] = format_rational(r.optimal_success);
  j["optimal_witness"] = to_json(r.optimal_witness);
  j["witness"] = r.witness ? to_json(*r.witness) : nlohmann::ordered_json();
  j["explored_classes"] = r.explored_classes;
  j["memo_states"] = r.memo_states;
  return j;
}

}  // namespace boolos
