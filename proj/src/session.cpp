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

#include "boolos/session.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "boolos/belief.hpp"

namespace boolos {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(c));
  return s;
}

std::uint64_t uniform_below(std::uint64_t bound, std::mt19937_64& rng) {
  // Reject the low 2^64 mod bound values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

World sample_world(const Prior& prior, std::mt19937_64& rng) {
  mpz_class common = 1;
  for (const auto& w : prior.weights()) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), w.get_den().get_mpz_t());
  }
  if (!common.fits_ulong_p()) {
    throw std::invalid_argument("prior denominators are too large to sample");
  }
  std::uint64_t draw = uniform_below(common.get_ui(), rng);
  mpz_class cumulative = 0;
  for (const World& w : all_worlds()) {
    Rational scaled = prior.weight(w) * common;
    cumulative += scaled.get_num();
    if (draw < cumulative) return w;
  }
  throw std::logic_error("prior does not sum to one");
}

SessionTranscript run_session(const SessionConfig& config, std::istream& in,
                              std::ostream& out) {
  std::mt19937_64 rng(config.seed);
  SessionTranscript t;
  t.seed = config.seed;
  t.variant = config.variant;
  t.hidden = sample_world(config.prior, rng);
  t.hidden_prior = config.prior.weight(t.hidden);

  BeliefState belief(config.prior);
  out << "Three gods A, B and C are True, False and Random in some order.\n"
      << "You may ask up to " << config.max_questions
      << " yes-no questions, then guess a scenario S1..S6.\n";

  auto reject = [&](const std::string& input, const std::string& reason) {
    t.rejections.push_back({input, reason});
    out << "rejected: " << reason << "\n";
  };

  std::string line;
  while (!t.guess && std::getline(in, line)) {
    std::string cmd = trim(line);
    if (cmd.empty() || cmd[0] == '#') continue;
    std::string head = lower(cmd.substr(0, cmd.find(' ')));

    if (head == "guess") {
      auto s = parse_scenario(trim(cmd.substr(5)));
      if (!s) {
        reject(cmd, "guess must name one of S1..S6");
        continue;
      }
      t.guess = *s;
      t.guess_posterior = belief.scenario_mass(*s);
      break;
    }

    if (head != "ask") {
      reject(cmd, "expected \"ask <god>: <question>\" or \"guess <scenario>\"");
      continue;
    }
    auto colon = cmd.find(':');
    if (colon == std::string::npos) {
      reject(cmd, "expected \"ask <god>: <question>\"");
      continue;
    }
    auto god = parse_god(trim(cmd.substr(3, colon - 3)));
    if (!god) {
      reject(cmd, "unknown god; use A, B or C");
      continue;
    }
    std::optional<Question> q;
    try {
      q = parse(cmd.substr(colon + 1));
    } catch (const ParseError& e) {
      reject(cmd, e.what());
      continue;
    }
    if (static_cast<int>(t.turns.size()) >= config.max_questions) {
      reject(cmd, "no questions left; you may only ask " +
                      std::to_string(config.max_questions));
      continue;
    }
    if (auto bad = find_inadmissibility(*q, *god, belief, config.variant)) {
      reject(cmd, "not admissible for " + to_string(*god) + ": " +
                      bad->describe());
      continue;
    }

    Coin coin = draw_bit(rng) ? Coin::Tails : Coin::Heads;
    Answer a = draw_answer(*q, t.hidden, *god, coin, rng, config.variant);
    Rational p = answer_probability(belief, *q, *god, a, config.variant);
    belief = update(belief, *q, *god, a, config.variant);
    t.coins.push_back(coin);
    t.turns.push_back({*god, print(*q), coin, a, p});
    out << to_string(*god) << " answers: " << to_string(a) << "\n";
  }

  if (t.guess) {
    t.verdict = *t.guess == t.hidden.scenario ? "success" : "failure";
  } else {
    t.verdict = "no-guess";
  }
  out << "hidden world: " << t.hidden.label() << "\n"
      << "verdict: " << t.verdict << "\n";
  return t;
}

nlohmann::ordered_json to_json(const SessionTranscript& t) {
  nlohmann::ordered_json j;
  j["seed"] = t.seed;
  j["variant"] = to_string(t.variant);
  j["hidden_world"] = t.hidden.label();
  j["hidden_prior"] = format_rational(t.hidden_prior);
  nlohmann::ordered_json coins = nlohmann::ordered_json::array();
  for (Coin c : t.coins) coins.push_back(to_string(c));
  j["coins"] = std::move(coins);
  nlohmann::ordered_json turns = nlohmann::ordered_json::array();
  for (const auto& turn : t.turns) {
    nlohmann::ordered_json x;
    x["to"] = to_string(turn.addressee);
    x["q"] = turn.question;
    x["answer"] = to_string(turn.answer);
    x["answer_probability"] = format_rational(turn.answer_probability);
    turns.push_back(std::move(x));
  }
  j["turns"] = std::move(turns);
  nlohmann::ordered_json rejections = nlohmann::ordered_json::array();
  for (const auto& r : t.rejections) {
    rejections.push_back({{"input", r.input}, {"reason", r.reason}});
  }
  j["rejections"] = std::move(rejections);
  j["guess"] = t.guess ? nlohmann::ordered_json(to_string(*t.guess))
                       : nlohmann::ordered_json();
  j["guess_posterior"] = t.guess ? nlohmann::ordered_json(format_rational(t.guess_posterior))
                                 : nlohmann::ordered_json();
  j["verdict"] = t.verdict;
  return j;
}

std::string format_text(const SessionTranscript& t) {
  std::ostringstream out;
  out << "seed: " << t.seed << "\n"
      << "variant: " << to_string(t.variant) << "\n"
      << "hidden world: " << t.hidden.label() << " (prior "
      << format_rational(t.hidden_prior) << ")\n"
      << "coins:";
  for (Coin c : t.coins) out << " " << to_string(c);
  out << "\n";
  for (std::size_t i = 0; i < t.turns.size(); ++i) {
    const auto& turn = t.turns[i];
    out << "q" << i + 1 << ": ask " << to_string(turn.addressee) << ": "
        << turn.question << " -> " << to_string(turn.answer) << " (p "
        << format_rational(turn.answer_probability) << ")\n";
  }
  for (const auto& r : t.rejections) {
    out << "rejected: " << r.input << " -- " << r.reason << "\n";
  }
  out << "guess: " << (t.guess ? to_string(*t.guess) : std::string("none"));
  if (t.guess) out << " (posterior " << format_rational(t.guess_posterior) << ")";
  out << "\nverdict: " << t.verdict << "\n";
  return out.str();
}

}  // namespace boolos
