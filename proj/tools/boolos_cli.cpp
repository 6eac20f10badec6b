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

// boolos -- command-line front end.
//
//   boolos verify [--variant boolos|rabern] [--prior FILE] [--max-states N]
//   boolos search --depth 1..3 [--full-depth3] [--check-witness]
//   boolos eval --question TEXT [--world S5/da=no|all] [--addressee A|all]
//               [--mode truthful|lying|heads|tails|all]
//   boolos play --seed N [--script FILE] [--max-questions N]
//   boolos report
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource cap.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "boolos/belief.hpp"
#include "boolos/probability.hpp"
#include "boolos/search.hpp"
#include "boolos/session.hpp"
#include "boolos/strategy.hpp"
#include "boolos/verify.hpp"

namespace {

using namespace boolos;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string variant = "boolos";
  std::string prior_file;
  std::string format = "text";
  std::string out_file;
  std::size_t max_states = SearchConfig{}.max_states;

  RandomVariant parsed_variant() const {
    auto v = parse_variant(variant);
    if (!v) throw UsageError("--variant must be boolos or rabern");
    return *v;
  }

  Prior prior() const {
    if (prior_file.empty()) return uniform_prior();
    std::ifstream in(prior_file);
    if (!in) throw UsageError("cannot open prior file " + prior_file);
    try {
      return prior_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(prior_file + ": " + e.what());
    } catch (const InvalidPrior& e) {
      throw UsageError(prior_file + ": " + e.what());
    }
  }

  SearchConfig search() const {
    SearchConfig c;
    c.max_states = max_states;
    return c;
  }

  bool json() const { return format == "json"; }

  void emit(const std::string& text) const {
    if (out_file.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_file);
    out << text;
  }
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_search) {
  cmd->add_option("--variant", opts.variant, "Random's behavior")
      ->check(CLI::IsMember({"boolos", "rabern"}));
  cmd->add_option("--prior", opts.prior_file,
                  "JSON map from world label to \"num/den\" weight");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opts.out_file, "Write the report here");
  if (with_search) {
    cmd->add_option("--max-states", opts.max_states,
                    "Cap on memoized belief states");
  }
}

int cmd_verify(const CommonOptions& opts) {
  VerifyConfig config;
  config.variant = opts.parsed_variant();
  config.prior = opts.prior();
  config.search = opts.search();
  auto results = run_verification(config);
  opts.emit(opts.json() ? to_json(results).dump(2) + "\n" : format_text(results));
  return verification_exit_code(results);
}

int cmd_search(const CommonOptions& opts, int depth, bool full_depth3,
               bool check_witness) {
  RandomVariant variant = opts.parsed_variant();
  Prior prior = opts.prior();
  SearchConfig config = opts.search();
  config.allow_depth3 = full_depth3;

  SearchResult r;
  std::string source = "exhaustive";
  if (depth == 3 && !full_depth3) {
    // Existence at depth 3 is shown by the built-in solver.
    StrategyTree t = builtin_three_question();
    r.depth = 3;
    r.optimal_success = success_probability(t, prior, variant);
    r.optimal_witness = t;
    r.certain_solver_exists = r.optimal_success == 1;
    if (r.certain_solver_exists) r.witness = t;
    source = "builtin";
  } else {
    r = exhaustive_search(depth, prior, variant, config);
  }

  std::optional<bool> witness_ok;
  if (check_witness && r.witness) {
    witness_ok = is_certain_solver(*r.witness, prior, variant);
  }

  if (opts.json()) {
    auto j = to_json(r);
    j["source"] = source;
    if (witness_ok) j["witness_certain"] = *witness_ok;
    opts.emit(j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "depth: " << r.depth << "\n"
        << "source: " << source << "\n"
        << "certain_solver_exists: " << (r.certain_solver_exists ? "true" : "false")
        << "\n"
        << "optimal_success: " << format_rational(r.optimal_success) << "\n"
        << "explored_classes: " << r.explored_classes << "\n"
        << "memo_states: " << r.memo_states << "\n";
    if (witness_ok) {
      out << "witness_certain: " << (*witness_ok ? "true" : "false") << "\n";
    }
    out << "optimal_witness: " << to_json(r.optimal_witness).dump() << "\n";
    opts.emit(out.str());
  }
  if (witness_ok && !*witness_ok) return kExitFailure;
  return 0;
}

int cmd_eval(const CommonOptions& opts, const std::string& text,
             const std::string& world_spec, const std::string& addressee_spec,
             const std::string& mode_spec) {
  RandomVariant variant = opts.parsed_variant();
  Question q = parse(text);

  std::vector<World> worlds;
  if (world_spec == "all") {
    worlds.assign(all_worlds().begin(), all_worlds().end());
  } else if (auto w = parse_world(world_spec)) {
    worlds.push_back(*w);
  } else {
    throw UsageError("--world must be a label like S5/da=no, or all");
  }
  std::vector<God> gods;
  if (addressee_spec == "all") {
    gods.assign(kGods.begin(), kGods.end());
  } else if (auto g = parse_god(addressee_spec)) {
    gods.push_back(*g);
  } else {
    throw UsageError("--addressee must be A, B, C or all");
  }

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream text_out;
  text_out << "question: " << print(q) << "\n";
  for (const World& w : worlds) {
    for (God g : gods) {
      Role role = w.role(g);
      std::vector<std::pair<std::string, Mode>> modes;
      if (mode_spec == "all") {
        for (Mode m : possible_modes(w, g)) modes.emplace_back(to_string(m), m);
      } else if (auto m = parse_mode(mode_spec)) {
        modes.emplace_back(to_string(*m), *m);
      } else if (mode_spec == "heads" || mode_spec == "tails") {
        Coin c = mode_spec == "heads" ? Coin::Heads : Coin::Tails;
        Mode m = speaking_mode(role, c);
        modes.emplace_back(to_string(m) + " (" + mode_spec + ")", m);
      } else {
        throw UsageError("--mode must be truthful, lying, heads, tails or all");
      }
      for (const auto& [label, m] : modes) {
        AnswerSet set = answer_set(q, w, g, m, variant);
        rows.push_back({{"world", w.label()},
                        {"addressee", to_string(g)},
                        {"role", to_string(role)},
                        {"mode", label},
                        {"answers", set.str()}});
        text_out << w.label() << "  " << to_string(g) << "=" << to_string(role)
                 << "  " << label << "  " << set.str() << "\n";
      }
    }
  }
  if (opts.json()) {
    nlohmann::ordered_json j;
    j["question"] = print(q);
    j["rows"] = std::move(rows);
    opts.emit(j.dump(2) + "\n");
  } else {
    opts.emit(text_out.str());
  }
  return 0;
}

int cmd_play(const CommonOptions& opts, std::uint64_t seed,
             const std::string& script, int max_questions) {
  SessionConfig config;
  config.seed = seed;
  config.variant = opts.parsed_variant();
  config.prior = opts.prior();
  config.max_questions = max_questions;

  SessionTranscript t;
  if (script.empty() || script == "-") {
    t = run_session(config, std::cin, std::cout);
  } else {
    std::ifstream in(script);
    if (!in) throw UsageError("cannot open script " + script);
    t = run_session(config, in, std::cout);
  }
  std::string transcript =
      opts.json() ? to_json(t).dump(2) + "\n" : format_text(t);
  if (opts.out_file.empty()) std::cout << "\n";
  opts.emit(transcript);
  return 0;
}

int cmd_report(const CommonOptions& opts) {
  Theorem2Report r =
      theorem2_report(opts.prior(), opts.parsed_variant(), opts.search());
  opts.emit(opts.json() ? to_json(r).dump(2) + "\n" : format_table(r));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the three-gods puzzle"};
  app.require_subcommand(1);

  CommonOptions verify_opts, search_opts, eval_opts, play_opts, report_opts;

  auto* verify = app.add_subcommand("verify", "Run the verification checks");
  add_common(verify, verify_opts, true);

  auto* search = app.add_subcommand("search", "Exhaustive strategy search");
  add_common(search, search_opts, true);
  int depth = 1;
  bool full_depth3 = false, check_witness = false;
  search->add_option("--depth", depth, "Questions allowed")
      ->required()
      ->check(CLI::Range(1, 3));
  search->add_flag("--full-depth3", full_depth3,
                   "Search depth 3 exhaustively instead of using the built-in "
                   "witness");
  search->add_flag("--check-witness", check_witness,
                   "Verify the witness by path enumeration");

  auto* eval = app.add_subcommand("eval", "Answer sets of a question");
  add_common(eval, eval_opts, false);
  std::string question, world = "all", addressee = "all", mode = "all";
  eval->add_option("--question,-q", question, "Question in the DSL")->required();
  eval->add_option("--world", world, "World label or all");
  eval->add_option("--addressee", addressee, "A, B, C or all");
  eval->add_option("--mode", mode, "truthful, lying, heads, tails or all");

  auto* play = app.add_subcommand("play", "Interrogate a hidden world");
  add_common(play, play_opts, false);
  std::uint64_t seed = 0;
  std::string script;
  int max_questions = 3;
  play->add_option("--seed", seed, "Seed for the hidden world and coins");
  play->add_option("--script", script, "Read commands from FILE (default stdin)");
  play->add_option("--max-questions", max_questions, "Question budget")
      ->check(CLI::NonNegativeNumber);

  auto* report = app.add_subcommand("report", "Reference chances beside computed optima");
  add_common(report, report_opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_opts);
    if (*search) return cmd_search(search_opts, depth, full_depth3, check_witness);
    if (*eval) return cmd_eval(eval_opts, question, world, addressee, mode);
    if (*play) return cmd_play(play_opts, seed, script, max_questions);
    if (*report) return cmd_report(report_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
