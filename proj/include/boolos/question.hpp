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

// question.hpp -- yes-no questions: AST, text DSL, and evaluation.
//
// Grammar (keywords case-insensitive):
//
//   formula  := or_expr (("iff" | "implies") or_expr)?
//   or_expr  := and_expr ("or" and_expr)*
//   and_expr := unary ("and" unary)*
//   unary    := "not" unary | "(" formula ")" | atom
//   atom     := "true" | "false" | GOD "is" ROLE | "da means yes"
//             | "ja means yes" | "you are" ROLE | "you answer no-word"
//
// "ja means yes" is sugar for not (da means yes). "you answer no-word" is the
// self-referential atom: it holds iff the word the addressee is about to utter
// means "no".

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boolos/world.hpp"

namespace boolos {

enum class Answer : std::uint8_t { Da, Ja };

inline constexpr std::array<Answer, 2> kAnswers = {Answer::Da, Answer::Ja};

std::string to_string(Answer a);  // "Da" / "Ja"
std::optional<Answer> parse_answer(std::string_view text);

/// Whether `a` means "yes" under language `l`.
constexpr bool means_yes(Answer a, Language l) {
  return (a == Answer::Da) == (l == Language::DaYes);
}

/// Immutable question AST with value semantics. Subtrees are shared.
class Question {
 public:
  enum class Kind : std::uint8_t {
    ConstTrue,
    ConstFalse,
    IsRole,
    DaMeansYes,
    YouAre,
    AnswerMeansNo,
    Not,
    And,
    Or,
    Implies,
    Iff,
  };

  static Question constant(bool value);
  static Question is_role(God g, Role r);
  static Question da_means_yes();
  static Question you_are(Role r);
  static Question answer_means_no();

  friend Question negate(Question q);
  friend Question conj(Question lhs, Question rhs);
  friend Question disj(Question lhs, Question rhs);
  friend Question implies(Question lhs, Question rhs);
  friend Question iff(Question lhs, Question rhs);

  Kind kind() const { return node_->kind; }
  God god() const { return node_->god; }
  Role role() const { return node_->role; }
  /// Operand of Not, or left operand of a binary connective.
  Question lhs() const { return Question(node_->lhs); }
  Question rhs() const { return Question(node_->rhs); }

  bool is_atom() const { return kind() < Kind::Not; }
  bool is_binary() const { return kind() > Kind::Not; }

  /// Structural equality.
  friend bool operator==(const Question& a, const Question& b);

 private:
  struct Node {
    Kind kind;
    God god = God::A;
    Role role = Role::True;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Question(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Question make(Kind k, std::shared_ptr<const Node> lhs = nullptr,
                       std::shared_ptr<const Node> rhs = nullptr);

  std::shared_ptr<const Node> node_;
};

Question negate(Question q);
Question conj(Question lhs, Question rhs);
Question disj(Question lhs, Question rhs);
Question implies(Question lhs, Question rhs);
Question iff(Question lhs, Question rhs);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  /// Byte offset into the input where the problem was detected.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Question parse(std::string_view text);
std::string print(const Question& q);

/// True iff the AST contains the self-referential atom.
bool is_self_referential(const Question& q);

class MissingCandidate : public std::logic_error {
 public:
  MissingCandidate()
      : std::logic_error(
            "self-referential atom evaluated without a candidate answer") {}
};

/// Truth value of `q` in world `w` when put to `addressee`, assuming the reply
/// will be `candidate`. Connectives short-circuit left to right; the
/// candidate is only required if "you answer no-word" is actually reached.
bool evaluate(const Question& q, const World& w, God addressee,
              std::optional<Answer> candidate = std::nullopt);

}  // namespace boolos
