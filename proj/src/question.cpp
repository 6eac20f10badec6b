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

#include "boolos/question.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace boolos {

std::string to_string(Answer a) { return a == Answer::Da ? "Da" : "Ja"; }

std::optional<Answer> parse_answer(std::string_view text) {
  std::string lower(text);
  for (auto& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "da") return Answer::Da;
  if (lower == "ja") return Answer::Ja;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Construction

Question Question::make(Kind k, std::shared_ptr<const Node> lhs,
                        std::shared_ptr<const Node> rhs) {
  auto node = std::make_shared<Node>();
  node->kind = k;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Question(std::move(node));
}

Question Question::constant(bool value) {
  return make(value ? Kind::ConstTrue : Kind::ConstFalse);
}

Question Question::is_role(God g, Role r) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::IsRole;
  node->god = g;
  node->role = r;
  return Question(std::move(node));
}

Question Question::da_means_yes() { return make(Kind::DaMeansYes); }

Question Question::you_are(Role r) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::YouAre;
  node->role = r;
  return Question(std::move(node));
}

Question Question::answer_means_no() { return make(Kind::AnswerMeansNo); }

Question negate(Question q) {
  return Question::make(Question::Kind::Not, std::move(q.node_));
}
Question conj(Question lhs, Question rhs) {
  return Question::make(Question::Kind::And, std::move(lhs.node_),
                        std::move(rhs.node_));
}
Question disj(Question lhs, Question rhs) {
  return Question::make(Question::Kind::Or, std::move(lhs.node_),
                        std::move(rhs.node_));
}
Question implies(Question lhs, Question rhs) {
  return Question::make(Question::Kind::Implies, std::move(lhs.node_),
                        std::move(rhs.node_));
}
Question iff(Question lhs, Question rhs) {
  return Question::make(Question::Kind::Iff, std::move(lhs.node_),
                        std::move(rhs.node_));
}

bool operator==(const Question& a, const Question& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Question::Kind::IsRole:
      return a.god() == b.god() && a.role() == b.role();
    case Question::Kind::YouAre:
      return a.role() == b.role();
    case Question::Kind::Not:
      return a.lhs() == b.lhs();
    case Question::Kind::And:
    case Question::Kind::Or:
    case Question::Kind::Implies:
    case Question::Kind::Iff:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    default:
      return true;
  }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength of each grammar level; a child printed in a context that
// binds tighter than itself gets parenthesized.
enum Level { kFormula = 0, kOr = 1, kAnd = 2, kUnary = 3 };

void print_to(const Question& q, int context, std::string& out) {
  using K = Question::Kind;
  switch (q.kind()) {
    case K::ConstTrue: out += "true"; return;
    case K::ConstFalse: out += "false"; return;
    case K::IsRole:
      out += to_string(q.god()) + " is " + to_string(q.role());
      return;
    case K::DaMeansYes: out += "da means yes"; return;
    case K::YouAre: out += "you are " + to_string(q.role()); return;
    case K::AnswerMeansNo: out += "you answer no-word"; return;
    case K::Not: {
      Question operand = q.lhs();
      out += "not ";
      bool bare = operand.kind() == K::ConstTrue ||
                  operand.kind() == K::ConstFalse;
      if (bare) {
        print_to(operand, kUnary, out);
      } else {
        out += "(";
        print_to(operand, kFormula, out);
        out += ")";
      }
      return;
    }
    case K::And:
    case K::Or:
    case K::Implies:
    case K::Iff: {
      int own = q.kind() == K::And ? kAnd : q.kind() == K::Or ? kOr : kFormula;
      // and/or are left-associative; iff/implies do not chain at all.
      int left = own == kFormula ? kOr : own;
      int right = own + 1;
      const char* word = q.kind() == K::And      ? " and "
                         : q.kind() == K::Or     ? " or "
                         : q.kind() == K::Iff    ? " iff "
                                                 : " implies ";
      bool parens = context > own;
      if (parens) out += "(";
      print_to(q.lhs(), left, out);
      out += word;
      print_to(q.rhs(), right, out);
      if (parens) out += ")";
      return;
    }
  }
}

}  // namespace

std::string print(const Question& q) {
  std::string out;
  print_to(q, kFormula, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " +
                         message),
      position_(position) {}

namespace {

struct Token {
  std::string text;  // lower-cased for words; "(" or ")" for parens
  std::string raw;
  std::size_t pos;
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      tokens.push_back({std::string(1, c), std::string(1, c), i});
      ++i;
    } else if (is_word_char(c)) {
      std::size_t start = i;
      while (i < text.size() && is_word_char(text[i])) ++i;
      std::string raw(text.substr(start, i - start));
      std::string lower = raw;
      for (auto& ch : lower) ch = static_cast<char>(std::tolower(ch));
      tokens.push_back({lower, raw, start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  return tokens;
}

class Parser {
 public:
  Parser(std::string_view text) : tokens_(tokenize(text)), end_(text.size()) {}

  Question parse_question() {
    if (tokens_.empty()) throw ParseError("empty question", 0);
    Question q = formula();
    if (!at_end()) {
      throw ParseError("unexpected '" + peek().raw + "'", peek().pos);
    }
    return q;
  }

 private:
  bool at_end() const { return next_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[next_]; }
  std::size_t pos() const { return at_end() ? end_ : peek().pos; }
  bool peek_is(std::string_view word) const {
    return !at_end() && peek().text == word;
  }

  const Token& take(std::string_view expected) {
    if (at_end()) {
      throw ParseError("expected '" + std::string(expected) +
                           "' but input ended",
                       end_);
    }
    return tokens_[next_++];
  }

  void expect(std::string_view word) {
    const Token& t = take(word);
    if (t.text != word) {
      throw ParseError(
          "expected '" + std::string(word) + "', found '" + t.raw + "'", t.pos);
    }
  }

  Question formula() {
    Question lhs = or_expr();
    if (peek_is("iff")) {
      ++next_;
      return iff(lhs, or_expr());
    }
    if (peek_is("implies")) {
      ++next_;
      return implies(lhs, or_expr());
    }
    return lhs;
  }

  Question or_expr() {
    Question q = and_expr();
    while (peek_is("or")) {
      ++next_;
      q = disj(q, and_expr());
    }
    return q;
  }

  Question and_expr() {
    Question q = unary();
    while (peek_is("and")) {
      ++next_;
      q = conj(q, unary());
    }
    return q;
  }

  Question unary() {
    if (peek_is("not")) {
      ++next_;
      return negate(unary());
    }
    if (peek_is("(")) {
      ++next_;
      Question q = formula();
      expect(")");
      return q;
    }
    return atom();
  }

  Role role_token() {
    const Token& t = take("role");
    auto r = parse_role(t.text);
    if (!r) throw ParseError("unknown role '" + t.raw + "'", t.pos);
    return *r;
  }

  Question atom() {
    if (at_end()) throw ParseError("expected a question but input ended", end_);
    const Token& t = tokens_[next_++];
    if (t.text == "true") return Question::constant(true);
    if (t.text == "false") return Question::constant(false);
    if (t.text == "da" || t.text == "ja") {
      expect("means");
      expect("yes");
      Question q = Question::da_means_yes();
      return t.text == "da" ? q : negate(q);
    }
    if (t.text == "you") {
      if (peek_is("are")) {
        ++next_;
        return Question::you_are(role_token());
      }
      expect("answer");
      expect("no-word");
      return Question::answer_means_no();
    }
    if (peek_is("is")) {
      auto g = parse_god(t.text);
      if (!g) throw ParseError("unknown god '" + t.raw + "'", t.pos);
      ++next_;
      return Question::is_role(*g, role_token());
    }
    throw ParseError("unexpected '" + t.raw + "'", t.pos);
  }

  std::vector<Token> tokens_;
  std::size_t next_ = 0;
  std::size_t end_;
};

}  // namespace

Question parse(std::string_view text) { return Parser(text).parse_question(); }

// ---------------------------------------------------------------------------
// Semantics

bool is_self_referential(const Question& q) {
  switch (q.kind()) {
    case Question::Kind::AnswerMeansNo:
      return true;
    case Question::Kind::Not:
      return is_self_referential(q.lhs());
    case Question::Kind::And:
    case Question::Kind::Or:
    case Question::Kind::Implies:
    case Question::Kind::Iff:
      return is_self_referential(q.lhs()) || is_self_referential(q.rhs());
    default:
      return false;
  }
}

bool evaluate(const Question& q, const World& w, God addressee,
              std::optional<Answer> candidate) {
  using K = Question::Kind;
  switch (q.kind()) {
    case K::ConstTrue: return true;
    case K::ConstFalse: return false;
    case K::IsRole: return w.role(q.god()) == q.role();
    case K::DaMeansYes: return w.da_means_yes();
    case K::YouAre: return w.role(addressee) == q.role();
    case K::AnswerMeansNo:
      if (!candidate) throw MissingCandidate();
      return !means_yes(*candidate, w.language);
    case K::Not: return !evaluate(q.lhs(), w, addressee, candidate);
    case K::And:
      return evaluate(q.lhs(), w, addressee, candidate) &&
             evaluate(q.rhs(), w, addressee, candidate);
    case K::Or:
      return evaluate(q.lhs(), w, addressee, candidate) ||
             evaluate(q.rhs(), w, addressee, candidate);
    case K::Implies:
      return !evaluate(q.lhs(), w, addressee, candidate) ||
             evaluate(q.rhs(), w, addressee, candidate);
    case K::Iff:
      return evaluate(q.lhs(), w, addressee, candidate) ==
             evaluate(q.rhs(), w, addressee, candidate);
  }
  return false;
}

}  // namespace boolos
