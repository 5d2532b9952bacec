// Copyright 2026 The cra Authors
//
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

#include "cra/dsl.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "cra/rg.hpp"

namespace cra {

namespace {

enum class Tok { Ident, Number, LBrace, RBrace, LParen, RParen, Comma, Semi, AndAnd, OrOr, And, Or, End };

struct Token {
  Tok kind;
  std::string text;
  unsigned line;
  unsigned column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  unsigned line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, "", line, col};
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                                src[j] == '-'))
        ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else {
      const std::string_view two = src.substr(i, 2);
      if (two == "&&") {
        t.kind = Tok::AndAnd;
      } else if (two == "||") {
        t.kind = Tok::OrOr;
      } else {
        switch (ch) {
          case '{': t.kind = Tok::LBrace; break;
          case '}': t.kind = Tok::RBrace; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case ',': t.kind = Tok::Comma; break;
          case ';': t.kind = Tok::Semi; break;
          case '&': t.kind = Tok::And; break;
          case '|': t.kind = Tok::Or; break;
          default: throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
        }
      }
      t.text = t.kind == Tok::AndAnd || t.kind == Tok::OrOr ? std::string(two) : std::string(1, ch);
      advance(t.text.size());
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "end of input", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const StateSpace& space, const DslOptions& opts)
      : toks_(std::move(toks)), space_(space), opts_(opts) {}

  Command parse() {
    Command c = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return c;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, peek().line, peek().column);
  }
  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what + ", found '" + peek().text + "'");
    ++pos_;
  }

  Command expr() { return level(0); }

  // Loosest to tightest: | & || && ;
  Command level(int lvl) {
    static constexpr Tok kOps[] = {Tok::Or, Tok::And, Tok::OrOr, Tok::AndAnd, Tok::Semi};
    static constexpr Op kCtors[] = {Op::Choice, Op::Meet, Op::Par, Op::WConj, Op::Seq};
    if (lvl == 5) return atom();
    Command lhs = level(lvl + 1);
    while (peek().kind == kOps[lvl]) {
      ++pos_;
      lhs = Command::binary(kCtors[lvl], lhs, level(lvl + 1));
    }
    return lhs;
  }

  State state_literal() {
    if (peek().kind != Tok::Number) fail("expected a state number, found '" + peek().text + "'");
    const Token& t = next();
    const unsigned long v = std::stoul(t.text);
    if (v >= space_.size())
      throw ValidationError({"literal at " + std::to_string(t.line) + ":" + std::to_string(t.column),
                             "state " + t.text + " out of range for " +
                                 std::to_string(space_.size()) + " states"});
    return static_cast<State>(v);
  }

  TestPred states() {
    expect(Tok::LBrace, "'{'");
    TestPred t;
    if (peek().kind != Tok::RBrace) {
      t.insert(state_literal());
      while (peek().kind == Tok::Comma) {
        ++pos_;
        t.insert(state_literal());
      }
    }
    expect(Tok::RBrace, "'}'");
    return t;
  }

  Relation pairs() {
    expect(Tok::LBrace, "'{'");
    Relation r;
    auto pair = [&] {
      expect(Tok::LParen, "'('");
      const State a = state_literal();
      expect(Tok::Comma, "','");
      const State b = state_literal();
      expect(Tok::RParen, "')'");
      r.insert(a, b);
    };
    if (peek().kind != Tok::RBrace) {
      pair();
      while (peek().kind == Tok::Comma) {
        ++pos_;
        pair();
      }
    }
    expect(Tok::RBrace, "'}'");
    return r;
  }

  Command atom() {
    if (peek().kind == Tok::LParen) {
      ++pos_;
      Command c = expr();
      expect(Tok::RParen, "')'");
      return c;
    }
    if (peek().kind != Tok::Ident) fail("expected a command, found '" + peek().text + "'");
    const std::string name = next().text;
    if (name == "bot") return Command::bot();
    if (name == "top") return Command::top();
    if (name == "tau") return Command::tau();
    if (name == "skip") return skip(space_);
    if (name == "chaos") return chaos(space_);
    if (name == "term") return term_cmd(space_);
    if (name == "test") return Command::test(states());
    if (name == "assert") return assert_cmd(states(), space_);
    if (name == "post") return post(states(), space_);
    if (name == "pgm") return Command::pgm(pairs());
    if (name == "env") return Command::env(pairs());
    if (name == "guar") return guar(pairs(), space_);
    if (name == "rely") return rely(pairs(), space_);
    if (name == "fin" || name == "om" || name == "inf") {
      expect(Tok::LParen, "'('");
      Command body = expr();
      expect(Tok::RParen, "')'");
      if (name == "fin") return Command::fin_iter(body);
      if (name == "om") return Command::om_iter(body);
      return Command::inf_iter(body);
    }
    if (name == "pow") {
      expect(Tok::LParen, "'('");
      Command body = expr();
      expect(Tok::Comma, "','");
      if (peek().kind != Tok::Number) fail("expected an exponent");
      const Token& t = next();
      const unsigned long n = std::stoul(t.text);
      if (opts_.max_pow && n > *opts_.max_pow)
        throw ParseError("pow exponent " + t.text + " exceeds the model bound " +
                             std::to_string(*opts_.max_pow),
                         t.line, t.column);
      expect(Tok::RParen, "')'");
      return Command::fixed_iter(body, static_cast<unsigned>(n));
    }
    --pos_;
    fail("unknown command '" + name + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const StateSpace& space_;
  const DslOptions& opts_;
};

// ---------------------------------------------------------------------------
// Rendering

int precedence(Op op) {
  switch (op) {
    case Op::Choice: return 1;
    case Op::Meet: return 2;
    case Op::Par: return 3;
    case Op::WConj: return 4;
    case Op::Seq: return 5;
    default: return 6;
  }
}

const char* infix(Op op) {
  switch (op) {
    case Op::Choice: return " | ";
    case Op::Meet: return " & ";
    case Op::Par: return " || ";
    case Op::WConj: return " && ";
    default: return " ; ";
  }
}

class Renderer {
 public:
  explicit Renderer(const StateSpace* space) : space_(space) {}

  std::string operator()(const Command& c, int min_prec = 0) const {
    if (auto s = sugar(c)) return *s;
    std::string body;
    int prec = precedence(c.op());
    switch (c.op()) {
      case Op::Bot: body = "bot"; break;
      case Op::Top: body = "top"; break;
      case Op::Tau: body = "tau"; break;
      case Op::Test: body = "test" + render_test(c.test_pred()); break;
      case Op::Pgm: body = "pgm" + render_relation(c.relation()); break;
      case Op::Env: body = "env" + render_relation(c.relation()); break;
      case Op::FixedIter:
        body = "pow(" + (*this)(c.body()) + ", " + std::to_string(c.exponent()) + ")";
        break;
      case Op::FinIter: body = "fin(" + (*this)(c.body()) + ")"; break;
      case Op::OmIter: body = "om(" + (*this)(c.body()) + ")"; break;
      case Op::InfIter: body = "inf(" + (*this)(c.body()) + ")"; break;
      default:
        body = (*this)(c.lhs(), prec) + infix(c.op()) + (*this)(c.rhs(), prec + 1);
        break;
    }
    return prec < min_prec ? "(" + body + ")" : body;
  }

 private:
  std::optional<std::string> sugar(const Command& c) const {
    if (!space_) return std::nullopt;
    const StateSpace& s = *space_;
    if (c == skip(s)) return "skip";
    if (c == chaos(s)) return "chaos";
    if (c == term_cmd(s)) return "term";
    if (c.op() == Op::Seq && c.lhs() == term_cmd(s) && c.rhs().op() == Op::Test)
      return "post" + render_test(c.rhs().test_pred());
    if (c.op() == Op::Choice && c.lhs().op() == Op::Tau && c.rhs().op() == Op::Seq &&
        c.rhs().lhs().op() == Op::Test && c.rhs().rhs().op() == Op::Top)
      return "assert" + render_test(negate_test(c.rhs().lhs().test_pred(), s));
    if (c.op() == Op::OmIter && c.body().op() == Op::Choice) {
      const Command& b = c.body();
      if (b.lhs().op() == Op::Pgm && b.rhs() == bigstep_eps(s))
        return "guar" + render_relation(b.lhs().relation());
      if (b.lhs() == bigstep_alpha(s) && b.rhs().op() == Op::Seq &&
          b.rhs().lhs().op() == Op::Env && b.rhs().rhs().op() == Op::Top)
        return "rely" + render_relation(b.rhs().lhs().relation().complement(s));
    }
    return std::nullopt;
  }

  const StateSpace* space_;
};

}  // namespace

Command parse_dsl(std::string_view src, const StateSpace& space, const DslOptions& opts) {
  Parser p(lex(src), space, opts);
  Command c = p.parse();
  if (auto v = validate(c, space)) throw ValidationError(*v);
  return c;
}

std::string render(const Command& c) { return Renderer(nullptr)(c); }

std::string render(const Command& c, const StateSpace& space) { return Renderer(&space)(c); }

std::string render_relation(const Relation& r) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    out << (first ? "" : ",") << '(' << a << ',' << b << ')';
    first = false;
  }
  out << '}';
  return out.str();
}

std::string render_test(const TestPred& t) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (State s : t.states()) {
    out << (first ? "" : ",") << s;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace cra
