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

#include "cra/terms.hpp"

#include <algorithm>
#include <iterator>

namespace cra {

// ---------------------------------------------------------------------------
// Relation / TestPred

Relation Relation::universal(const StateSpace& space) {
  Relation r;
  for (State a = 0; a < space.size(); ++a)
    for (State b = 0; b < space.size(); ++b) r.insert(a, b);
  return r;
}

Relation Relation::identity(const StateSpace& space) {
  Relation r;
  for (State a = 0; a < space.size(); ++a) r.insert(a, a);
  return r;
}

Relation Relation::complement(const StateSpace& space) const {
  Relation r;
  for (State a = 0; a < space.size(); ++a)
    for (State b = 0; b < space.size(); ++b)
      if (!contains(a, b)) r.insert(a, b);
  return r;
}

Relation Relation::intersect(const Relation& other) const {
  std::set<Pair> out;
  std::set_intersection(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                        std::inserter(out, out.end()));
  return Relation(std::move(out));
}

Relation Relation::unite(const Relation& other) const {
  std::set<Pair> out = pairs_;
  out.insert(other.pairs_.begin(), other.pairs_.end());
  return Relation(std::move(out));
}

bool Relation::subset_of(const Relation& other) const {
  return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

Relation Relation::restrict_domain(const std::set<State>& states) const {
  Relation r;
  for (const auto& [a, b] : pairs_)
    if (states.count(a)) r.insert(a, b);
  return r;
}

TestPred TestPred::all(const StateSpace& space) {
  TestPred t;
  for (State s = 0; s < space.size(); ++s) t.insert(s);
  return t;
}

TestPred TestPred::intersect(const TestPred& other) const {
  std::set<State> out;
  std::set_intersection(states_.begin(), states_.end(), other.states_.begin(),
                        other.states_.end(), std::inserter(out, out.end()));
  return TestPred(std::move(out));
}

TestPred TestPred::unite(const TestPred& other) const {
  std::set<State> out = states_;
  out.insert(other.states_.begin(), other.states_.end());
  return TestPred(std::move(out));
}

TestPred TestPred::minus(const TestPred& other) const {
  std::set<State> out;
  std::set_difference(states_.begin(), states_.end(), other.states_.begin(), other.states_.end(),
                      std::inserter(out, out.end()));
  return TestPred(std::move(out));
}

// ---------------------------------------------------------------------------
// Command

struct Command::Node {
  Op op = Op::Bot;
  TestPred test;
  Relation rel;
  std::optional<Command> lhs;
  std::optional<Command> rhs;
  unsigned exponent = 0;
  std::size_t size = 1;
};

const char* op_name(Op op) {
  switch (op) {
    case Op::Bot: return "Bot";
    case Op::Top: return "Top";
    case Op::Tau: return "Tau";
    case Op::Test: return "Test";
    case Op::Pgm: return "Pgm";
    case Op::Env: return "Env";
    case Op::Choice: return "Choice";
    case Op::Meet: return "Meet";
    case Op::Seq: return "Seq";
    case Op::Par: return "Par";
    case Op::WConj: return "WConj";
    case Op::FixedIter: return "FixedIter";
    case Op::FinIter: return "FinIter";
    case Op::OmIter: return "OmIter";
    case Op::InfIter: return "InfIter";
  }
  return "?";
}

namespace {

std::shared_ptr<const Command::Node> leaf(Op op) {
  auto n = std::make_shared<Command::Node>();
  n->op = op;
  return n;
}

}  // namespace

Command::Command() : Command(bot()) {}

Command Command::bot() {
  static const auto node = leaf(Op::Bot);
  return Command(node);
}

Command Command::top() {
  static const auto node = leaf(Op::Top);
  return Command(node);
}

Command Command::tau() {
  static const auto node = leaf(Op::Tau);
  return Command(node);
}

Command Command::test(TestPred t) {
  auto n = std::make_shared<Node>();
  n->op = Op::Test;
  n->test = std::move(t);
  return Command(std::move(n));
}

Command Command::pgm(Relation g) {
  auto n = std::make_shared<Node>();
  n->op = Op::Pgm;
  n->rel = std::move(g);
  return Command(std::move(n));
}

Command Command::env(Relation r) {
  auto n = std::make_shared<Node>();
  n->op = Op::Env;
  n->rel = std::move(r);
  return Command(std::move(n));
}

Command Command::binary(Op op, Command lhs, Command rhs) {
  switch (op) {
    case Op::Choice:
    case Op::Meet:
    case Op::Seq:
    case Op::Par:
    case Op::WConj: break;
    default: throw std::invalid_argument(std::string("not a binary operator: ") + op_name(op));
  }
  auto n = std::make_shared<Node>();
  n->op = op;
  n->size = 1 + lhs.size() + rhs.size();
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Command(std::move(n));
}

Command Command::choice(Command lhs, Command rhs) {
  return binary(Op::Choice, std::move(lhs), std::move(rhs));
}
Command Command::meet(Command lhs, Command rhs) {
  return binary(Op::Meet, std::move(lhs), std::move(rhs));
}
Command Command::seq(Command lhs, Command rhs) {
  return binary(Op::Seq, std::move(lhs), std::move(rhs));
}
Command Command::par(Command lhs, Command rhs) {
  return binary(Op::Par, std::move(lhs), std::move(rhs));
}
Command Command::wconj(Command lhs, Command rhs) {
  return binary(Op::WConj, std::move(lhs), std::move(rhs));
}

namespace {

Command::Node unary_node(Op op, Command body) {
  Command::Node n;
  n.op = op;
  n.size = 1 + body.size();
  n.lhs = std::move(body);
  return n;
}

}  // namespace

Command Command::fixed_iter(Command body, unsigned exponent) {
  auto n = std::make_shared<Node>(unary_node(Op::FixedIter, std::move(body)));
  n->exponent = exponent;
  return Command(std::move(n));
}
Command Command::fin_iter(Command body) {
  return Command(std::make_shared<Node>(unary_node(Op::FinIter, std::move(body))));
}
Command Command::om_iter(Command body) {
  return Command(std::make_shared<Node>(unary_node(Op::OmIter, std::move(body))));
}
Command Command::inf_iter(Command body) {
  return Command(std::make_shared<Node>(unary_node(Op::InfIter, std::move(body))));
}

Op Command::op() const { return node_->op; }

bool Command::is_binary() const {
  switch (op()) {
    case Op::Choice:
    case Op::Meet:
    case Op::Seq:
    case Op::Par:
    case Op::WConj: return true;
    default: return false;
  }
}

bool Command::is_iteration() const {
  switch (op()) {
    case Op::FixedIter:
    case Op::FinIter:
    case Op::OmIter:
    case Op::InfIter: return true;
    default: return false;
  }
}

const TestPred& Command::test_pred() const {
  if (op() != Op::Test) throw std::logic_error("test_pred() on non-test command");
  return node_->test;
}

const Relation& Command::relation() const {
  if (op() != Op::Pgm && op() != Op::Env)
    throw std::logic_error("relation() on non-step command");
  return node_->rel;
}

const Command& Command::lhs() const {
  if (!node_->lhs) throw std::logic_error("lhs() on leaf command");
  return *node_->lhs;
}

const Command& Command::rhs() const {
  if (!node_->rhs) throw std::logic_error("rhs() on non-binary command");
  return *node_->rhs;
}

unsigned Command::exponent() const { return node_->exponent; }

std::size_t Command::size() const { return node_->size; }

bool Command::operator==(const Command& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.op != b.op || a.size != b.size) return false;
  switch (a.op) {
    case Op::Bot:
    case Op::Top:
    case Op::Tau: return true;
    case Op::Test: return a.test == b.test;
    case Op::Pgm:
    case Op::Env: return a.rel == b.rel;
    case Op::FixedIter: return a.exponent == b.exponent && *a.lhs == *b.lhs;
    case Op::FinIter:
    case Op::OmIter:
    case Op::InfIter: return *a.lhs == *b.lhs;
    default: return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
  }
}

// ---------------------------------------------------------------------------
// Validation and derived constructors

namespace {

std::optional<Violation> validate_at(const Command& c, const StateSpace& space,
                                     const std::string& path) {
  switch (c.op()) {
    case Op::Test:
      for (State s : c.test_pred().states())
        if (!space.contains(s))
          return Violation{path, "state " + std::to_string(s) + " out of range"};
      return std::nullopt;
    case Op::Pgm:
    case Op::Env:
      for (const auto& [a, b] : c.relation().pairs())
        if (!space.contains(a) || !space.contains(b))
          return Violation{path, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") out of range"};
      return std::nullopt;
    default: break;
  }
  if (c.is_iteration()) return validate_at(c.body(), space, path + "/body");
  if (c.is_binary()) {
    if (auto v = validate_at(c.lhs(), space, path + "/lhs")) return v;
    return validate_at(c.rhs(), space, path + "/rhs");
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> validate(const Command& c, const StateSpace& space) {
  return validate_at(c, space, "root");
}

TestPred negate_test(const TestPred& t, const StateSpace& space) {
  return TestPred::all(space).minus(t);
}

Command assert_cmd(const TestPred& t, const StateSpace& space) {
  return Command::choice(Command::tau(),
                         Command::seq(Command::test(negate_test(t, space)), Command::top()));
}

bool is_atomic_term(const Command& c) {
  switch (c.op()) {
    case Op::Bot:
    case Op::Pgm:
    case Op::Env: return true;
    case Op::Choice: return is_atomic_term(c.lhs()) && is_atomic_term(c.rhs());
    default: return false;
  }
}

Command pseudo_atomic(const Command& a, const Command& b) {
  if (!is_atomic_term(a) || !is_atomic_term(b))
    throw std::invalid_argument("pseudo_atomic requires atomic-step arguments");
  return Command::choice(a, Command::seq(b, Command::top()));
}

// ---------------------------------------------------------------------------
// OpPair

namespace {

Command eps_all(const StateSpace& s) { return Command::env(Relation::universal(s)); }
Command alpha_all(const StateSpace& s) {
  return Command::choice(Command::pgm(Relation::universal(s)), eps_all(s));
}

}  // namespace

OpPair OpPair::par_seq(const StateSpace& space) {
  return OpPair(Op::Par, Op::Seq, Command::tau(), Command::om_iter(eps_all(space)),
                eps_all(space));
}

OpPair OpPair::conj_seq(const StateSpace& space) {
  return OpPair(Op::WConj, Op::Seq, Command::tau(), Command::om_iter(alpha_all(space)),
                alpha_all(space));
}

OpPair OpPair::conj_par(const StateSpace& space) {
  return OpPair(Op::WConj, Op::Par, Command::om_iter(eps_all(space)),
                Command::om_iter(alpha_all(space)), alpha_all(space));
}

std::string OpPair::name() const {
  if (sync_ == Op::Par) return "par_seq";
  return seq_like_ == Op::Seq ? "conj_seq" : "conj_par";
}

}  // namespace cra
