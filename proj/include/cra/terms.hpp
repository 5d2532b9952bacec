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

#ifndef CRA_TERMS_HPP_
#define CRA_TERMS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace cra {

using State = std::uint32_t;

/// Program states are the dense integers 0..size-1.
class StateSpace {
 public:
  explicit StateSpace(unsigned size) : size_(size) {
    if (size == 0) throw std::invalid_argument("state space must have at least one state");
  }
  unsigned size() const { return size_; }
  bool contains(State s) const { return s < size_; }
  bool operator==(const StateSpace&) const = default;

 private:
  unsigned size_;
};

/// A binary relation between program states.
class Relation {
 public:
  using Pair = std::pair<State, State>;

  Relation() = default;
  Relation(std::initializer_list<Pair> pairs) : pairs_(pairs) {}
  explicit Relation(std::set<Pair> pairs) : pairs_(std::move(pairs)) {}

  static Relation universal(const StateSpace& space);
  static Relation identity(const StateSpace& space);

  const std::set<Pair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  bool contains(State from, State to) const { return pairs_.count({from, to}) != 0; }
  void insert(State from, State to) { pairs_.emplace(from, to); }

  Relation complement(const StateSpace& space) const;
  Relation intersect(const Relation& other) const;
  Relation unite(const Relation& other) const;
  bool subset_of(const Relation& other) const;
  /// Restricts the domain to pre-states in `states`.
  Relation restrict_domain(const std::set<State>& states) const;

  auto operator<=>(const Relation&) const = default;

 private:
  std::set<Pair> pairs_;
};

/// An instantaneous state predicate; the command `Test` built from it is a test.
class TestPred {
 public:
  TestPred() = default;
  TestPred(std::initializer_list<State> states) : states_(states) {}
  explicit TestPred(std::set<State> states) : states_(std::move(states)) {}

  static TestPred all(const StateSpace& space);

  const std::set<State>& states() const { return states_; }
  bool empty() const { return states_.empty(); }
  bool contains(State s) const { return states_.count(s) != 0; }
  void insert(State s) { states_.insert(s); }

  TestPred intersect(const TestPred& other) const;
  TestPred unite(const TestPred& other) const;
  TestPred minus(const TestPred& other) const;

  auto operator<=>(const TestPred&) const = default;

 private:
  std::set<State> states_;
};

enum class Op {
  Bot,
  Top,
  Tau,
  Test,
  Pgm,
  Env,
  Choice,
  Meet,
  Seq,
  Par,
  WConj,
  FixedIter,
  FinIter,
  OmIter,
  InfIter,
};

const char* op_name(Op op);

/// Immutable command term. Copies share structure.
class Command {
 public:
  Command();  // Bot

  static Command bot();
  static Command top();
  static Command tau();
  static Command test(TestPred t);
  static Command pgm(Relation g);
  static Command env(Relation r);
  static Command choice(Command lhs, Command rhs);
  static Command meet(Command lhs, Command rhs);
  static Command seq(Command lhs, Command rhs);
  static Command par(Command lhs, Command rhs);
  static Command wconj(Command lhs, Command rhs);
  static Command fixed_iter(Command body, unsigned exponent);
  static Command fin_iter(Command body);
  static Command om_iter(Command body);
  static Command inf_iter(Command body);
  /// Generic binary constructor for Choice/Meet/Seq/Par/WConj.
  static Command binary(Op op, Command lhs, Command rhs);

  Op op() const;
  bool is_binary() const;
  bool is_iteration() const;  // FixedIter, FinIter, OmIter, InfIter
  const TestPred& test_pred() const;
  const Relation& relation() const;
  const Command& lhs() const;  // also the body of iterations
  const Command& rhs() const;
  const Command& body() const { return lhs(); }
  unsigned exponent() const;

  std::size_t size() const;  // node count

  bool operator==(const Command& other) const;
  bool operator!=(const Command& other) const { return !(*this == other); }

  struct Node;  // defined in terms.cpp

 private:
  explicit Command(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A path from the root to the first out-of-range subterm.
struct Violation {
  std::string path;     // "root", "root/lhs", "root/rhs/body", ...
  std::string message;
};

/// Empty result means every relation and test in `c` lies within `space`.
std::optional<Violation> validate(const Command& c, const StateSpace& space);

TestPred negate_test(const TestPred& t, const StateSpace& space);

/// ⦃t⦄ = tau ⊔ (¬t ; top): aborts from states where t does not hold.
Command assert_cmd(const TestPred& t, const StateSpace& space);

/// True for Bot, Pgm, Env and choices of these: commands that take one step.
bool is_atomic_term(const Command& c);

/// a ⊔ (b ; top) for atomic a and b.
Command pseudo_atomic(const Command& a, const Command& b);

/// The synchronous/sequential operator pair of a biquantale instance.
class OpPair {
 public:
  static OpPair par_seq(const StateSpace& space);    // (∥, ;, tau, skip)
  static OpPair conj_seq(const StateSpace& space);   // (⋒, ;, tau, chaos)
  static OpPair conj_par(const StateSpace& space);   // (⋒, ∥, skip, chaos)

  Op sync_op() const { return sync_; }
  Op seq_like_op() const { return seq_like_; }
  /// Neutral element of the sequential-like operator.
  const Command& eta() const { return eta_; }
  /// Neutral element of the synchronous operator.
  const Command& iota() const { return iota_; }
  /// Atomic neutral of the synchronous operator (eps or alpha).
  const Command& atomic_iota() const { return atomic_iota_; }
  std::string name() const;

  Command sync(const Command& a, const Command& b) const { return Command::binary(sync_, a, b); }
  Command seq_like(const Command& a, const Command& b) const {
    return Command::binary(seq_like_, a, b);
  }

 private:
  OpPair(Op sync, Op seq_like, Command eta, Command iota, Command atomic_iota)
      : sync_(sync), seq_like_(seq_like), eta_(std::move(eta)), iota_(std::move(iota)),
        atomic_iota_(std::move(atomic_iota)) {}
  Op sync_;
  Op seq_like_;
  Command eta_;
  Command iota_;
  Command atomic_iota_;
};

}  // namespace cra

#endif  // CRA_TERMS_HPP_
