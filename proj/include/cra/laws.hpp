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

// A catalog of algebraic laws checked by random instantiation against the
// trace model.

#ifndef CRA_LAWS_HPP_
#define CRA_LAWS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cra/terms.hpp"
#include "cra/trace_model.hpp"

namespace cra {

enum class Sort {
  Command,
  Test,
  Atomic,          // pgm(g) | env(r)
  Pseudo,          // a | b ; top for atomic a, b
  Relation,
  Natural,         // 0..bound
  CommandSet,      // 1 to 4 commands
  AtomicFixpoint,  // fin or om of an atomic or pseudo-atomic command
  TestSet,         // 0 to 4 tests
  AtomicSet,       // 0 to 4 atomic commands
  PseudoSet,       // 0 to 4 pseudo-atomic commands
};

const char* sort_name(Sort s);

using Value = std::variant<Command, TestPred, Relation, unsigned, std::vector<Command>>;
using Bindings = std::map<std::string, Value>;

enum class LawKind { Equality, Refinement, Conditional, Membership };

const char* kind_name(LawKind k);

/// One instantiated law: lhs = rhs, or lhs ⊒ rhs when `equality` is false.
struct Instance {
  struct Hypothesis {
    Command lhs;
    Command rhs;
    bool equality = false;
  };
  Command lhs;
  Command rhs;
  bool equality = true;
  std::vector<Hypothesis> hypotheses;
  bool applicable = true;  // side conditions on relations, tests and naturals
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

struct GenCfg {
  std::uint64_t seed = 42;
  unsigned max_depth = 3;
  unsigned state_size = 2;
  unsigned bound = 3;
  unsigned trials = 50;
};

struct Law {
  std::string name;
  std::string statement;  // human-readable formula
  LawKind kind = LawKind::Equality;
  std::vector<std::pair<std::string, Sort>> vars;
  std::optional<std::string> op_pair;  // instance name for abstract laws
  std::function<Instance(const Bindings&, const ModelCfg&)> build;
  /// Optional targeted sampler for laws whose hypotheses rarely hold at random.
  std::function<Bindings(Rng&, const GenCfg&)> hint;
  /// The hint is the only sampler: it builds values outside the declared
  /// sorts, so neither plain sampling nor shrinking applies.
  bool hint_only = false;
};

const std::vector<Law>& registry();
/// Equality-strengthened weak laws; each is expected to fail.
const std::vector<Law>& strictness_witnesses();
/// Searches the registry, then the strictness witnesses.
const Law* find_law(const std::string& name);

Value gen(Sort sort, Rng& rng, const GenCfg& cfg);
Value gen(Sort sort, const GenCfg& cfg);  // seeded from cfg.seed

struct Counterexample {
  std::map<std::string, std::string> bindings;  // name -> DSL text
  std::string witness;                          // rendered trace
  std::string violation;                        // "lhs-missing" | "rhs-extra"
};

struct LawReport {
  std::string law;
  unsigned trials = 0;  // effective trials
  unsigned passes = 0;
  unsigned skipped = 0;  // samples discarded because a hypothesis failed
  std::uint64_t seed = 0;
  unsigned states = 0;
  unsigned bound = 0;
  bool exhausted = false;  // fewer than half the requested trials were effective
  std::optional<Counterexample> counterexample;
  bool passed() const { return !exhausted && passes == trials; }
};

LawReport check_law(const Law& law, const GenCfg& cfg);

/// Runs every registry law. Reports follow registry order; laws may be
/// checked concurrently.
std::vector<LawReport> check_all(const GenCfg& cfg, unsigned threads = 0);

enum class Family { Tests, Atomics, Pseudo };

/// Closure of the family under ⨆, non-empty ⨅, ∥ and ⋒, and right
/// distribution of ; over ⨅ of members.
LawReport check_compatible_set(Family family, const GenCfg& cfg);
/// Right distribution of ; over ⨅ of non-empty subsets of an explicit family.
LawReport check_compatible_set(const std::vector<Command>& members, const GenCfg& cfg);

/// The family member that agrees with `c` on its immediate behaviour; it
/// equals `c` exactly when `c` belongs to the family.
Command project(Family family, const Command& c, const ModelCfg& cfg);

std::string report_json(const LawReport& r);
std::string reports_json(const std::vector<LawReport>& rs);

}  // namespace cra

#endif  // CRA_LAWS_HPP_
