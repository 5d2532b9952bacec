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

#include "catch_amalgamated.hpp"
#include "cra/rg.hpp"
#include "cra/terms.hpp"
#include "cra/trace_model.hpp"

using namespace cra;

TEST_CASE("validate accepts in-range commands") {
  CHECK_FALSE(validate(Command::pgm({{0, 1}}), StateSpace(2)));
}

TEST_CASE("validate reports the path of an out-of-range subterm") {
  auto root = validate(Command::env({{0, 2}}), StateSpace(2));
  REQUIRE(root);
  CHECK(root->path == "root");
  auto right = validate(Command::seq(Command::tau(), Command::test({1})), StateSpace(1));
  REQUIRE(right);
  CHECK(right->path == "root/rhs");
}

TEST_CASE("negate_test complements within the space") {
  const StateSpace s(2);
  CHECK(negate_test({0}, s) == TestPred{1});
  CHECK(negate_test({}, s) == TestPred{0, 1});
  CHECK(negate_test({0, 1}, s) == TestPred{});
}

TEST_CASE("assert_cmd over all states behaves as tau") {
  const StateSpace s(2);
  const Command a = assert_cmd({0, 1}, s);
  CHECK(a == Command::choice(Command::tau(), Command::seq(Command::test({}), Command::top())));
  CHECK(equiv(a, Command::tau(), ModelCfg(s, 3)));
}

TEST_CASE("assert_cmd of the empty test aborts everywhere") {
  const StateSpace s(2);
  CHECK(equiv(assert_cmd({}, s), Command::top(), ModelCfg(s, 3)));
}

TEST_CASE("pseudo_atomic with an infeasible abort branch is its atomic part") {
  const StateSpace s(2);
  const ModelCfg cfg(s, 3);
  const Relation g{{0, 1}, {1, 1}};
  CHECK(equiv(pseudo_atomic(Command::pgm(g), Command::bot()), Command::pgm(g), cfg));
  const Command eps_then_abort = pseudo_atomic(Command::bot(), Command::env({{0, 0}}));
  CHECK(equiv(eps_then_abort, Command::seq(Command::env({{0, 0}}), Command::top()), cfg));
}

TEST_CASE("the rely body is pseudo-atomic over the complement relation") {
  const StateSpace s(2);
  const Relation r{{0, 0}, {1, 1}};
  const Command body = pseudo_atomic(bigstep_alpha(s), Command::env(r.complement(s)));
  CHECK(equiv(Command::om_iter(body), rely(r, s), ModelCfg(s, 3)));
}

TEST_CASE("is_atomic_term recognises single-step commands") {
  CHECK(is_atomic_term(Command::pgm({{0, 0}})));
  CHECK(is_atomic_term(Command::choice(Command::pgm({{0, 0}}), Command::env({{1, 0}}))));
  CHECK_FALSE(is_atomic_term(Command::tau()));
  CHECK_FALSE(is_atomic_term(Command::seq(Command::pgm({{0, 0}}), Command::pgm({{0, 0}}))));
}

TEST_CASE("relation and test set algebra") {
  const StateSpace s(2);
  const Relation a{{0, 0}, {0, 1}}, b{{0, 1}, {1, 1}};
  CHECK(a.intersect(b) == Relation{{0, 1}});
  CHECK(a.unite(b).pairs().size() == 3);
  CHECK(a.complement(s) == Relation{{1, 0}, {1, 1}});
  CHECK(Relation{{0, 1}}.subset_of(a));
  CHECK(Relation::universal(s).pairs().size() == 4);
  CHECK(Relation::identity(s) == Relation{{0, 0}, {1, 1}});
  CHECK(TestPred{0, 1}.minus({1}) == TestPred{0});
}

TEST_CASE("commands compare structurally") {
  const Command a = Command::seq(Command::tau(), Command::pgm({{0, 1}}));
  CHECK(a == Command::seq(Command::tau(), Command::pgm({{0, 1}})));
  CHECK(a != Command::seq(Command::pgm({{0, 1}}), Command::tau()));
  CHECK(a.size() == 3);
  CHECK(Command::fixed_iter(Command::tau(), 2).exponent() == 2);
}
