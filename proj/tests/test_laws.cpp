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

#include <set>

#include "catch_amalgamated.hpp"
#include "cra/laws.hpp"
#include "cra/rg.hpp"
#include "json.hpp"

using namespace cra;

namespace {

const Law& law(const std::string& name) {
  const Law* l = find_law(name);
  REQUIRE(l);
  return *l;
}

GenCfg small(unsigned trials = 30) {
  GenCfg g;
  g.trials = trials;
  return g;
}

}  // namespace

TEST_CASE("registry contents") {
  const auto& reg = registry();
  CHECK(reg.size() >= 45);
  std::set<std::string> names;
  for (const Law& l : reg) CHECK(names.insert(l.name).second);

  const Law& gp = law("guar_par");
  CHECK(gp.kind == LawKind::Equality);
  REQUIRE(gp.vars.size() == 2);
  CHECK(gp.vars[0].second == Sort::Relation);
  CHECK(gp.vars[1].second == Sort::Relation);

  CHECK(law("par_interchange_seq").kind == LawKind::Refinement);
  CHECK(law("finite_iter_induct").kind == LawKind::Conditional);
  CHECK(law("iota_to_eta.conj_par").op_pair == "conj_par");
}

TEST_CASE("abstract laws are instantiated for each operator pair") {
  for (const char* pair : {"par_seq", "conj_seq", "conj_par"})
    CHECK(find_law(std::string("weak_sync_distrib_odot.") + pair));
}

TEST_CASE("strictness witnesses are separate from the registry") {
  for (const Law& w : strictness_witnesses())
    for (const Law& l : registry()) CHECK(w.name != l.name);
}

TEST_CASE("generators are deterministic in the seed") {
  GenCfg g;
  g.seed = 1;
  for (Sort s : {Sort::Command, Sort::Test, Sort::Atomic, Sort::Pseudo, Sort::Relation,
                 Sort::Natural, Sort::CommandSet})
    CHECK(gen(s, g) == gen(s, g));
}

TEST_CASE("generated values respect their sorts") {
  GenCfg g;
  Rng rng(8);
  const StateSpace s(2);
  for (int i = 0; i < 200; ++i) {
    const auto t = std::get<TestPred>(gen(Sort::Test, rng, g));
    for (State x : t.states()) CHECK(x < 2);
    CHECK(is_atomic_term(std::get<Command>(gen(Sort::Atomic, rng, g))));
    CHECK(std::get<unsigned>(gen(Sort::Natural, rng, g)) <= g.bound);
    const auto set = std::get<std::vector<Command>>(gen(Sort::CommandSet, rng, g));
    CHECK(!set.empty());
    CHECK(set.size() <= 4);
    CHECK_FALSE(validate(std::get<Command>(gen(Sort::Command, rng, g)), s));
  }
}

TEST_CASE("single laws pass") {
  for (const char* name : {"rely_par_guar", "test_odot_test", "seq_assoc", "iter_unfold"}) {
    GenCfg g = small(100);
    const LawReport r = check_law(law(name), g);
    INFO(name);
    CHECK(r.passed());
    CHECK(r.trials == 100);
  }
}

TEST_CASE("strengthened interchange fails with a counterexample") {
  const LawReport r = check_law(law("par_interchange_seq_as_equality"), small(50));
  CHECK_FALSE(r.passed());
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->bindings.size() == 4);
  CHECK(!r.counterexample->witness.empty());
}

TEST_CASE("skip does not refine chaos") {
  const LawReport r = check_law(law("skip_refines_chaos"), small(5));
  REQUIRE(r.counterexample);
  CHECK(r.counterexample->violation == "rhs-extra");
  CHECK(r.counterexample->witness.find("pi") != std::string::npos);
}

TEST_CASE("conditional laws count failed hypotheses as skipped") {
  const LawReport r = check_law(law("rely_weaken"), small(50));
  CHECK(r.passed());
  CHECK(r.skipped > 0);
  CHECK(r.trials == 50);
}

TEST_CASE("compatible families") {
  const GenCfg g = small(20);
  for (Family f : {Family::Tests, Family::Atomics, Family::Pseudo}) CHECK(check_compatible_set(f, g).passed());
}

TEST_CASE("atomic commands are not closed under sequencing") {
  const ModelCfg cfg(StateSpace(2), 3);
  const Command pi = bigstep_pi(cfg.space);
  const Command pipi = Command::seq(pi, pi);
  CHECK_FALSE(equiv(project(Family::Atomics, pipi, cfg), pipi, cfg));
  CHECK(equiv(project(Family::Atomics, pi, cfg), pi, cfg));
}

TEST_CASE("a family mixing tau with a step is not compatible") {
  const StateSpace s(2);
  const LawReport r =
      check_compatible_set({Command::tau(), Command::pgm(Relation::universal(s))}, small(50));
  CHECK_FALSE(r.passed());
  CHECK(r.counterexample);
}

TEST_CASE("reports serialise in schema order") {
  GenCfg g = small(3);
  const auto j = nlohmann::json::parse(report_json(check_law(law("skip_refines_chaos"), g)));
  CHECK(j["law"] == "skip_refines_chaos");
  CHECK(j["status"] == "fail");
  CHECK(j["counterexample"]["violation"] == "rhs-extra");
  const std::string text = report_json(check_law(law("nondet_comm"), g));
  CHECK(text.find("\"law\"") < text.find("\"trials\""));
  CHECK(text.find("\"status\"") < text.find("\"counterexample\""));
  CHECK(nlohmann::json::parse(text)["counterexample"].is_null());
}

TEST_CASE("whole suite passes and is deterministic") {
  GenCfg g = small(10);
  g.seed = 7;
  const auto a = check_all(g);
  for (const auto& r : a) {
    INFO(r.law);
    CHECK(r.passed());
  }
  CHECK(reports_json(a) == reports_json(check_all(g, 1)));
}

TEST_CASE("whole suite passes in a single-state space") {
  GenCfg g = small(10);
  g.state_size = 1;
  for (const auto& r : check_all(g)) {
    INFO(r.law);
    CHECK(r.passed());
  }
}
