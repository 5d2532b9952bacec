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
#include "cra/expansion.hpp"
#include "cra/laws.hpp"
#include "cra/rg.hpp"
#include "oracle.hpp"

using namespace cra;

namespace {

// Independent notion of immediate behaviour read off brute-force trace sets.
struct Head {
  std::set<unsigned> aborts, terms;
  std::set<std::tuple<bool, unsigned, unsigned>> steps;  // (is_pi, pre, post)
};

Head head_of(const oracle::Set& s) {
  Head h;
  for (const auto& t : s) {
    if (t.steps.empty() && t.st == oracle::kAbort) h.aborts.insert(t.init);
    if (t.steps.empty() && t.st == oracle::kTerm) h.terms.insert(t.init);
  }
  for (const auto& t : s)
    if (t.steps.size() == 1 && t.st == oracle::kInc && !h.aborts.count(t.init))
      h.steps.emplace(t.steps[0].first, t.init, t.steps[0].second);
  for (unsigned a : h.aborts) h.terms.erase(a);
  return h;
}

}  // namespace

TEST_CASE("tau terminates immediately everywhere") {
  const StateSpace s(2);
  const ExpandedForm f = expand(Command::tau(), s);
  CHECK(f.abort_test.empty());
  CHECK(f.term_test == TestPred{0, 1});
  CHECK(f.branches.empty());
}

TEST_CASE("an assertion before a step aborts where the test fails") {
  const StateSpace s(2);
  const ExpandedForm f =
      expand(Command::seq(assert_cmd({0}, s), Command::pgm(Relation::universal(s))), s);
  CHECK(f.abort_test == TestPred{1});
  CHECK(f.term_test.empty());
  REQUIRE(f.branches.size() == 2);
  for (const auto& [k, v] : f.branches) {
    CHECK(k.label == Label::Pi);
    CHECK(k.pre == 0);
  }
}

TEST_CASE("rely steps continue as rely or abort on a violating environment step") {
  const StateSpace s(2);
  const ModelCfg cfg(s, 3);
  const Relation r{{0, 0}, {1, 1}};
  const ExpandedForm f = expand(rely(r, s), s);
  CHECK(f.abort_test.empty());
  CHECK(f.term_test == TestPred{0, 1});
  CHECK(f.branches.size() == 8);
  for (const auto& [k, v] : f.branches) {
    if (k.label == Label::Eps && !r.contains(k.pre, k.post))
      CHECK(equiv(v, Command::top(), cfg));
    else
      CHECK(equiv(v, rely(r, s), cfg));
  }
}

TEST_CASE("expanded heads match the brute-force model") {
  const StateSpace s(2);
  const oracle::Model m{2, 3};
  GenCfg g;
  Rng rng(3);
  for (int i = 0; i < 80; ++i) {
    const Command c = std::get<Command>(gen(Sort::Command, rng, g));
    const ExpandedForm f = expand(c, s);
    const Head h = head_of(m.denote(c));
    INFO("command #" << i);
    CHECK(f.abort_test.states() == h.aborts);
    CHECK(f.term_test.states() == h.terms);
    std::set<std::tuple<bool, unsigned, unsigned>> keys;
    for (const auto& [k, v] : f.branches) keys.emplace(k.label == Label::Pi, k.pre, k.post);
    CHECK(keys == h.steps);
  }
}

TEST_CASE("bounded bisimulation examples") {
  const StateSpace s(2);
  const Relation g1{{0, 0}, {0, 1}}, g2{{0, 1}, {1, 1}};
  GenCfg gc;
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    const Command c = std::get<Command>(gen(Sort::Command, rng, gc));
    CHECK(equiv_by_expansion(Command::seq(Command::tau(), c), c, 4, s));
  }
  CHECK(equiv_by_expansion(Command::wconj(Command::pgm(g1), Command::pgm(g2)),
                           Command::pgm(g1.intersect(g2)), 1, s));
  CHECK(equiv_by_expansion(Command::par(Command::pgm(g1), Command::pgm(g1)), Command::bot(), 1, s));
}

TEST_CASE("cross_check agrees on distinguishable pairs") {
  const ModelCfg cfg(StateSpace(2), 3);
  const CrossCheck a = cross_check(Command::tau(), Command::bot(), cfg);
  CHECK_FALSE(a.oracle);
  CHECK_FALSE(a.expansion);
  CHECK(a.witness);
  const CrossCheck b = cross_check(skip(cfg.space), chaos(cfg.space), cfg);
  CHECK_FALSE(b.oracle);
  CHECK(b.agree());
}

TEST_CASE("cross_check agrees on random pairs") {
  const ModelCfg cfg(StateSpace(2), 3);
  GenCfg g;
  Rng rng(21);
  unsigned equal = 0;
  for (int i = 0; i < 150; ++i) {
    const Command c = std::get<Command>(gen(Sort::Command, rng, g));
    // Half the pairs are related by a law so that both outcomes occur.
    const Command d = i % 2 ? std::get<Command>(gen(Sort::Command, rng, g))
                            : Command::choice(c, Command::seq(Command::tau(), c));
    const CrossCheck r = cross_check(c, d, cfg);
    equal += r.oracle;
    CHECK(r.agree());
  }
  CHECK(equal >= 75);
}

TEST_CASE("rebuilding an expanded form preserves the denotation") {
  const ModelCfg cfg(StateSpace(2), 3);
  GenCfg g;
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const Command c = std::get<Command>(gen(Sort::Command, rng, g));
    CHECK(equiv(rebuild(expand(c, cfg.space), cfg.space), c, cfg));
  }
}

TEST_CASE("render_expanded lists tests and steps") {
  const StateSpace s(2);
  const std::string text = render_expanded(expand(Command::pgm({{0, 1}}), s), s);
  CHECK(text == "abort: {}\nterm:  {}\npi(0,1) -> tau\n");
  CHECK(render_expanded(expand(Command::tau(), s), s) == "abort: {}\nterm:  {0,1}\nsteps: none\n");
}
