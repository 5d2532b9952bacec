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
#include "cra/laws.hpp"
#include "cra/rg.hpp"
#include "cra/trace_model.hpp"

using namespace cra;

namespace {

const StateSpace kS(2);
const ModelCfg kCfg(kS, 3);

std::vector<Relation> all_relations() {
  std::vector<Relation> out;
  const auto pairs = Relation::universal(kS).pairs();
  const std::vector<Relation::Pair> v(pairs.begin(), pairs.end());
  for (unsigned m = 0; m < (1u << v.size()); ++m) {
    Relation r;
    for (unsigned i = 0; i < v.size(); ++i)
      if (m >> i & 1) r.insert(v[i].first, v[i].second);
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("macro equalities") {
  const Relation g1{{0, 1}}, g2{{1, 1}, {1, 0}};
  CHECK(equiv(Command::par(guar(g1, kS), guar(g2, kS)), guar(g1.unite(g2), kS), kCfg));
  CHECK(equiv(Command::wconj(rely(g1, kS), rely(g2, kS)), rely(g1.intersect(g2), kS), kCfg));
  CHECK(equiv(Command::par(term_cmd(kS), term_cmd(kS)), term_cmd(kS), kCfg));
  CHECK(equiv(post({0}, kS), Command::par(post({0, 1}, kS), post({0}, kS)), kCfg));
}

TEST_CASE("rely weakening runs one way") {
  const Relation id = Relation::identity(kS);
  CHECK(refines(rely({}, kS), rely(id, kS), kCfg));
  CHECK_FALSE(refines(rely(id, kS), rely({}, kS), kCfg));
}

TEST_CASE("rely and guarantee of every relation combine to the rely") {
  for (const Relation& r : all_relations())
    CHECK(equiv(Command::par(rely(r, kS), guar(r, kS)), rely(r, kS), kCfg));
}

TEST_CASE("identity relies over all states give a verified chain") {
  const Relation id = Relation::identity(kS);
  const auto ch = intro_parallel(id, id, id, {0, 1}, {0, 1}, kS);
  CHECK(ch.steps.size() >= 4);
  CHECK(verify_chain(ch, kCfg).ok);
  for (const auto& st : ch.steps) CHECK(find_law(st.why.law));
}

TEST_CASE("an empty rely relation satisfies the side conditions") {
  const auto rels = all_relations();
  for (std::size_t i = 0; i < rels.size(); i += 5)
    CHECK(verify_chain(intro_parallel({}, rels[i], rels[(i * 7) % rels.size()], {0}, {1}, kS), kCfg).ok);
}

TEST_CASE("a rely outside r1 violates the precondition") {
  CHECK_THROWS_AS(intro_parallel(Relation::universal(kS), {}, Relation::universal(kS), {0}, {0}, kS),
                  PreconditionViolated);
}

TEST_CASE("chain runs from the sequential specification to the parallel split") {
  const Relation r{{0, 0}}, r1{{0, 0}, {0, 1}}, r2{{0, 0}, {1, 1}};
  const TestPred t1{0}, t2{0, 1};
  const auto ch = intro_parallel(r, r1, r2, t1, t2, kS);
  const Command want_from = Command::wconj(rely(r, kS), post(t1.intersect(t2), kS));
  const Command want_to = Command::par(
      Command::wconj(Command::wconj(rely(r1, kS), guar(r2, kS)), post(t1, kS)),
      Command::wconj(Command::wconj(guar(r1, kS), rely(r2, kS)), post(t2, kS)));
  CHECK(ch.steps.front().from == want_from);
  CHECK(ch.steps.back().to == want_to);
  CHECK(refines(want_from, want_to, kCfg));
}

TEST_CASE("verify_chain rejects a reversed step") {
  const Relation id = Relation::identity(kS);
  auto ch = intro_parallel(id, Relation::universal(kS), id, {0, 1}, {0}, kS);
  std::swap(ch.steps[2].from, ch.steps[2].to);
  const ChainVerdict v = verify_chain(ch, kCfg);
  CHECK_FALSE(v.ok);
  REQUIRE(v.failing_step);
  CHECK(*v.failing_step <= 3);
}

TEST_CASE("verify_chain rejects unknown laws and accepts the empty chain") {
  CHECK(verify_chain({}, kCfg).ok);
  RefinementChain ch;
  ch.steps.push_back({Command::top(), Command::tau(), {"no_such_law", {}}});
  const ChainVerdict v = verify_chain(ch, kCfg);
  CHECK_FALSE(v.ok);
  CHECK(v.reason.find("no_such_law") != std::string::npos);
}

TEST_CASE("render_chain shows each step") {
  const Relation id = Relation::identity(kS);
  const auto ch = intro_parallel(id, id, id, {0}, {1}, kS);
  const std::string text = render_chain(ch, kS);
  CHECK(text.find("parallel_spec") != std::string::npos);
  CHECK(text.find("rely_guar_intro") != std::string::npos);
}
