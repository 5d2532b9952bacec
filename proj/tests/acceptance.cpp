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

// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "cra/expansion.hpp"
#include "cra/laws.hpp"
#include "cra/rg.hpp"
#include "cra/trace_model.hpp"

using namespace cra;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << std::endl;
  failures += !ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

GenCfg suite_cfg(unsigned states, unsigned bound, unsigned trials) {
  GenCfg g;
  g.seed = 42;
  g.state_size = states;
  g.bound = bound;
  g.trials = trials;
  return g;
}

std::string suite(int n, const GenCfg& g, double budget) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = check_all(g);
  const double secs = seconds_since(t0);
  unsigned passed = 0;
  std::string first_fail;
  for (const auto& r : reports) {
    if (r.passed())
      ++passed;
    else if (first_fail.empty())
      first_fail = r.law;
  }
  std::ostringstream d;
  d << passed << '/' << reports.size() << " laws pass at states=" << g.state_size
    << " bound=" << g.bound << " trials=" << g.trials << " in " << secs << "s";
  if (!first_fail.empty()) d << "; first failure " << first_fail;
  report(n, passed == reports.size() && reports.size() >= 45 && secs <= budget, d.str());
  return reports_json(reports);
}

Command random_cmd(Rng& rng, const GenCfg& g) { return std::get<Command>(gen(Sort::Command, rng, g)); }

void strictness() {
  GenCfg g = suite_cfg(2, 3, 50);
  bool ok = true;
  std::ostringstream d;
  for (const Law& w : strictness_witnesses()) {
    const LawReport r = check_law(w, g);
    const bool refuted = !r.passed() && r.counterexample.has_value();
    ok = ok && refuted;
    d << w.name << (refuted ? " refuted by " + r.counterexample->witness : " NOT refuted") << "; ";
  }
  report(3, ok && strictness_witnesses().size() >= 2, d.str());
}

void cross_validation() {
  const ModelCfg cfg(StateSpace(2), 3);
  GenCfg g = suite_cfg(2, 3, 1);
  Rng rng(4242);
  unsigned agree = 0, equal = 0, pairs = 0;
  for (; pairs < 600; ++pairs) {
    const Command c = random_cmd(rng, g);
    // Every third pair is an equivalent rewrite so both verdicts are exercised.
    const Command d = pairs % 3 == 0 ? Command::choice(Command::seq(c, Command::tau()), c)
                                     : random_cmd(rng, g);
    const CrossCheck r = cross_check(c, d, cfg);
    agree += r.agree();
    equal += r.oracle;
  }
  unsigned round_trips = 0;
  const unsigned total = 600;
  for (unsigned i = 0; i < total; ++i) {
    const Command c = random_cmd(rng, g);
    round_trips += equiv(rebuild(expand(c, cfg.space), cfg.space), c, cfg);
  }
  std::ostringstream d;
  d << agree << '/' << pairs << " cross-checks agree (" << equal << " equivalent pairs), "
    << round_trips << '/' << total << " expanded-form round trips";
  report(4, agree == pairs && round_trips == total, d.str());
}

void fixed_points() {
  const ModelCfg cfg(StateSpace(2), 3);
  GenCfg g = suite_cfg(2, 3, 1);
  Rng rng(555);
  unsigned decompose = 0;
  for (unsigned i = 0; i < 100; ++i) {
    const Command a = std::get<Command>(gen(Sort::Atomic, rng, g));
    TraceSet powers = denote(Command::tau(), cfg);
    for (unsigned k = 1; k <= cfg.bound; ++k) powers |= denote(Command::fixed_iter(a, k), cfg);
    decompose += denote(Command::fin_iter(a), cfg) == powers;
  }
  unsigned unfold = 0;
  for (unsigned i = 0; i < 100; ++i) {
    const Command c = random_cmd(rng, g);
    const Command fin = Command::fin_iter(c), om = Command::om_iter(c), inf = Command::inf_iter(c);
    const bool ok =
        equiv(fin, Command::choice(Command::tau(), Command::seq(c, fin)), cfg) &&
        equiv(om, Command::choice(Command::tau(), Command::seq(c, om)), cfg) &&
        equiv(inf, Command::seq(c, inf), cfg);
    unfold += ok;
  }
  std::ostringstream d;
  d << decompose << "/100 atomic finite-iteration decompositions, " << unfold
    << "/100 unfold triples";
  report(5, decompose == 100 && unfold == 100, d.str());
}

void derivations() {
  const StateSpace s(2);
  const ModelCfg cfg(s, 3);
  GenCfg g = suite_cfg(2, 3, 1);
  Rng rng(6006);
  auto rel = [&] { return std::get<Relation>(gen(Sort::Relation, rng, g)); };
  auto tst = [&] { return std::get<TestPred>(gen(Sort::Test, rng, g)); };
  unsigned chains = 0;
  for (unsigned i = 0; i < 50; ++i) {
    const Relation r = rel();
    const Relation r1 = r.unite(rel()), r2 = r.unite(rel());
    chains += verify_chain(intro_parallel(r, r1, r2, tst(), tst(), s), cfg).ok;
  }

  std::vector<Relation> relations;
  const auto univ = Relation::universal(s).pairs();
  const std::vector<Relation::Pair> up(univ.begin(), univ.end());
  for (unsigned m = 0; m < (1u << up.size()); ++m) {
    Relation r;
    for (unsigned k = 0; k < up.size(); ++k)
      if (m >> k & 1) r.insert(up[k].first, up[k].second);
    relations.push_back(r);
  }
  std::vector<TestPred> tests;
  for (unsigned m = 0; m < 4; ++m) {
    TestPred t;
    for (State x = 0; x < 2; ++x)
      if (m >> x & 1) t.insert(x);
    tests.push_back(t);
  }
  bool exhaustive = equiv(Command::par(term_cmd(s), term_cmd(s)), term_cmd(s), cfg);
  for (const Relation& r : relations)
    exhaustive = exhaustive && equiv(Command::par(rely(r, s), guar(r, s)), rely(r, s), cfg);
  for (const TestPred& t1 : tests)
    for (const TestPred& t2 : tests)
      exhaustive = exhaustive &&
                   equiv(post(t1.intersect(t2), s), Command::par(post(t1, s), post(t2, s)), cfg);
  std::ostringstream d;
  d << chains << "/50 parallel-introduction chains verify; term/rely-guar/post equalities "
    << (exhaustive ? "hold" : "FAIL") << " over all " << relations.size() << " relations and "
    << tests.size() * tests.size() << " test pairs";
  report(6, chains == 50 && exhaustive, d.str());
}

}  // namespace

int main() {
  closure_audit::enable(true);
  closure_audit::reset();

  const std::string json1 = suite(1, suite_cfg(2, 3, 50), 300);
  suite(2, suite_cfg(3, 4, 20), 1800);
  strictness();
  cross_validation();
  fixed_points();
  derivations();

  std::ostringstream d7;
  d7 << closure_audit::violations() << " closure violations in " << closure_audit::checks()
     << " audited trace-set operations";
  report(7, closure_audit::checks() > 0 && closure_audit::violations() == 0, d7.str());

  const std::string json2 = reports_json(check_all(suite_cfg(2, 3, 50)));
  report(8, json1 == json2,
         std::string("two seed-42 suite runs give ") + (json1 == json2 ? "identical" : "different") +
             " JSON (" + std::to_string(json1.size()) + " bytes)");
  return failures == 0 ? 0 : 1;
}
