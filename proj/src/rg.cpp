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

#include "cra/rg.hpp"

#include <sstream>

#include "cra/dsl.hpp"
#include "cra/laws.hpp"

namespace cra {

Command bigstep_pi(const StateSpace& space) { return Command::pgm(Relation::universal(space)); }

Command bigstep_eps(const StateSpace& space) { return Command::env(Relation::universal(space)); }

Command bigstep_alpha(const StateSpace& space) {
  return Command::choice(bigstep_pi(space), bigstep_eps(space));
}

Command skip(const StateSpace& space) { return Command::om_iter(bigstep_eps(space)); }

Command chaos(const StateSpace& space) { return Command::om_iter(bigstep_alpha(space)); }

Command guar(const Relation& g, const StateSpace& space) {
  return Command::om_iter(Command::choice(Command::pgm(g), bigstep_eps(space)));
}

Command rely(const Relation& r, const StateSpace& space) {
  return Command::om_iter(
      pseudo_atomic(bigstep_alpha(space), Command::env(r.complement(space))));
}

Command term_cmd(const StateSpace& space) {
  return Command::seq(Command::fin_iter(bigstep_alpha(space)), skip(space));
}

Command post(const TestPred& t, const StateSpace& space) {
  return Command::seq(term_cmd(space), Command::test(t));
}

RefinementChain intro_parallel(const Relation& r, const Relation& r1, const Relation& r2,
                               const TestPred& t1, const TestPred& t2, const StateSpace& space) {
  if (!r.subset_of(r1)) throw PreconditionViolated("intro_parallel: r is not a subset of r1");
  if (!r.subset_of(r2)) throw PreconditionViolated("intro_parallel: r is not a subset of r2");

  const auto W = [](Command a, Command b) { return Command::wconj(std::move(a), std::move(b)); };
  const auto P = [](Command a, Command b) { return Command::par(std::move(a), std::move(b)); };
  const auto rel = [](const Relation& x) { return render_relation(x); };
  const auto tst = [](const TestPred& x) { return render_test(x); };

  const Command rely_r = rely(r, space);
  const Command rely_1 = rely(r1, space);
  const Command rely_2 = rely(r2, space);
  const Command guar_1 = guar(r1, space);
  const Command guar_2 = guar(r2, space);
  const Command post_1 = post(t1, space);
  const Command post_2 = post(t2, space);
  const Command x = P(post_1, post_2);

  RefinementChain ch;
  auto add = [&](Command from, Command to, std::string law,
                 std::map<std::string, std::string> bindings) {
    ch.steps.push_back({std::move(from), std::move(to), {std::move(law), std::move(bindings)}});
  };

  const Command s0 = W(rely_r, post(t1.intersect(t2), space));
  const Command s1 = W(rely_r, x);
  add(s0, s1, "parallel_spec", {{"t1", tst(t1)}, {"t2", tst(t2)}});

  const Command s2 = W(W(rely_r, rely_r), x);
  add(s1, s2, "conj_idem", {{"c", render(rely_r, space)}});

  const Command s3 = W(W(rely_1, rely_2), x);
  add(s2, s3, "rely_weaken", {{"r", rel(r)}, {"r1", rel(r1)}, {"r2", rel(r2)}});

  const Command s4 = W(rely_1, W(rely_2, x));
  add(s3, s4, "conj_assoc",
      {{"c1", render(rely_1, space)}, {"c2", render(rely_2, space)}, {"c3", render(x, space)}});

  const Command s5 = W(rely_1, W(rely_2, P(post_2, post_1)));
  add(s4, s5, "par_comm", {{"c1", render(post_1, space)}, {"c2", render(post_2, space)}});

  const Command s6 = W(rely_1, P(W(rely_2, post_2), W(guar_2, post_1)));
  add(s5, s6, "rely_guar_intro",
      {{"r", rel(r2)}, {"c1", render(post_2, space)}, {"c2", render(post_1, space)}});

  const Command s7 = W(rely_1, P(W(guar_2, post_1), W(rely_2, post_2)));
  add(s6, s7, "par_comm",
      {{"c1", render(W(rely_2, post_2), space)}, {"c2", render(W(guar_2, post_1), space)}});

  const Command s8 = P(W(rely_1, W(guar_2, post_1)), W(guar_1, W(rely_2, post_2)));
  add(s7, s8, "rely_guar_intro",
      {{"r", rel(r1)},
       {"c1", render(W(guar_2, post_1), space)},
       {"c2", render(W(rely_2, post_2), space)}});

  const Command s9 = P(W(W(rely_1, guar_2), post_1), W(W(guar_1, rely_2), post_2));
  add(s8, s9, "conj_assoc", {{"lhs", render(s8, space)}, {"rhs", render(s9, space)}});
  return ch;
}

ChainVerdict verify_chain(const RefinementChain& chain, const ModelCfg& cfg) {
  ChainVerdict v;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const ChainStep& st = chain.steps[i];
    auto fail = [&](std::string reason) {
      v.ok = false;
      v.failing_step = i;
      v.reason = std::move(reason);
      return v;
    };
    if (i > 0 && chain.steps[i - 1].to != st.from) return fail("step does not continue the chain");
    if (!find_law(st.why.law)) return fail("unknown law '" + st.why.law + "'");
    const TraceSet from = denote(st.from, cfg);
    const TraceSet to = denote(st.to, cfg);
    if (!to.subset_of(from)) {
      fail("refinement does not hold");
      v.witness = first_missing(from, to);
      return v;
    }
  }
  return v;
}

std::string render_chain(const RefinementChain& chain, const StateSpace& space) {
  std::ostringstream out;
  if (chain.steps.empty()) return "(empty chain)\n";
  out << "    " << render(chain.steps.front().from, space) << '\n';
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& st = chain.steps[i];
    out << i + 1 << ". ⊒ { " << st.why.law << " [";
    bool first = true;
    for (const auto& [k, val] : st.why.bindings) {
      out << (first ? "" : ", ") << k << " := " << val;
      first = false;
    }
    out << "] }\n    " << render(st.to, space) << '\n';
  }
  return out.str();
}

}  // namespace cra
