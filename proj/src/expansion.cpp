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

#include "cra/expansion.hpp"

#include <sstream>

#include "cra/dsl.hpp"

namespace cra {

namespace {

using Branches = std::map<StepKey, Command>;

void add_branch(Branches& b, const StepKey& k, const Command& c) {
  auto [it, fresh] = b.emplace(k, c);
  if (!fresh) it->second = Command::choice(it->second, c);
}

ExpandedForm normalise(ExpandedForm f) {
  f.term_test = f.term_test.minus(f.abort_test);
  for (auto it = f.branches.begin(); it != f.branches.end();) {
    if (f.abort_test.contains(it->first.pre))
      it = f.branches.erase(it);
    else
      ++it;
  }
  return f;
}

ExpandedForm steps(Label label, const Relation& r) {
  ExpandedForm f;
  for (const auto& [a, b] : r.pairs()) f.branches.emplace(StepKey{label, a, b}, Command::tau());
  return f;
}

ExpandedForm choice(const ExpandedForm& c, const ExpandedForm& d) {
  ExpandedForm f{c.abort_test.unite(d.abort_test), c.term_test.unite(d.term_test), c.branches};
  for (const auto& [k, v] : d.branches) add_branch(f.branches, k, v);
  return normalise(std::move(f));
}

ExpandedForm meet(const ExpandedForm& c, const ExpandedForm& d) {
  ExpandedForm f;
  f.abort_test = c.abort_test.intersect(d.abort_test);
  f.term_test = c.term_test.unite(c.abort_test).intersect(d.term_test.unite(d.abort_test));
  for (const auto& [k, v] : c.branches) {
    if (auto it = d.branches.find(k); it != d.branches.end())
      f.branches.emplace(k, Command::meet(v, it->second));
    else if (d.abort_test.contains(k.pre))
      f.branches.emplace(k, v);
  }
  for (const auto& [k, v] : d.branches)
    if (c.abort_test.contains(k.pre)) f.branches.emplace(k, v);
  return normalise(std::move(f));
}

ExpandedForm seq(const ExpandedForm& c, const ExpandedForm& d, const Command& rhs) {
  ExpandedForm f;
  f.abort_test = c.abort_test.unite(c.term_test.intersect(d.abort_test));
  f.term_test = c.term_test.intersect(d.term_test);
  for (const auto& [k, v] : c.branches) add_branch(f.branches, k, Command::seq(v, rhs));
  for (const auto& [k, v] : d.branches)
    if (c.term_test.contains(k.pre)) add_branch(f.branches, k, v);
  return normalise(std::move(f));
}

// Par: program steps may not coincide; WConj: labels must agree.
ExpandedForm synchronise(Op op, const ExpandedForm& c, const ExpandedForm& d) {
  ExpandedForm f;
  f.abort_test = c.abort_test.unite(d.abort_test);
  f.term_test = c.term_test.intersect(d.term_test);
  for (const auto& [kc, vc] : c.branches) {
    for (auto it = d.branches.begin(); it != d.branches.end(); ++it) {
      const StepKey& kd = it->first;
      if (kd.pre != kc.pre || kd.post != kc.post) continue;
      Label out;
      if (op == Op::Par) {
        if (kc.label == Label::Pi && kd.label == Label::Pi) continue;
        out = kc.label == Label::Pi || kd.label == Label::Pi ? Label::Pi : Label::Eps;
      } else {
        if (kc.label != kd.label) continue;
        out = kc.label;
      }
      add_branch(f.branches, {out, kc.pre, kc.post}, Command::binary(op, vc, it->second));
    }
  }
  return normalise(std::move(f));
}

// Heads of iterations are the extremal solutions of the unfolding equations
// restricted to the head: Fin is least, Om and Inf are greatest.
ExpandedForm iterate(const Command& c, const ExpandedForm& body, const StateSpace& space) {
  ExpandedForm f;
  switch (c.op()) {
    case Op::FinIter:
      f.abort_test = body.abort_test;
      f.term_test = TestPred::all(space);
      break;
    case Op::OmIter:
      f.abort_test = body.abort_test.unite(body.term_test);
      f.term_test = TestPred::all(space);
      break;
    default:  // InfIter
      f.abort_test = body.abort_test.unite(body.term_test);
      break;
  }
  for (const auto& [k, v] : body.branches) add_branch(f.branches, k, Command::seq(v, c));
  return normalise(std::move(f));
}

}  // namespace

ExpandedForm expand(const Command& c, const StateSpace& space) {
  switch (c.op()) {
    case Op::Bot: return {};
    case Op::Top: return {TestPred::all(space), {}, {}};
    case Op::Tau: return {{}, TestPred::all(space), {}};
    case Op::Test: return {{}, c.test_pred(), {}};
    case Op::Pgm: return steps(Label::Pi, c.relation());
    case Op::Env: return steps(Label::Eps, c.relation());
    case Op::Choice: return choice(expand(c.lhs(), space), expand(c.rhs(), space));
    case Op::Meet: return meet(expand(c.lhs(), space), expand(c.rhs(), space));
    case Op::Seq: return seq(expand(c.lhs(), space), expand(c.rhs(), space), c.rhs());
    case Op::Par:
    case Op::WConj:
      return synchronise(c.op(), expand(c.lhs(), space), expand(c.rhs(), space));
    case Op::FixedIter:
      if (c.exponent() == 0) return expand(Command::tau(), space);
      return expand(Command::seq(c.body(), Command::fixed_iter(c.body(), c.exponent() - 1)),
                    space);
    case Op::FinIter:
    case Op::OmIter:
    case Op::InfIter: return iterate(c, expand(c.body(), space), space);
  }
  return {};
}

Command rebuild(const ExpandedForm& f, const StateSpace& space) {
  std::optional<Command> sum;
  auto join = [&](Command x) { sum = sum ? Command::choice(*sum, std::move(x)) : std::move(x); };
  if (!f.term_test.empty()) join(Command::test(f.term_test));
  for (const auto& [k, v] : f.branches) {
    Relation r{{k.pre, k.post}};
    join(Command::seq(k.label == Label::Pi ? Command::pgm(r) : Command::env(r), v));
  }
  return Command::seq(assert_cmd(negate_test(f.abort_test, space), space),
                      sum ? *sum : Command::bot());
}

namespace {

bool same_node(const Command& c, const Command& d, State s, unsigned depth,
               const StateSpace& space) {
  const ExpandedForm fc = expand(c, space);
  const ExpandedForm fd = expand(d, space);
  const bool ac = fc.abort_test.contains(s), ad = fd.abort_test.contains(s);
  if (ac || ad) return ac == ad;
  if (fc.term_test.contains(s) != fd.term_test.contains(s)) return false;
  if (depth == 0) return true;
  auto from = [s](const ExpandedForm& f) {
    std::map<std::pair<Label, State>, const Command*> out;
    for (const auto& [k, v] : f.branches)
      if (k.pre == s) out.emplace(std::make_pair(k.label, k.post), &v);
    return out;
  };
  const auto bc = from(fc), bd = from(fd);
  if (bc.size() != bd.size()) return false;
  for (auto ic = bc.begin(), id = bd.begin(); ic != bc.end(); ++ic, ++id) {
    if (ic->first != id->first) return false;
    if (!same_node(*ic->second, *id->second, ic->first.second, depth - 1, space)) return false;
  }
  return true;
}

}  // namespace

bool equiv_by_expansion(const Command& c, const Command& d, unsigned depth,
                        const StateSpace& space) {
  for (State s = 0; s < space.size(); ++s)
    if (!same_node(c, d, s, depth, space)) return false;
  return true;
}

CrossCheck cross_check(const Command& c, const Command& d, const ModelCfg& cfg) {
  CrossCheck r;
  const TraceSet dc = denote(c, cfg), dd = denote(d, cfg);
  r.oracle = dc == dd;
  r.expansion = equiv_by_expansion(c, d, cfg.bound, cfg.space);
  if (!r.oracle) {
    r.witness = first_missing(dc, dd);
    if (!r.witness) r.witness = first_missing(dd, dc);
  }
  return r;
}

std::string render_expanded(const ExpandedForm& f, const StateSpace& space) {
  std::ostringstream out;
  out << "abort: " << render_test(f.abort_test) << '\n';
  out << "term:  " << render_test(f.term_test) << '\n';
  if (f.branches.empty()) out << "steps: none\n";
  for (const auto& [k, v] : f.branches)
    out << (k.label == Label::Pi ? "pi" : "eps") << '(' << k.pre << ',' << k.post << ") -> "
        << render(v, space) << '\n';
  return out.str();
}

}  // namespace cra
