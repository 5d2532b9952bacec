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

#include "cra/laws.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "json.hpp"

#include "cra/dsl.hpp"
#include "cra/rg.hpp"

namespace cra {

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Command: return "command";
    case Sort::Test: return "test";
    case Sort::Atomic: return "atomic";
    case Sort::Pseudo: return "pseudo-atomic";
    case Sort::Relation: return "relation";
    case Sort::Natural: return "natural";
    case Sort::CommandSet: return "command-set";
    case Sort::AtomicFixpoint: return "atomic-fixpoint";
    case Sort::TestSet: return "test-set";
    case Sort::AtomicSet: return "atomic-set";
    case Sort::PseudoSet: return "pseudo-atomic-set";
  }
  return "?";
}

const char* kind_name(LawKind k) {
  switch (k) {
    case LawKind::Equality: return "equality";
    case LawKind::Refinement: return "refinement";
    case LawKind::Conditional: return "conditional";
    case LawKind::Membership: return "membership";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Generators

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return splitmix(a ^ splitmix(b)); }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Relation gen_relation(Rng& rng, const StateSpace& space) {
  Relation r;
  for (State a = 0; a < space.size(); ++a)
    for (State b = 0; b < space.size(); ++b)
      if (rng.chance(1, 2)) r.insert(a, b);
  return r;
}

TestPred gen_test(Rng& rng, const StateSpace& space) {
  TestPred t;
  for (State s = 0; s < space.size(); ++s)
    if (rng.chance(1, 2)) t.insert(s);
  return t;
}

Command gen_atomic(Rng& rng, const StateSpace& space) {
  switch (rng.below(4)) {
    case 0: return Command::pgm(gen_relation(rng, space));
    case 1: return Command::env(gen_relation(rng, space));
    default: {
      Command g = Command::pgm(gen_relation(rng, space));
      return Command::choice(g, Command::env(gen_relation(rng, space)));
    }
  }
}

Command gen_pseudo(Rng& rng, const StateSpace& space) {
  Command a = gen_atomic(rng, space);
  return pseudo_atomic(a, gen_atomic(rng, space));
}

Command gen_command(Rng& rng, unsigned depth, const GenCfg& cfg, const StateSpace& space) {
  if (depth == 0 || rng.chance(1, 4)) {
    switch (rng.below(16)) {
      case 0: return Command::bot();
      case 1: return Command::top();
      case 2:
      case 3: return Command::tau();
      case 4:
      case 5:
      case 6: return Command::test(gen_test(rng, space));
      case 7:
      case 8:
      case 9: return Command::pgm(gen_relation(rng, space));
      case 10:
      case 11:
      case 12: return Command::env(gen_relation(rng, space));
      case 13: return skip(space);
      case 14: return chaos(space);
      default: return gen_atomic(rng, space);
    }
  }
  auto sub = [&] { return gen_command(rng, depth - 1, cfg, space); };
  switch (rng.below(20)) {
    case 0:
    case 1:
    case 2: {
      Command a = sub();
      return Command::choice(a, sub());
    }
    case 3:
    case 4: {
      Command a = sub();
      return Command::meet(a, sub());
    }
    case 5:
    case 6:
    case 7:
    case 8: {
      Command a = sub();
      return Command::seq(a, sub());
    }
    case 9:
    case 10: {
      Command a = sub();
      return Command::par(a, sub());
    }
    case 11:
    case 12: {
      Command a = sub();
      return Command::wconj(a, sub());
    }
    case 13: return Command::fin_iter(sub());
    case 14: return Command::om_iter(sub());
    case 15: return Command::inf_iter(sub());
    case 16: {
      Command a = sub();
      return Command::fixed_iter(a, static_cast<unsigned>(rng.below(3)));
    }
    case 17: return guar(gen_relation(rng, space), space);
    case 18: return rely(gen_relation(rng, space), space);
    default: return post(gen_test(rng, space), space);
  }
}

template <typename F>
std::vector<Command> gen_set(Rng& rng, unsigned lo, F member) {
  std::vector<Command> out;
  const unsigned n = lo + static_cast<unsigned>(rng.below(5 - lo));
  for (unsigned i = 0; i < n; ++i) out.push_back(member());
  return out;
}

}  // namespace

Value gen(Sort sort, Rng& rng, const GenCfg& cfg) {
  const StateSpace space(cfg.state_size);
  switch (sort) {
    case Sort::Command: return gen_command(rng, cfg.max_depth, cfg, space);
    case Sort::Test: return gen_test(rng, space);
    case Sort::Atomic: return gen_atomic(rng, space);
    case Sort::Pseudo: return gen_pseudo(rng, space);
    case Sort::Relation: return gen_relation(rng, space);
    case Sort::Natural: return static_cast<unsigned>(rng.below(cfg.bound + 1));
    case Sort::CommandSet:
      return gen_set(rng, 1, [&] { return gen_command(rng, cfg.max_depth, cfg, space); });
    case Sort::AtomicFixpoint: {
      Command body = rng.chance(1, 2) ? gen_atomic(rng, space) : gen_pseudo(rng, space);
      return rng.chance(1, 2) ? Command::fin_iter(body) : Command::om_iter(body);
    }
    case Sort::TestSet:
      return gen_set(rng, 0, [&] { return Command::test(gen_test(rng, space)); });
    case Sort::AtomicSet: return gen_set(rng, 0, [&] { return gen_atomic(rng, space); });
    case Sort::PseudoSet: return gen_set(rng, 0, [&] { return gen_pseudo(rng, space); });
  }
  return Command::bot();
}

Value gen(Sort sort, const GenCfg& cfg) {
  Rng rng(cfg.seed);
  return gen(sort, rng, cfg);
}

// ---------------------------------------------------------------------------
// Membership

Command project(Family family, const Command& c, const ModelCfg& cfg) {
  const TraceSet d = denote(c, cfg);
  const StateSpace& space = cfg.space;
  auto one_step = [&](Label l, Status st) {
    Relation r;
    for (State a = 0; a < space.size(); ++a)
      for (State b = 0; b < space.size(); ++b)
        if (d.contains(Trace{a, {{l, b}}, st})) r.insert(a, b);
    return r;
  };
  switch (family) {
    case Family::Tests: {
      TestPred t;
      for (State s = 0; s < space.size(); ++s)
        if (d.contains(Trace{s, {}, Status::Term})) t.insert(s);
      return Command::test(t);
    }
    case Family::Atomics:
      return Command::choice(Command::pgm(one_step(Label::Pi, Status::Term)),
                             Command::env(one_step(Label::Eps, Status::Term)));
    case Family::Pseudo: {
      Command a = Command::choice(Command::pgm(one_step(Label::Pi, Status::Term)),
                                  Command::env(one_step(Label::Eps, Status::Term)));
      Command b = Command::choice(Command::pgm(one_step(Label::Pi, Status::Abort)),
                                  Command::env(one_step(Label::Eps, Status::Abort)));
      return pseudo_atomic(a, b);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Checking

namespace {

enum class Outcome { Skip, Pass, Fail };

struct Verdict {
  Outcome outcome = Outcome::Skip;
  std::optional<Trace> witness;
  std::string violation;
};

Verdict evaluate(const Law& law, const Bindings& b, const ModelCfg& mcfg) {
  Verdict v;
  const Instance inst = law.build(b, mcfg);
  if (!inst.applicable) return v;
  for (const auto& h : inst.hypotheses) {
    const TraceSet l = denote(h.lhs, mcfg), r = denote(h.rhs, mcfg);
    if (h.equality ? !(l == r) : !r.subset_of(l)) return v;
  }
  const TraceSet l = denote(inst.lhs, mcfg), r = denote(inst.rhs, mcfg);
  if (auto extra = first_missing(l, r)) {
    v.outcome = Outcome::Fail;
    v.witness = extra;
    v.violation = "rhs-extra";
  } else if (inst.equality) {
    if (auto missing = first_missing(r, l)) {
      v.outcome = Outcome::Fail;
      v.witness = missing;
      v.violation = "lhs-missing";
      return v;
    }
    v.outcome = Outcome::Pass;
  } else {
    v.outcome = Outcome::Pass;
  }
  return v;
}

// Preorder subterm replacement.
Command replace_at(const Command& c, std::size_t& index, const Command& with) {
  if (index == 0) return with;
  --index;
  if (c.is_binary()) {
    const std::size_t nl = c.lhs().size();
    if (index < nl) return Command::binary(c.op(), replace_at(c.lhs(), index, with), c.rhs());
    index -= nl;
    return Command::binary(c.op(), c.lhs(), replace_at(c.rhs(), index, with));
  }
  switch (c.op()) {
    case Op::FixedIter: return Command::fixed_iter(replace_at(c.body(), index, with), c.exponent());
    case Op::FinIter: return Command::fin_iter(replace_at(c.body(), index, with));
    case Op::OmIter: return Command::om_iter(replace_at(c.body(), index, with));
    case Op::InfIter: return Command::inf_iter(replace_at(c.body(), index, with));
    default: return c;
  }
}

// Greedily swaps subterms of command-sorted bindings for bot or tau while the
// law keeps failing.
Bindings shrink(const Law& law, Bindings b, Verdict& v, const ModelCfg& mcfg) {
  const Command replacements[] = {Command::bot(), Command::tau()};
  bool progress = true;
  for (unsigned round = 0; progress && round < 64; ++round) {
    progress = false;
    for (const auto& [name, sort] : law.vars) {
      if (sort != Sort::Command) continue;
      const Command cur = std::get<Command>(b.at(name));
      for (std::size_t i = 0; i < cur.size() && !progress; ++i) {
        for (const Command& r : replacements) {
          std::size_t idx = i;
          Command cand = replace_at(cur, idx, r);
          if (cand.size() >= cur.size() && cand == cur) continue;
          if (cand.size() > cur.size()) continue;
          Bindings trial = b;
          trial[name] = cand;
          Verdict tv = evaluate(law, trial, mcfg);
          if (tv.outcome == Outcome::Fail) {
            b = std::move(trial);
            v = std::move(tv);
            progress = true;
            break;
          }
        }
      }
      if (progress) break;
    }
  }
  return b;
}

std::string render_value(const Value& v, const StateSpace& space) {
  struct {
    const StateSpace& space;
    std::string operator()(const Command& c) const { return render(c, space); }
    std::string operator()(const TestPred& t) const { return "test" + render_test(t); }
    std::string operator()(const Relation& r) const { return render_relation(r); }
    std::string operator()(unsigned n) const { return std::to_string(n); }
    std::string operator()(const std::vector<Command>& cs) const {
      std::string s = "[";
      for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + render(cs[i], space);
      return s + "]";
    }
  } vis{space};
  return std::visit(vis, v);
}

Bindings sample(const Law& law, Rng& rng, const GenCfg& cfg, bool use_hint) {
  if ((use_hint || law.hint_only) && law.hint) return law.hint(rng, cfg);
  Bindings b;
  for (const auto& [name, sort] : law.vars) b.emplace(name, gen(sort, rng, cfg));
  return b;
}

constexpr unsigned kAttempts = 30;

}  // namespace

LawReport check_law(const Law& law, const GenCfg& cfg) {
  const ModelCfg mcfg(StateSpace(cfg.state_size), cfg.bound);
  LawReport rep;
  rep.law = law.name;
  rep.seed = cfg.seed;
  rep.states = cfg.state_size;
  rep.bound = cfg.bound;
  const std::uint64_t law_seed = mix(cfg.seed, fnv1a(law.name));
  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    for (unsigned attempt = 0; attempt < kAttempts; ++attempt) {
      Rng rng(mix(mix(law_seed, trial), attempt));
      const bool use_hint = ((trial + attempt) % 2) == 0;
      Bindings b = sample(law, rng, cfg, use_hint);
      Verdict v = evaluate(law, b, mcfg);
      if (v.outcome == Outcome::Skip) {
        ++rep.skipped;
        continue;
      }
      ++rep.trials;
      if (v.outcome == Outcome::Pass) {
        ++rep.passes;
      } else if (!rep.counterexample) {
        if (!law.hint_only) b = shrink(law, std::move(b), v, mcfg);
        Counterexample cx;
        for (const auto& [name, val] : b) cx.bindings.emplace(name, render_value(val, mcfg.space));
        cx.witness = render_trace(*v.witness);
        cx.violation = v.violation;
        rep.counterexample = std::move(cx);
      }
      break;
    }
  }
  rep.exhausted = 2 * rep.trials < cfg.trials;
  return rep;
}

std::vector<LawReport> check_all(const GenCfg& cfg, unsigned threads) {
  const auto& laws = registry();
  std::vector<LawReport> out(laws.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < laws.size(); i = next++) out[i] = check_law(laws[i], cfg);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

namespace {

const char* family_suffix(Family f) {
  switch (f) {
    case Family::Tests: return "tests";
    case Family::Atomics: return "atomics";
    default: return "pseudo";
  }
}

}  // namespace

LawReport check_compatible_set(Family family, const GenCfg& cfg) {
  LawReport total;
  total.law = std::string("compatible_set.") + family_suffix(family);
  total.seed = cfg.seed;
  total.states = cfg.state_size;
  total.bound = cfg.bound;
  const std::string tag = std::string(".") + family_suffix(family);
  for (const Law& law : registry()) {
    if (law.name.rfind("closed_", 0) != 0) continue;
    if (law.name.find(tag) == std::string::npos) continue;
    LawReport r = check_law(law, cfg);
    total.trials += r.trials;
    total.passes += r.passes;
    total.skipped += r.skipped;
    total.exhausted = total.exhausted || r.exhausted;
    if (!total.counterexample && r.counterexample) total.counterexample = r.counterexample;
  }
  return total;
}

LawReport check_compatible_set(const std::vector<Command>& members, const GenCfg& cfg) {
  Law law;
  law.name = "closed_odot_distrib_meet_right.custom";
  law.statement = "(⨅Z) ; c = ⨅ z ; c for non-empty Z drawn from the family";
  law.vars = {{"Z", Sort::CommandSet}, {"c", Sort::Command}};
  law.build = [](const Bindings& b, const ModelCfg&) {
    const auto& z = std::get<std::vector<Command>>(b.at("Z"));
    const Command& c = std::get<Command>(b.at("c"));
    Instance inst;
    inst.applicable = !z.empty();
    if (z.empty()) return inst;
    Command meet_all = z.front(), rhs = Command::seq(z.front(), c);
    for (std::size_t i = 1; i < z.size(); ++i) {
      meet_all = Command::meet(meet_all, z[i]);
      rhs = Command::meet(rhs, Command::seq(z[i], c));
    }
    inst.lhs = Command::seq(meet_all, c);
    inst.rhs = rhs;
    return inst;
  };
  law.hint = [members](Rng& rng, const GenCfg& g) {
    std::vector<Command> z;
    const std::uint64_t mask = 1 + rng.below((std::uint64_t{1} << members.size()) - 1);
    for (std::size_t i = 0; i < members.size(); ++i)
      if (mask >> i & 1) z.push_back(members[i]);
    GenCfg shallow = g;
    shallow.max_depth = std::min(g.max_depth, 2u);
    return Bindings{{"Z", z}, {"c", gen(Sort::Command, rng, shallow)}};
  };
  const ModelCfg mcfg(StateSpace(cfg.state_size), cfg.bound);
  LawReport rep;
  rep.law = law.name;
  rep.seed = cfg.seed;
  rep.states = cfg.state_size;
  rep.bound = cfg.bound;
  const std::uint64_t law_seed = mix(cfg.seed, fnv1a(law.name));
  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(mix(law_seed, trial));
    Bindings b = law.hint(rng, cfg);
    Verdict v = evaluate(law, b, mcfg);
    ++rep.trials;
    if (v.outcome == Outcome::Pass) {
      ++rep.passes;
    } else if (!rep.counterexample) {
      Counterexample cx;
      for (const auto& [name, val] : b) cx.bindings.emplace(name, render_value(val, mcfg.space));
      cx.witness = render_trace(*v.witness);
      cx.violation = v.violation;
      rep.counterexample = std::move(cx);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::ordered_json to_json(const LawReport& r) {
  nlohmann::ordered_json j;
  j["law"] = r.law;
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["skipped"] = r.skipped;
  j["seed"] = r.seed;
  j["states"] = r.states;
  j["bound"] = r.bound;
  j["status"] = r.passed() ? "pass" : "fail";
  if (r.counterexample) {
    nlohmann::ordered_json b = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.counterexample->bindings) b[k] = v;
    j["counterexample"] = {{"bindings", b},
                           {"witness", r.counterexample->witness},
                           {"violation", r.counterexample->violation}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace

std::string report_json(const LawReport& r) { return to_json(r).dump(2); }

std::string reports_json(const std::vector<LawReport>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr.dump(2);
}

}  // namespace cra
