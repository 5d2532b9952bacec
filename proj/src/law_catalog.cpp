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

#include <algorithm>

#include "cra/expansion.hpp"
#include "cra/laws.hpp"
#include "cra/rg.hpp"

namespace cra {

namespace {

using C = Command;

C Seq(C a, C b) { return C::seq(std::move(a), std::move(b)); }
C Or(C a, C b) { return C::choice(std::move(a), std::move(b)); }
C And(C a, C b) { return C::meet(std::move(a), std::move(b)); }
C Par(C a, C b) { return C::par(std::move(a), std::move(b)); }
C Conj(C a, C b) { return C::wconj(std::move(a), std::move(b)); }
C Fin(C a) { return C::fin_iter(std::move(a)); }
C Om(C a) { return C::om_iter(std::move(a)); }
C Inf(C a) { return C::inf_iter(std::move(a)); }
C Pow(C a, unsigned n) { return C::fixed_iter(std::move(a), n); }
C T(TestPred t) { return C::test(std::move(t)); }

C sup(const std::vector<C>& cs) {
  if (cs.empty()) return C::bot();
  C out = cs.front();
  for (std::size_t i = 1; i < cs.size(); ++i) out = Or(out, cs[i]);
  return out;
}

C inf(const std::vector<C>& cs) {
  C out = cs.front();
  for (std::size_t i = 1; i < cs.size(); ++i) out = And(out, cs[i]);
  return out;
}

template <typename F>
std::vector<C> map(const std::vector<C>& cs, F f) {
  std::vector<C> out;
  for (const C& c : cs) out.push_back(f(c));
  return out;
}

/// Typed view of a sample.
struct Args {
  const Bindings& b;
  const ModelCfg& cfg;
  const StateSpace& space() const { return cfg.space; }
  C c(const char* n) const { return std::get<C>(b.at(n)); }
  TestPred t(const char* n) const { return std::get<TestPred>(b.at(n)); }
  Relation r(const char* n) const { return std::get<Relation>(b.at(n)); }
  unsigned n(const char* n) const { return std::get<unsigned>(b.at(n)); }
  const std::vector<C>& set(const char* n) const { return std::get<std::vector<C>>(b.at(n)); }
};

Instance eq(C l, C r) { return {std::move(l), std::move(r), true, {}, true}; }
Instance ref(C l, C r) { return {std::move(l), std::move(r), false, {}, true}; }
Instance skipped() {
  Instance i{C::bot(), C::bot(), true, {}, false};
  return i;
}

using Vars = std::vector<std::pair<std::string, Sort>>;
using BuildFn = std::function<Instance(const Args&)>;
using HintFn = std::function<Bindings(Rng&, const GenCfg&)>;

class Catalog {
 public:
  void add(std::string name, std::string statement, LawKind kind, Vars vars, BuildFn fn,
           std::optional<std::string> pair = std::nullopt, HintFn hint = nullptr,
           bool hint_only = false) {
    Law law;
    law.name = std::move(name);
    law.statement = std::move(statement);
    law.kind = kind;
    law.vars = std::move(vars);
    law.op_pair = std::move(pair);
    law.build = [fn = std::move(fn)](const Bindings& b, const ModelCfg& cfg) {
      return fn(Args{b, cfg});
    };
    law.hint = std::move(hint);
    law.hint_only = hint_only;
    laws_.push_back(std::move(law));
  }
  std::vector<Law> take() { return std::move(laws_); }

 private:
  std::vector<Law> laws_;
};

constexpr auto kEq = LawKind::Equality;
constexpr auto kRef = LawKind::Refinement;
constexpr auto kCond = LawKind::Conditional;
constexpr auto kMem = LawKind::Membership;

const Vars kCmd1 = {{"c", Sort::Command}};
const Vars kCmd2 = {{"c", Sort::Command}, {"d", Sort::Command}};
const Vars kCmd3 = {{"c1", Sort::Command}, {"c2", Sort::Command}, {"c3", Sort::Command}};

C cmd(Rng& rng, const GenCfg& g) { return std::get<C>(gen(Sort::Command, rng, g)); }
C atomic(Rng& rng, const GenCfg& g) { return std::get<C>(gen(Sort::Atomic, rng, g)); }
Relation rel(Rng& rng, const GenCfg& g) { return std::get<Relation>(gen(Sort::Relation, rng, g)); }

std::vector<OpPair> all_pairs(const StateSpace& s) {
  return {OpPair::par_seq(s), OpPair::conj_seq(s), OpPair::conj_par(s)};
}

// Pair-dependent laws are built against the sample's own state space, so the
// pair is rebuilt from its name inside each law.
OpPair pair_named(const std::string& name, const StateSpace& s) {
  for (const OpPair& p : all_pairs(s))
    if (p.name() == name) return p;
  return OpPair::par_seq(s);
}

const char* sync_symbol(Op op) { return op == Op::Par ? "∥" : "⋒"; }
const char* seq_symbol(Op op) { return op == Op::Seq ? ";" : "∥"; }

void lattice_laws(Catalog& k) {
  k.add("nondet_comm", "c ⊔ d = d ⊔ c", kEq, kCmd2,
        [](const Args& a) { return eq(Or(a.c("c"), a.c("d")), Or(a.c("d"), a.c("c"))); });
  k.add("nondet_assoc", "c1 ⊔ (c2 ⊔ c3) = (c1 ⊔ c2) ⊔ c3", kEq, kCmd3, [](const Args& a) {
    return eq(Or(a.c("c1"), Or(a.c("c2"), a.c("c3"))), Or(Or(a.c("c1"), a.c("c2")), a.c("c3")));
  });
  k.add("nondet_idem", "c ⊔ c = c", kEq, kCmd1,
        [](const Args& a) { return eq(Or(a.c("c"), a.c("c")), a.c("c")); });
  k.add("meet_comm", "c ⊓ d = d ⊓ c", kEq, kCmd2,
        [](const Args& a) { return eq(And(a.c("c"), a.c("d")), And(a.c("d"), a.c("c"))); });
  k.add("lattice_absorb", "c ⊔ (c ⊓ d) = c", kEq, kCmd2,
        [](const Args& a) { return eq(Or(a.c("c"), And(a.c("c"), a.c("d"))), a.c("c")); });
  k.add("nondet_upper", "c ⊔ d ⊒ c", kRef, kCmd2,
        [](const Args& a) { return ref(Or(a.c("c"), a.c("d")), a.c("c")); });
  k.add("top_greatest", "⊤ ⊒ c", kRef, kCmd1,
        [](const Args& a) { return ref(C::top(), a.c("c")); });
  k.add("bot_least", "c ⊒ ⊥", kRef, kCmd1, [](const Args& a) { return ref(a.c("c"), C::bot()); });
}

void monoid_laws(Catalog& k) {
  k.add("seq_assoc", "c1 ; (c2 ; c3) = (c1 ; c2) ; c3", kEq, kCmd3, [](const Args& a) {
    return eq(Seq(a.c("c1"), Seq(a.c("c2"), a.c("c3"))), Seq(Seq(a.c("c1"), a.c("c2")), a.c("c3")));
  });
  k.add("par_assoc", "c1 ∥ (c2 ∥ c3) = (c1 ∥ c2) ∥ c3", kEq, kCmd3, [](const Args& a) {
    return eq(Par(a.c("c1"), Par(a.c("c2"), a.c("c3"))), Par(Par(a.c("c1"), a.c("c2")), a.c("c3")));
  });
  k.add("conj_assoc", "c1 ⋒ (c2 ⋒ c3) = (c1 ⋒ c2) ⋒ c3", kEq, kCmd3, [](const Args& a) {
    return eq(Conj(a.c("c1"), Conj(a.c("c2"), a.c("c3"))),
              Conj(Conj(a.c("c1"), a.c("c2")), a.c("c3")));
  });
  k.add("seq_neutral_left", "τ ; c = c", kEq, kCmd1,
        [](const Args& a) { return eq(Seq(C::tau(), a.c("c")), a.c("c")); });
  k.add("seq_neutral_right", "c ; τ = c", kEq, kCmd1,
        [](const Args& a) { return eq(Seq(a.c("c"), C::tau()), a.c("c")); });
  k.add("par_neutral", "skip ∥ c = c", kEq, kCmd1,
        [](const Args& a) { return eq(Par(skip(a.space()), a.c("c")), a.c("c")); });
  k.add("conj_neutral", "chaos ⋒ c = c", kEq, kCmd1,
        [](const Args& a) { return eq(Conj(chaos(a.space()), a.c("c")), a.c("c")); });
  k.add("par_comm", "c1 ∥ c2 = c2 ∥ c1", kEq, {{"c1", Sort::Command}, {"c2", Sort::Command}},
        [](const Args& a) { return eq(Par(a.c("c1"), a.c("c2")), Par(a.c("c2"), a.c("c1"))); });
  k.add("conj_comm", "c1 ⋒ c2 = c2 ⋒ c1", kEq, {{"c1", Sort::Command}, {"c2", Sort::Command}},
        [](const Args& a) { return eq(Conj(a.c("c1"), a.c("c2")), Conj(a.c("c2"), a.c("c1"))); });
  k.add("conj_idem", "c ⋒ c = c", kEq, kCmd1,
        [](const Args& a) { return eq(Conj(a.c("c"), a.c("c")), a.c("c")); });
}

void quantale_laws(Catalog& k) {
  const Vars dc = {{"d", Sort::Command}, {"C", Sort::CommandSet}};
  k.add("seq_distrib_nondet_left", "d ; ⨆C = ⨆ d ; c   (C non-empty)", kEq, dc, [](const Args& a) {
    const C d = a.c("d");
    return eq(Seq(d, sup(a.set("C"))), sup(map(a.set("C"), [&](const C& c) { return Seq(d, c); })));
  });
  k.add("nondet_distrib_seq_right", "(⨆C) ; d = ⨆ c ; d   (C non-empty)", kEq, dc,
        [](const Args& a) {
          const C d = a.c("d");
          return eq(Seq(sup(a.set("C")), d),
                    sup(map(a.set("C"), [&](const C& c) { return Seq(c, d); })));
        });
  k.add("par_distrib_nondet", "d ∥ ⨆C = ⨆ d ∥ c   (C non-empty)", kEq, dc, [](const Args& a) {
    const C d = a.c("d");
    return eq(Par(d, sup(a.set("C"))), sup(map(a.set("C"), [&](const C& c) { return Par(d, c); })));
  });
  k.add("conj_distrib_nondet", "d ⋒ ⨆C = ⨆ d ⋒ c   (C non-empty)", kEq, dc, [](const Args& a) {
    const C d = a.c("d");
    return eq(Conj(d, sup(a.set("C"))),
              sup(map(a.set("C"), [&](const C& c) { return Conj(d, c); })));
  });
  k.add("bot_seq_annihilator", "⊥ ; c = ⊥", kEq, kCmd1,
        [](const Args& a) { return eq(Seq(C::bot(), a.c("c")), C::bot()); });
  k.add("abort_seq_annihilator", "⊤ ; c = ⊤", kEq, kCmd1,
        [](const Args& a) { return eq(Seq(C::top(), a.c("c")), C::top()); });
  k.add("abort_par_annihilator", "⊤ ∥ c = ⊤", kEq, kCmd1,
        [](const Args& a) { return eq(Par(C::top(), a.c("c")), C::top()); });
  k.add("abort_conj_annihilator", "⊤ ⋒ c = ⊤", kEq, kCmd1,
        [](const Args& a) { return eq(Conj(C::top(), a.c("c")), C::top()); });
}

void iteration_laws(Catalog& k) {
  k.add("iter_zero", "c^0 = τ", kEq, kCmd1,
        [](const Args& a) { return eq(Pow(a.c("c"), 0), C::tau()); });
  k.add("iter_succ", "c^(i+1) = c ; c^i", kEq, {{"c", Sort::Command}, {"i", Sort::Natural}},
        [](const Args& a) {
          const unsigned i = a.n("i");
          return eq(Pow(a.c("c"), i + 1), Seq(a.c("c"), Pow(a.c("c"), i)));
        });
  k.add("finite_iter_unfold", "c⋆ = τ ⊔ c ; c⋆", kEq, kCmd1, [](const Args& a) {
    return eq(Fin(a.c("c")), Or(C::tau(), Seq(a.c("c"), Fin(a.c("c")))));
  });
  k.add("iter_unfold", "c^ω = τ ⊔ c ; c^ω", kEq, kCmd1, [](const Args& a) {
    return eq(Om(a.c("c")), Or(C::tau(), Seq(a.c("c"), Om(a.c("c")))));
  });
  k.add("inf_iter_unfold", "c^∞ = c ; c^∞", kEq, kCmd1,
        [](const Args& a) { return eq(Inf(a.c("c")), Seq(a.c("c"), Inf(a.c("c")))); });

  const Vars ycd = {{"y", Sort::Command}, {"c", Sort::Command}, {"d", Sort::Command}};
  k.add(
      "finite_iter_induct", "y ⊒ d ⊔ c ; y  ⇒  y ⊒ c⋆ ; d", kCond, ycd,
      [](const Args& a) {
        Instance i = ref(a.c("y"), Seq(Fin(a.c("c")), a.c("d")));
        i.hypotheses.push_back({a.c("y"), Or(a.c("d"), Seq(a.c("c"), a.c("y")))});
        return i;
      },
      std::nullopt,
      [](Rng& rng, const GenCfg& g) {
        C c = cmd(rng, g), d = cmd(rng, g), e = cmd(rng, g);
        C it = rng.chance(1, 2) ? Fin(c) : Om(c);
        return Bindings{{"y", Seq(it, Or(d, e))}, {"c", c}, {"d", d}};
      });
  k.add(
      "iter_induct", "d ⊔ c ; y ⊒ y  ⇒  c^ω ; d ⊒ y", kCond, ycd,
      [](const Args& a) {
        Instance i = ref(Seq(Om(a.c("c")), a.c("d")), a.c("y"));
        i.hypotheses.push_back({Or(a.c("d"), Seq(a.c("c"), a.c("y"))), a.c("y")});
        return i;
      },
      std::nullopt,
      [](Rng& rng, const GenCfg& g) {
        C c = cmd(rng, g), d = cmd(rng, g), e = cmd(rng, g);
        C it = rng.chance(1, 2) ? Fin(c) : Om(c);
        return Bindings{{"y", Seq(it, And(d, e))}, {"c", c}, {"d", d}};
      });
  k.add(
      "inf_iter_induct", "c ; y ⊒ y  ⇒  c^∞ ⊒ y", kCond, {{"y", Sort::Command}, {"c", Sort::Command}},
      [](const Args& a) {
        Instance i = ref(Inf(a.c("c")), a.c("y"));
        i.hypotheses.push_back({Seq(a.c("c"), a.c("y")), a.c("y")});
        return i;
      },
      std::nullopt,
      [](Rng& rng, const GenCfg& g) {
        C c = cmd(rng, g), e = cmd(rng, g);
        C y = rng.chance(1, 2) ? Seq(Inf(c), e) : Seq(Om(c), Inf(c));
        return Bindings{{"y", y}, {"c", c}};
      });
  k.add("finite_to_fixed", "c⋆ ⊒ c^i", kRef, {{"c", Sort::Command}, {"i", Sort::Natural}},
        [](const Args& a) { return ref(Fin(a.c("c")), Pow(a.c("c"), a.n("i"))); });
  // Traces of at most `bound` steps need at most bound + 1 factors.
  k.add("finite_iter_decompose", "c⋆ = ⨆ c^i over i ≤ bound + 1", kEq, kCmd1, [](const Args& a) {
    std::vector<C> powers;
    for (unsigned i = 0; i <= a.cfg.bound + 1; ++i) powers.push_back(Pow(a.c("c"), i));
    return eq(Fin(a.c("c")), sup(powers));
  });
  k.add("fin_seq_fin", "c⋆ ; c⋆ = c⋆", kEq, kCmd1,
        [](const Args& a) { return eq(Seq(Fin(a.c("c")), Fin(a.c("c"))), Fin(a.c("c"))); });
}

void biquantale_laws(Catalog& k, const StateSpace& s0) {
  const Vars four = {{"c1", Sort::Command}, {"c2", Sort::Command},
                     {"d1", Sort::Command}, {"d2", Sort::Command}};
  const std::pair<const char*, const char*> interchange[] = {
      {"par_interchange_seq", "par_seq"},
      {"conj_interchange_seq", "conj_seq"},
      {"conj_interchange_par", "conj_par"}};
  for (const auto& [name, pair] : interchange) {
    const OpPair p0 = pair_named(pair, s0);
    const std::string x = sync_symbol(p0.sync_op()), o = seq_symbol(p0.seq_like_op());
    k.add(
        name,
        "(c1 " + o + " c2) " + x + " (d1 " + o + " d2) ⊒ (c1 " + x + " d1) " + o + " (c2 " + x +
            " d2)",
        kRef, four,
        [pair = std::string(pair)](const Args& a) {
          const OpPair p = pair_named(pair, a.space());
          return ref(p.sync(p.seq_like(a.c("c1"), a.c("c2")), p.seq_like(a.c("d1"), a.c("d2"))),
                     p.seq_like(p.sync(a.c("c1"), a.c("d1")), p.sync(a.c("c2"), a.c("d2"))));
        },
        pair);
  }

  for (const OpPair& p0 : all_pairs(s0)) {
    const std::string pn = p0.name();
    auto P = [pn](const Args& a) { return pair_named(pn, a.space()); };
    k.add("iota_to_eta." + pn, "I ⊒ η", kRef, {}, [P](const Args& a) {
      const OpPair p = P(a);
      return ref(p.iota(), p.eta());
    }, pn);
    k.add("eta_to_eta_otimes_eta." + pn, "η ⊒ η ⊗ η", kRef, {}, [P](const Args& a) {
      const OpPair p = P(a);
      return ref(p.eta(), p.sync(p.eta(), p.eta()));
    }, pn);
    k.add("eta_otimes_eta_to_eta." + pn, "η ⊗ η ⊒ η", kRef, {}, [P](const Args& a) {
      const OpPair p = P(a);
      return ref(p.sync(p.eta(), p.eta()), p.eta());
    }, pn);
    k.add("iota_odot_iota_to_iota." + pn, "I ⊙ I ⊒ I", kRef, {}, [P](const Args& a) {
      const OpPair p = P(a);
      return ref(p.seq_like(p.iota(), p.iota()), p.iota());
    }, pn);
    k.add("iota_to_iota_odot_iota." + pn, "I ⊒ I ⊙ I", kRef, {}, [P](const Args& a) {
      const OpPair p = P(a);
      return ref(p.iota(), p.seq_like(p.iota(), p.iota()));
    }, pn);
    k.add("sync_neutral." + pn, "I ⊗ c = c", kEq, kCmd1, [P](const Args& a) {
      const OpPair p = P(a);
      return eq(p.sync(p.iota(), a.c("c")), a.c("c"));
    }, pn);
    k.add(
        "weak_sync_distrib_odot." + pn, "d ⊒ d ⊙ d  ⇒  d ⊗ (c1 ⊙ c2) ⊒ (d ⊗ c1) ⊙ (d ⊗ c2)", kCond,
        {{"d", Sort::Command}, {"c1", Sort::Command}, {"c2", Sort::Command}},
        [P](const Args& a) {
          const OpPair p = P(a);
          const C d = a.c("d");
          Instance i = ref(p.sync(d, p.seq_like(a.c("c1"), a.c("c2"))),
                           p.seq_like(p.sync(d, a.c("c1")), p.sync(d, a.c("c2"))));
          i.hypotheses.push_back({d, p.seq_like(d, d)});
          return i;
        },
        pn,
        [pn](Rng& rng, const GenCfg& g) {
          const StateSpace s(g.state_size);
          C d = pn == "conj_par" ? (rng.chance(1, 2) ? guar(rel(rng, g), s)
                                                     : Om(C::env(rel(rng, g))))
                                 : (rng.chance(1, 2) ? Om(cmd(rng, g)) : Fin(cmd(rng, g)));
          return Bindings{{"d", d}, {"c1", cmd(rng, g)}, {"c2", cmd(rng, g)}};
        });
  }

  for (Op sync : {Op::Par, Op::WConj}) {
    const std::string x = sync_symbol(sync);
    const std::string nm = sync == Op::Par ? "par" : "conj";
    k.add(
        "whole_if_first." + nm, "τ " + x + " c1 = ⊥  ⇒  τ " + x + " (c1 ; c2) = ⊥", kCond,
        {{"c1", Sort::Command}, {"c2", Sort::Command}},
        [sync](const Args& a) {
          Instance i = eq(C::binary(sync, C::tau(), Seq(a.c("c1"), a.c("c2"))), C::bot());
          i.hypotheses.push_back({C::binary(sync, C::tau(), a.c("c1")), C::bot(), true});
          return i;
        },
        std::nullopt,
        [](Rng& rng, const GenCfg& g) {
          C c1 = rng.chance(1, 2) ? Seq(atomic(rng, g), cmd(rng, g)) : atomic(rng, g);
          return Bindings{{"c1", c1}, {"c2", cmd(rng, g)}};
        });
  }
}

// Distribution of d into ⊙ and iterations, for the pairs whose ⊙ is ;.
void distrib_laws(Catalog& k, const StateSpace& s0) {
  for (const OpPair& p0 : {OpPair::par_seq(s0), OpPair::conj_seq(s0)}) {
    const std::string pn = p0.name();
    const Op sync = p0.sync_op();
    const std::string x = sync_symbol(sync);
    auto S = [sync](C a, C b) { return C::binary(sync, std::move(a), std::move(b)); };
    auto weak_hint = [](bool with_i) {
      return [with_i](Rng& rng, const GenCfg& g) {
        C d = rng.chance(1, 2) ? Om(cmd(rng, g)) : Fin(cmd(rng, g));
        Bindings b{{"d", d}, {"c", cmd(rng, g)}};
        if (with_i) b.emplace("i", static_cast<unsigned>(rng.below(g.bound)));
        return b;
      };
    };
    const Vars dc = {{"d", Sort::Command}, {"c", Sort::Command}};
    const Vars dci = {{"d", Sort::Command}, {"c", Sort::Command}, {"i", Sort::Natural}};
    k.add(
        "weak_sync_distrib_iter_zero." + pn, "d " + x + " τ ⊒ τ  ⇒  d " + x + " c^0 ⊒ (d " + x + " c)^0",
        kCond, dc,
        [S](const Args& a) {
          Instance i = ref(S(a.c("d"), Pow(a.c("c"), 0)), Pow(S(a.c("d"), a.c("c")), 0));
          i.hypotheses.push_back({S(a.c("d"), C::tau()), C::tau()});
          return i;
        },
        pn, weak_hint(false));
    k.add(
        "weak_sync_distrib_iter_succ." + pn,
        "d ⊒ d ; d  ⇒  d " + x + " c^(i+1) ⊒ (d " + x + " c)^(i+1)", kCond, dci,
        [S](const Args& a) {
          const unsigned n = a.n("i");
          if (n + 1 > a.cfg.bound) return skipped();
          Instance i = ref(S(a.c("d"), Pow(a.c("c"), n + 1)), Pow(S(a.c("d"), a.c("c")), n + 1));
          i.hypotheses.push_back({a.c("d"), Seq(a.c("d"), a.c("d"))});
          return i;
        },
        pn, weak_hint(true));
    k.add(
        "weak_sync_distrib_finite_iter." + pn,
        "d " + x + " τ ⊒ τ ∧ d ⊒ d ; d  ⇒  d " + x + " c⋆ ⊒ (d " + x + " c)⋆", kCond, dc,
        [S](const Args& a) {
          Instance i = ref(S(a.c("d"), Fin(a.c("c"))), Fin(S(a.c("d"), a.c("c"))));
          i.hypotheses.push_back({S(a.c("d"), C::tau()), C::tau()});
          i.hypotheses.push_back({a.c("d"), Seq(a.c("d"), a.c("d"))});
          return i;
        },
        pn, weak_hint(false));

    const Vars fc12 = {{"d", Sort::AtomicFixpoint}, {"c1", Sort::Command}, {"c2", Sort::Command}};
    const Vars fc = {{"d", Sort::AtomicFixpoint}, {"c", Sort::Command}};
    const Vars fci = {{"d", Sort::AtomicFixpoint}, {"c", Sort::Command}, {"i", Sort::Natural}};
    k.add("sync_distrib_odot." + pn, "d " + x + " (c1 ; c2) = (d " + x + " c1) ; (d " + x + " c2)",
          kEq, fc12, [S](const Args& a) {
            const C d = a.c("d");
            return eq(S(d, Seq(a.c("c1"), a.c("c2"))), Seq(S(d, a.c("c1")), S(d, a.c("c2"))));
          }, pn);
    k.add("sync_distrib_iter_zero." + pn, "d " + x + " c^0 = (d " + x + " c)^0", kEq, fc,
          [S](const Args& a) {
            return eq(S(a.c("d"), Pow(a.c("c"), 0)), Pow(S(a.c("d"), a.c("c")), 0));
          }, pn);
    k.add("sync_distrib_iter_succ." + pn, "d " + x + " c^(i+1) = (d " + x + " c)^(i+1)", kEq, fci,
          [S](const Args& a) {
            const unsigned n = std::min(a.n("i"), a.cfg.bound - 1) + 1;
            return eq(S(a.c("d"), Pow(a.c("c"), n)), Pow(S(a.c("d"), a.c("c")), n));
          }, pn);
    k.add("sync_distrib_finite_iter." + pn, "d " + x + " c⋆ = (d " + x + " c)⋆", kEq, fc,
          [S](const Args& a) {
            return eq(S(a.c("d"), Fin(a.c("c"))), Fin(S(a.c("d"), a.c("c"))));
          }, pn);
  }
}

void test_laws(Catalog& k) {
  const Vars t1 = {{"t", Sort::Test}};
  const Vars t2 = {{"t1", Sort::Test}, {"t2", Sort::Test}};
  k.add("eta_to_test", "τ ⊒ t", kRef, t1, [](const Args& a) { return ref(C::tau(), T(a.t("t"))); });
  k.add("test_and_negate_disjoint", "t ⊓ ¬t = ⊥", kEq, t1, [](const Args& a) {
    return eq(And(T(a.t("t")), T(negate_test(a.t("t"), a.space()))), C::bot());
  });
  k.add("test_or_negate_univ", "t ⊔ ¬t = τ", kEq, t1, [](const Args& a) {
    return eq(Or(T(a.t("t")), T(negate_test(a.t("t"), a.space()))), C::tau());
  });
  k.add("test_odot_test", "t1 ; t2 = t1 ⊓ t2", kEq, t2, [](const Args& a) {
    return eq(Seq(T(a.t("t1")), T(a.t("t2"))), And(T(a.t("t1")), T(a.t("t2"))));
  });
  k.add("test_meet_is_intersection", "t1 ⊓ t2 = test(t1 ∩ t2)", kEq, t2, [](const Args& a) {
    return eq(And(T(a.t("t1")), T(a.t("t2"))), T(a.t("t1").intersect(a.t("t2"))));
  });
  for (Op sync : {Op::Par, Op::WConj}) {
    const std::string x = sync_symbol(sync);
    const std::string nm = sync == Op::Par ? "par" : "conj";
    const std::string pn = sync == Op::Par ? "par_seq" : "conj_seq";
    auto S = [sync](C a, C b) { return C::binary(sync, std::move(a), std::move(b)); };
    k.add("test_sync_test." + nm, "t1 " + x + " t2 = t1 ⊓ t2", kEq, t2, [S](const Args& a) {
      return eq(S(T(a.t("t1")), T(a.t("t2"))), And(T(a.t("t1")), T(a.t("t2"))));
    });
    k.add("test_distrib_sync." + pn, "t ; (c1 " + x + " c2) = (t ; c1) " + x + " (t ; c2)", kEq,
          {{"t", Sort::Test}, {"c1", Sort::Command}, {"c2", Sort::Command}}, [S](const Args& a) {
            const C t = T(a.t("t"));
            return eq(Seq(t, S(a.c("c1"), a.c("c2"))), S(Seq(t, a.c("c1")), Seq(t, a.c("c2"))));
          }, pn);
    k.add("final_test." + pn, "(c1 ; t) " + x + " c2 = (c1 " + x + " c2) ; t", kEq,
          {{"t", Sort::Test}, {"c1", Sort::Command}, {"c2", Sort::Command}}, [S](const Args& a) {
            const C t = T(a.t("t"));
            return eq(S(Seq(a.c("c1"), t), a.c("c2")), Seq(S(a.c("c1"), a.c("c2")), t));
          }, pn);
  }
  k.add("assert_def", "assert t = τ ⊔ ¬t ; ⊤", kEq, t1, [](const Args& a) {
    const TestPred t = a.t("t");
    return eq(assert_cmd(t, a.space()), Or(C::tau(), Seq(T(negate_test(t, a.space())), C::top())));
  });
  k.add("assert_alt", "assert t = t ⊔ ¬t ; ⊤", kEq, t1, [](const Args& a) {
    const TestPred t = a.t("t");
    return eq(assert_cmd(t, a.space()), Or(T(t), Seq(T(negate_test(t, a.space())), C::top())));
  });
  k.add("assert_seq", "assert t ; c = c ⊔ ¬t ; ⊤", kEq, {{"t", Sort::Test}, {"c", Sort::Command}},
        [](const Args& a) {
          const TestPred t = a.t("t");
          return eq(Seq(assert_cmd(t, a.space()), a.c("c")),
                    Or(a.c("c"), Seq(T(negate_test(t, a.space())), C::top())));
        });
}

void compatible_laws(Catalog& k) {
  struct Fam {
    Family family;
    const char* tag;
    Sort set;
    Sort member;
  };
  const Fam fams[] = {{Family::Tests, "tests", Sort::TestSet, Sort::Test},
                      {Family::Atomics, "atomics", Sort::AtomicSet, Sort::Atomic},
                      {Family::Pseudo, "pseudo", Sort::PseudoSet, Sort::Pseudo}};
  for (const Fam& f : fams) {
    const Family fam = f.family;
    const std::string tag = f.tag;
    const Sort member = f.member == Sort::Test ? Sort::TestSet : f.member;
    auto as_cmd = [member](const Args& a, const char* n) -> C {
      if (member == Sort::TestSet) {
        const auto& v = a.set(n);
        return v.empty() ? C::test({}) : v.front();
      }
      return a.c(n);
    };
    k.add("closed_sup_closed." + tag, "Z ⊆ S  ⇒  ⨆Z ∈ S", kMem, {{"Z", f.set}},
          [fam](const Args& a) {
            const C s = sup(a.set("Z"));
            return eq(s, project(fam, s, a.cfg));
          });
    k.add("closed_inf_closed." + tag, "Z ⊆ S, Z non-empty  ⇒  ⨅Z ∈ S", kMem, {{"Z", f.set}},
          [fam](const Args& a) {
            if (a.set("Z").empty()) return skipped();
            const C s = inf(a.set("Z"));
            return eq(s, project(fam, s, a.cfg));
          });
    for (Op sync : {Op::Par, Op::WConj}) {
      const std::string nm = sync == Op::Par ? "par" : "conj";
      const Vars zz = member == Sort::TestSet
                          ? Vars{{"z1", Sort::TestSet}, {"z2", Sort::TestSet}}
                          : Vars{{"z1", member}, {"z2", member}};
      k.add("closed_sync_closed." + nm + "." + tag,
            std::string("z1, z2 ∈ S  ⇒  z1 ") + sync_symbol(sync) + " z2 ∈ S", kMem, zz,
            [fam, sync, as_cmd](const Args& a) {
              const C s = C::binary(sync, as_cmd(a, "z1"), as_cmd(a, "z2"));
              return eq(s, project(fam, s, a.cfg));
            });
    }
    k.add("closed_odot_distrib_meet_right." + tag, "Z ⊆ S  ⇒  (⨅Z) ; c = ⨅ z ; c", kEq,
          {{"Z", f.set}, {"c", Sort::Command}}, [](const Args& a) {
            const auto& z = a.set("Z");
            if (z.empty()) return skipped();
            const C c = a.c("c");
            return eq(Seq(inf(z), c), inf(map(z, [&](const C& zi) { return Seq(zi, c); })));
          });
  }
}

void atomic_algebra_laws(Catalog& k, const StateSpace& s0) {
  for (const OpPair& p0 : {OpPair::par_seq(s0), OpPair::conj_seq(s0)}) {
    for (Sort fam : {Sort::Atomic, Sort::Pseudo}) {
      const std::string pn = p0.name();
      const std::string sfx = "." + pn + (fam == Sort::Pseudo ? ".pseudo" : "");
      const Op sync = p0.sync_op();
      const std::string x = sync_symbol(sync);
      auto S = [sync](C a, C b) { return C::binary(sync, std::move(a), std::move(b)); };
      const Vars a1 = {{"a", fam}};
      const Vars a2 = {{"a1", fam}, {"a2", fam}};
      const Vars a2c = {{"a1", fam}, {"a2", fam}, {"c1", Sort::Command}, {"c2", Sort::Command}};
      const Vars a2c1 = {{"a1", fam}, {"a2", fam}, {"c1", Sort::Command}};
      const Vars a2ci = {{"a1", fam}, {"a2", fam}, {"c1", Sort::Command}, {"c2", Sort::Command},
                         {"i", Sort::Natural}};
      const Vars a2i = {{"a1", fam}, {"a2", fam}, {"i", Sort::Natural}};
      auto fp = [fam](Rng& rng, const GenCfg& g) {
        C body = std::get<C>(gen(fam, rng, g));
        return rng.chance(1, 2) ? Fin(body) : Om(body);
      };

      k.add("sync_interchange_odot" + sfx,
            "(a1 ; c1) " + x + " (a2 ; c2) = (a1 " + x + " a2) ; (c1 " + x + " c2)", kEq, a2c,
            [S](const Args& a) {
              return eq(S(Seq(a.c("a1"), a.c("c1")), Seq(a.c("a2"), a.c("c2"))),
                        Seq(S(a.c("a1"), a.c("a2")), S(a.c("c1"), a.c("c2"))));
            }, pn);
      k.add("atomic_interchange_inf_iter" + sfx, "a1^∞ " + x + " a2^∞ = (a1 " + x + " a2)^∞", kEq,
            a2, [S](const Args& a) {
              return eq(S(Inf(a.c("a1")), Inf(a.c("a2"))), Inf(S(a.c("a1"), a.c("a2"))));
            }, pn);
      k.add("atomic_sync_eta" + sfx, "τ " + x + " a = ⊥", kEq, a1,
            [S](const Args& a) { return eq(S(C::tau(), a.c("a")), C::bot()); }, pn);
      k.add("atomic_neutral" + sfx, "ι " + x + " a = a", kEq, a1, [S, pn](const Args& a) {
        return eq(S(pair_named(pn, a.space()).atomic_iota(), a.c("a")), a.c("a"));
      }, pn);
      k.add("atomic_odot_sync_eta" + sfx, "τ " + x + " (a ; c) = ⊥", kEq,
            {{"a", fam}, {"c", Sort::Command}},
            [S](const Args& a) { return eq(S(C::tau(), Seq(a.c("a"), a.c("c"))), C::bot()); }, pn);
      const Vars dv = {{"d", Sort::Command}};
      k.add(
          "atomic_fp_sync_eta" + sfx, "d " + x + " τ = τ  for d = a⋆ or a^ω", kEq, dv,
          [S](const Args& a) { return eq(S(a.c("d"), C::tau()), C::tau()); }, pn,
          [fp](Rng& rng, const GenCfg& g) { return Bindings{{"d", fp(rng, g)}}; }, true);
      k.add(
          "atomic_fp_distrib_seq" + sfx,
          "d " + x + " (c1 ; c2) = (d " + x + " c1) ; (d " + x + " c2)  for d = a⋆ or a^ω", kEq,
          {{"d", Sort::Command}, {"c1", Sort::Command}, {"c2", Sort::Command}},
          [S](const Args& a) {
            const C d = a.c("d");
            return eq(S(d, Seq(a.c("c1"), a.c("c2"))), Seq(S(d, a.c("c1")), S(d, a.c("c2"))));
          },
          pn,
          [fp](Rng& rng, const GenCfg& g) {
            C d = fp(rng, g);
            return Bindings{{"d", d}, {"c1", cmd(rng, g)}, {"c2", cmd(rng, g)}};
          },
          true);
      k.add("atomic_sync_fixed_iter_prefix" + sfx,
            "(a1^i ; c1) " + x + " (a2^i ; c2) = (a1 " + x + " a2)^i ; (c1 " + x + " c2)", kEq,
            a2ci, [S](const Args& a) {
              const unsigned i = a.n("i");
              return eq(S(Seq(Pow(a.c("a1"), i), a.c("c1")), Seq(Pow(a.c("a2"), i), a.c("c2"))),
                        Seq(Pow(S(a.c("a1"), a.c("a2")), i), S(a.c("c1"), a.c("c2"))));
            }, pn);
      k.add("atomic_sync_fixed_iter" + sfx, "a1^i " + x + " a2^i = (a1 " + x + " a2)^i", kEq, a2i,
            [S](const Args& a) {
              const unsigned i = a.n("i");
              return eq(S(Pow(a.c("a1"), i), Pow(a.c("a2"), i)), Pow(S(a.c("a1"), a.c("a2")), i));
            }, pn);
      k.add("atomic_sync_finite_iter_prefix" + sfx,
            "(a1⋆ ; c1) " + x + " (a2⋆ ; c2) = (a1 " + x + " a2)⋆ ; ((c1 " + x + " a2⋆ ; c2) ⊔ (a1⋆ ; c1 " +
                x + " c2))",
            kEq, a2c, [S](const Args& a) {
              const C l = Seq(Fin(a.c("a1")), a.c("c1")), r = Seq(Fin(a.c("a2")), a.c("c2"));
              return eq(S(l, r), Seq(Fin(S(a.c("a1"), a.c("a2"))),
                                     Or(S(a.c("c1"), r), S(l, a.c("c2")))));
            }, pn);
      k.add("atomic_sync_finite_iter" + sfx, "a1⋆ " + x + " a2⋆ = (a1 " + x + " a2)⋆", kEq, a2,
            [S](const Args& a) {
              return eq(S(Fin(a.c("a1")), Fin(a.c("a2"))), Fin(S(a.c("a1"), a.c("a2"))));
            }, pn);
      k.add("atomic_sync_finite_iter_infinite" + sfx,
            "(a1⋆ ; c1) " + x + " a2^∞ = (a1 " + x + " a2)⋆ ; (c1 " + x + " a2^∞)", kEq, a2c1,
            [S](const Args& a) {
              return eq(S(Seq(Fin(a.c("a1")), a.c("c1")), Inf(a.c("a2"))),
                        Seq(Fin(S(a.c("a1"), a.c("a2"))), S(a.c("c1"), Inf(a.c("a2")))));
            }, pn);
      k.add("atomic_sync_iter_infinite" + sfx,
            "(a1^ω ; c1) " + x + " a2^∞ = (a1 " + x + " a2)^ω ; (c1 " + x + " a2^∞)", kEq, a2c1,
            [S](const Args& a) {
              return eq(S(Seq(Om(a.c("a1")), a.c("c1")), Inf(a.c("a2"))),
                        Seq(Om(S(a.c("a1"), a.c("a2"))), S(a.c("c1"), Inf(a.c("a2")))));
            }, pn);
      k.add("atomic_sync_iter_prefix" + sfx,
            "(a1^ω ; c1) " + x + " (a2^ω ; c2) = (a1 " + x + " a2)^ω ; ((c1 " + x + " a2^ω ; c2) ⊔ (a1^ω ; c1 " +
                x + " c2))",
            kEq, a2c, [S](const Args& a) {
              const C l = Seq(Om(a.c("a1")), a.c("c1")), r = Seq(Om(a.c("a2")), a.c("c2"));
              return eq(S(l, r), Seq(Om(S(a.c("a1"), a.c("a2"))),
                                     Or(S(a.c("c1"), r), S(l, a.c("c2")))));
            }, pn);
      k.add("atomic_sync_iter" + sfx, "a1^ω " + x + " a2^ω = (a1 " + x + " a2)^ω", kEq, a2,
            [S](const Args& a) {
              return eq(S(Om(a.c("a1")), Om(a.c("a2"))), Om(S(a.c("a1"), a.c("a2"))));
            }, pn);
    }
  }
}

void step_laws(Catalog& k) {
  const Vars rr = {{"r1", Sort::Relation}, {"r2", Sort::Relation}};
  k.add("expanded_form", "c = assert ¬t' ; (t ⊔ ⨆ a ; c')", kEq, kCmd1, [](const Args& a) {
    return eq(a.c("c"), rebuild(expand(a.c("c"), a.space()), a.space()));
  });
  k.add("cpstep_conj_cpstep", "π(r1) ⋒ π(r2) = π(r1 ∩ r2)", kEq, rr, [](const Args& a) {
    return eq(Conj(C::pgm(a.r("r1")), C::pgm(a.r("r2"))), C::pgm(a.r("r1").intersect(a.r("r2"))));
  });
  k.add("cestep_conj_cestep", "ε(r1) ⋒ ε(r2) = ε(r1 ∩ r2)", kEq, rr, [](const Args& a) {
    return eq(Conj(C::env(a.r("r1")), C::env(a.r("r2"))), C::env(a.r("r1").intersect(a.r("r2"))));
  });
  k.add("cpstep_conj_cestep", "π(r1) ⋒ ε(r2) = ⊥", kEq, rr, [](const Args& a) {
    return eq(Conj(C::pgm(a.r("r1")), C::env(a.r("r2"))), C::bot());
  });
  k.add("cpstep_par_cestep", "π(r1) ∥ ε(r2) = π(r1 ∩ r2)", kEq, rr, [](const Args& a) {
    return eq(Par(C::pgm(a.r("r1")), C::env(a.r("r2"))), C::pgm(a.r("r1").intersect(a.r("r2"))));
  });
  k.add("cestep_par_cestep", "ε(r1) ∥ ε(r2) = ε(r1 ∩ r2)", kEq, rr, [](const Args& a) {
    return eq(Par(C::env(a.r("r1")), C::env(a.r("r2"))), C::env(a.r("r1").intersect(a.r("r2"))));
  });
  k.add("cpstep_par_cpstep", "π(r1) ∥ π(r2) = ⊥", kEq, rr, [](const Args& a) {
    return eq(Par(C::pgm(a.r("r1")), C::pgm(a.r("r2"))), C::bot());
  });
  auto shrink_hint = [](Rng& rng, const GenCfg& g) {
    Relation r1 = rel(rng, g);
    return Bindings{{"r1", r1}, {"r2", r1.intersect(rel(rng, g))}};
  };
  k.add(
      "cpstep_refine", "r1 ⊇ r2  ⇒  π(r1) ⊒ π(r2)", kCond, rr,
      [](const Args& a) {
        if (!a.r("r2").subset_of(a.r("r1"))) return skipped();
        return ref(C::pgm(a.r("r1")), C::pgm(a.r("r2")));
      },
      std::nullopt, shrink_hint);
  k.add(
      "cestep_refine", "r1 ⊇ r2  ⇒  ε(r1) ⊒ ε(r2)", kCond, rr,
      [](const Args& a) {
        if (!a.r("r2").subset_of(a.r("r1"))) return skipped();
        return ref(C::env(a.r("r1")), C::env(a.r("r2")));
      },
      std::nullopt, shrink_hint);
  k.add("alpha_par_alpha", "α ∥ α = α", kEq, {}, [](const Args& a) {
    return eq(Par(bigstep_alpha(a.space()), bigstep_alpha(a.space())), bigstep_alpha(a.space()));
  });
}

void rely_guarantee_laws(Catalog& k) {
  const Vars gg = {{"g1", Sort::Relation}, {"g2", Sort::Relation}};
  k.add("guar_conj", "guar g1 ⋒ guar g2 = guar (g1 ∩ g2)", kEq, gg, [](const Args& a) {
    const auto& s = a.space();
    return eq(Conj(guar(a.r("g1"), s), guar(a.r("g2"), s)), guar(a.r("g1").intersect(a.r("g2")), s));
  });
  k.add("guar_par", "guar g1 ∥ guar g2 = guar (g1 ∪ g2)", kEq, gg, [](const Args& a) {
    const auto& s = a.space();
    return eq(Par(guar(a.r("g1"), s), guar(a.r("g2"), s)), guar(a.r("g1").unite(a.r("g2")), s));
  });
  k.add("guar_distrib_seq", "guar g ⋒ (c1 ; c2) = (guar g ⋒ c1) ; (guar g ⋒ c2)", kEq,
        {{"g", Sort::Relation}, {"c1", Sort::Command}, {"c2", Sort::Command}}, [](const Args& a) {
          const C g = guar(a.r("g"), a.space());
          return eq(Conj(g, Seq(a.c("c1"), a.c("c2"))), Seq(Conj(g, a.c("c1")), Conj(g, a.c("c2"))));
        });
  k.add("term_par_term", "term ∥ term = term", kEq, {}, [](const Args& a) {
    return eq(Par(term_cmd(a.space()), term_cmd(a.space())), term_cmd(a.space()));
  });
  k.add(
      "rely_weaken", "r1 ⊆ r2  ⇒  rely r1 ⊒ rely r2", kCond,
      {{"r1", Sort::Relation}, {"r2", Sort::Relation}},
      [](const Args& a) {
        if (!a.r("r1").subset_of(a.r("r2"))) return skipped();
        return ref(rely(a.r("r1"), a.space()), rely(a.r("r2"), a.space()));
      },
      std::nullopt,
      [](Rng& rng, const GenCfg& g) {
        Relation r1 = rel(rng, g);
        return Bindings{{"r1", r1}, {"r2", r1.unite(rel(rng, g))}};
      });
  k.add("rely_conj", "rely r1 ⋒ rely r2 = rely (r1 ∩ r2)", kEq,
        {{"r1", Sort::Relation}, {"r2", Sort::Relation}}, [](const Args& a) {
          const auto& s = a.space();
          return eq(Conj(rely(a.r("r1"), s), rely(a.r("r2"), s)),
                    rely(a.r("r1").intersect(a.r("r2")), s));
        });
  k.add("rely_par_guar", "rely r ∥ guar r = rely r", kEq, {{"r", Sort::Relation}},
        [](const Args& a) {
          const auto& s = a.space();
          return eq(Par(rely(a.r("r"), s), guar(a.r("r"), s)), rely(a.r("r"), s));
        });
  k.add("rely_distrib_seq", "rely r ⋒ (c1 ; c2) = (rely r ⋒ c1) ; (rely r ⋒ c2)", kEq,
        {{"r", Sort::Relation}, {"c1", Sort::Command}, {"c2", Sort::Command}}, [](const Args& a) {
          const C r = rely(a.r("r"), a.space());
          return eq(Conj(r, Seq(a.c("c1"), a.c("c2"))), Seq(Conj(r, a.c("c1")), Conj(r, a.c("c2"))));
        });
  k.add("rely_guar_intro", "rely r ⋒ (c1 ∥ c2) ⊒ (rely r ⋒ c1) ∥ (guar r ⋒ c2)", kRef,
        {{"r", Sort::Relation}, {"c1", Sort::Command}, {"c2", Sort::Command}}, [](const Args& a) {
          const auto& s = a.space();
          const C r = rely(a.r("r"), s), g = guar(a.r("r"), s);
          return ref(Conj(r, Par(a.c("c1"), a.c("c2"))), Par(Conj(r, a.c("c1")), Conj(g, a.c("c2"))));
        });
  auto widen_hint = [](bool tests) {
    return [tests](Rng& rng, const GenCfg& g) {
      Relation r = rel(rng, g);
      Bindings b{{"r", r}, {"r1", r.unite(rel(rng, g))}, {"r2", r.unite(rel(rng, g))}};
      if (tests) {
        b.emplace("t1", gen(Sort::Test, rng, g));
        b.emplace("t2", gen(Sort::Test, rng, g));
      } else {
        b.emplace("c1", gen(Sort::Command, rng, g));
        b.emplace("c2", gen(Sort::Command, rng, g));
      }
      return b;
    };
  };
  k.add(
      "rely_guar_intro_symmetric",
      "r ⊆ r1 ∧ r ⊆ r2  ⇒  rely r ⋒ (c1 ∥ c2) ⊒ (rely r1 ⋒ guar r2 ⋒ c1) ∥ (guar r1 ⋒ rely r2 ⋒ c2)",
      kCond,
      {{"r", Sort::Relation}, {"r1", Sort::Relation}, {"r2", Sort::Relation},
       {"c1", Sort::Command}, {"c2", Sort::Command}},
      [](const Args& a) {
        const auto& s = a.space();
        const Relation r = a.r("r"), r1 = a.r("r1"), r2 = a.r("r2");
        if (!r.subset_of(r1) || !r.subset_of(r2)) return skipped();
        return ref(Conj(rely(r, s), Par(a.c("c1"), a.c("c2"))),
                   Par(Conj(Conj(rely(r1, s), guar(r2, s)), a.c("c1")),
                       Conj(Conj(guar(r1, s), rely(r2, s)), a.c("c2"))));
      },
      std::nullopt, widen_hint(false));
  k.add("parallel_spec", "post (t1 ∩ t2) = post t1 ∥ post t2", kEq,
        {{"t1", Sort::Test}, {"t2", Sort::Test}}, [](const Args& a) {
          const auto& s = a.space();
          return eq(post(a.t("t1").intersect(a.t("t2")), s),
                    Par(post(a.t("t1"), s), post(a.t("t2"), s)));
        });
  k.add(
      "introduce_parallel",
      "r ⊆ r1 ∧ r ⊆ r2  ⇒  rely r ⋒ post (t1 ∩ t2) ⊒ (rely r1 ⋒ guar r2 ⋒ post t1) ∥ (guar r1 ⋒ "
      "rely r2 ⋒ post t2)",
      kCond,
      {{"r", Sort::Relation}, {"r1", Sort::Relation}, {"r2", Sort::Relation},
       {"t1", Sort::Test}, {"t2", Sort::Test}},
      [](const Args& a) {
        const auto& s = a.space();
        const Relation r = a.r("r"), r1 = a.r("r1"), r2 = a.r("r2");
        const TestPred t1 = a.t("t1"), t2 = a.t("t2");
        if (!r.subset_of(r1) || !r.subset_of(r2)) return skipped();
        return ref(Conj(rely(r, s), post(t1.intersect(t2), s)),
                   Par(Conj(Conj(rely(r1, s), guar(r2, s)), post(t1, s)),
                       Conj(Conj(guar(r1, s), rely(r2, s)), post(t2, s))));
      },
      std::nullopt, widen_hint(true));
}

std::vector<Law> build_registry() {
  Catalog k;
  const StateSpace s0(2);  // only used to read operator-pair shapes
  lattice_laws(k);
  monoid_laws(k);
  quantale_laws(k);
  iteration_laws(k);
  biquantale_laws(k, s0);
  distrib_laws(k, s0);
  test_laws(k);
  compatible_laws(k);
  atomic_algebra_laws(k, s0);
  step_laws(k);
  rely_guarantee_laws(k);
  return k.take();
}

std::vector<Law> build_witnesses() {
  Catalog k;
  k.add("par_interchange_seq_as_equality", "(c1 ; c2) ∥ (d1 ; d2) = (c1 ∥ d1) ; (c2 ∥ d2)", kEq,
        {{"c1", Sort::Command}, {"c2", Sort::Command}, {"d1", Sort::Command}, {"d2", Sort::Command}},
        [](const Args& a) {
          return eq(Par(Seq(a.c("c1"), a.c("c2")), Seq(a.c("d1"), a.c("d2"))),
                    Seq(Par(a.c("c1"), a.c("d1")), Par(a.c("c2"), a.c("d2"))));
        });
  k.add("skip_refines_chaos", "skip ⊒ chaos", kRef, {},
        [](const Args& a) { return ref(skip(a.space()), chaos(a.space())); });
  return k.take();
}

}  // namespace

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = build_registry();
  return laws;
}

const std::vector<Law>& strictness_witnesses() {
  static const std::vector<Law> laws = build_witnesses();
  return laws;
}

const Law* find_law(const std::string& name) {
  for (const auto* list : {&registry(), &strictness_witnesses()})
    for (const Law& l : *list)
      if (l.name == name) return &l;
  return nullptr;
}

}  // namespace cra
