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

// Brute-force reference semantics used only by tests. Traces are plain
// structs in std::set and every operator is written from its definition, with
// closure applied to the result. Nothing here shares code with the bitset
// model.

#ifndef CRA_TESTS_ORACLE_HPP_
#define CRA_TESTS_ORACLE_HPP_

#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cra/terms.hpp"

namespace oracle {

enum St { kTerm, kAbort, kInc };

struct Tr {
  unsigned init = 0;
  std::vector<std::pair<bool, unsigned>> steps;  // (is_pi, post)
  St st = kInc;
  auto key() const { return std::tie(init, steps, st); }
  bool operator<(const Tr& o) const { return key() < o.key(); }
  bool operator==(const Tr& o) const { return key() == o.key(); }
  unsigned last() const { return steps.empty() ? init : steps.back().second; }
};

using Set = std::set<Tr>;

struct Model {
  unsigned states;
  unsigned bound;

  void extend(const Tr& prefix, Set& out) const {
    for (St s : {kTerm, kAbort, kInc}) {
      Tr t = prefix;
      t.st = s;
      out.insert(t);
    }
    if (prefix.steps.size() == bound) return;
    for (bool pi : {false, true})
      for (unsigned p = 0; p < states; ++p) {
        Tr t = prefix;
        t.steps.emplace_back(pi, p);
        extend(t, out);
      }
  }

  Set all() const {
    Set out;
    for (unsigned s = 0; s < states; ++s) extend(Tr{s, {}, kInc}, out);
    return out;
  }

  Set close(Set s) const {
    for (unsigned st = 0; st < states; ++st) s.insert(Tr{st, {}, kInc});
    bool grew = true;
    while (grew) {
      grew = false;
      Set add;
      for (const Tr& t : s) {
        Tr inc = t;
        inc.st = kInc;
        add.insert(inc);
        if (!t.steps.empty()) {
          Tr shorter = inc;
          shorter.steps.pop_back();
          add.insert(shorter);
        }
        if (t.st == kAbort) {
          Tr p = t;
          extend(p, add);
        }
      }
      for (const Tr& t : add) grew = s.insert(t).second || grew;
    }
    return s;
  }

  Set floor() const { return close({}); }

  Set seq(const Set& c, const Set& d) const {
    Set out;
    for (const Tr& t : c) {
      if (t.st != kTerm) {
        out.insert(t);
        continue;
      }
      for (const Tr& u : d) {
        if (u.init != t.last() || t.steps.size() + u.steps.size() > bound) continue;
        Tr g = t;
        g.steps.insert(g.steps.end(), u.steps.begin(), u.steps.end());
        g.st = u.st;
        out.insert(g);
      }
    }
    return close(out);
  }

  template <typename Labels>
  Set sync(const Set& c, const Set& d, Labels labels) const {
    Set out;
    for (const Tr& t : c)
      for (const Tr& u : d) {
        if (t.init != u.init || t.steps.size() != u.steps.size()) continue;
        Tr g{t.init, {}, kInc};
        bool ok = true;
        for (std::size_t i = 0; ok && i < t.steps.size(); ++i) {
          if (t.steps[i].second != u.steps[i].second) ok = false;
          bool pi = false;
          if (ok && !labels(t.steps[i].first, u.steps[i].first, pi)) ok = false;
          g.steps.emplace_back(pi, t.steps[i].second);
        }
        if (!ok) continue;
        if (t.st == kAbort || u.st == kAbort)
          g.st = kAbort;
        else if (t.st == u.st)
          g.st = t.st;
        else
          continue;
        out.insert(g);
      }
    return close(out);
  }

  Set par(const Set& c, const Set& d) const {
    return sync(c, d, [](bool a, bool b, bool& pi) {
      pi = a || b;
      return !(a && b);
    });
  }
  Set wconj(const Set& c, const Set& d) const {
    return sync(c, d, [](bool a, bool b, bool& pi) {
      pi = a;
      return a == b;
    });
  }
  Set unite(Set a, const Set& b) const {
    a.insert(b.begin(), b.end());
    return a;
  }
  Set meet(const Set& a, const Set& b) const {
    Set out;
    for (const Tr& t : a)
      if (b.count(t)) out.insert(t);
    return close(out);
  }

  template <typename F>
  Set fix(Set x, F f) const {
    for (;;) {
      Set y = f(x);
      if (y == x) return x;
      x = std::move(y);
    }
  }

  Set denote(const cra::Command& c) const {
    using cra::Op;
    switch (c.op()) {
      case Op::Bot: return floor();
      case Op::Top: return all();
      case Op::Tau: {
        Set s;
        for (unsigned st = 0; st < states; ++st) s.insert(Tr{st, {}, kTerm});
        return close(s);
      }
      case Op::Test: {
        Set s;
        for (unsigned st : c.test_pred().states()) s.insert(Tr{st, {}, kTerm});
        return close(s);
      }
      case Op::Pgm:
      case Op::Env: {
        Set s;
        for (const auto& [a, b] : c.relation().pairs())
          s.insert(Tr{a, {{c.op() == Op::Pgm, b}}, kTerm});
        return close(s);
      }
      case Op::Choice: return unite(denote(c.lhs()), denote(c.rhs()));
      case Op::Meet: return meet(denote(c.lhs()), denote(c.rhs()));
      case Op::Seq: return seq(denote(c.lhs()), denote(c.rhs()));
      case Op::Par: return par(denote(c.lhs()), denote(c.rhs()));
      case Op::WConj: return wconj(denote(c.lhs()), denote(c.rhs()));
      case Op::FixedIter: {
        Set body = denote(c.body());
        Set acc = denote(cra::Command::tau());
        for (unsigned i = 0; i < c.exponent(); ++i) acc = seq(body, acc);
        return acc;
      }
      case Op::FinIter:
      case Op::OmIter: {
        const Set body = denote(c.body()), tau = denote(cra::Command::tau());
        auto step = [&](const Set& x) { return unite(tau, seq(body, x)); };
        return fix(c.op() == Op::FinIter ? floor() : all(), step);
      }
      case Op::InfIter: {
        const Set body = denote(c.body());
        return fix(all(), [&](const Set& x) { return seq(body, x); });
      }
    }
    throw std::logic_error("unknown op");
  }
};

}  // namespace oracle

#endif  // CRA_TESTS_ORACLE_HPP_
