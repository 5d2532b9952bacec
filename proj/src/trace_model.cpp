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

#include "cra/trace_model.hpp"

#include <atomic>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cra {

// ---------------------------------------------------------------------------
// Trace rendering

std::string render_trace(const Trace& t) {
  std::ostringstream out;
  out << t.init << " [";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    if (i) out << ' ';
    out << (t.steps[i].label == Label::Pi ? "pi(" : "eps(") << t.steps[i].post << ')';
  }
  out << "] ";
  switch (t.status) {
    case Status::Term: out << "ok"; break;
    case Status::Abort: out << "abort"; break;
    case Status::Inc: out << "inc"; break;
  }
  return out.str();
}

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
}

bool eat(std::string_view& s, std::string_view tok) {
  skip_ws(s);
  if (s.substr(0, tok.size()) != tok) return false;
  s.remove_prefix(tok.size());
  return true;
}

std::optional<State> number(std::string_view& s) {
  skip_ws(s);
  State v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc()) return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(p - s.data()));
  return v;
}

}  // namespace

std::optional<Trace> parse_trace(std::string_view text) {
  Trace t;
  auto init = number(text);
  if (!init || !eat(text, "[")) return std::nullopt;
  t.init = *init;
  while (!eat(text, "]")) {
    Label label;
    if (eat(text, "pi(")) {
      label = Label::Pi;
    } else if (eat(text, "eps(")) {
      label = Label::Eps;
    } else {
      return std::nullopt;
    }
    auto post = number(text);
    if (!post || !eat(text, ")")) return std::nullopt;
    t.steps.push_back({label, *post});
  }
  if (eat(text, "ok")) {
    t.status = Status::Term;
  } else if (eat(text, "abort")) {
    t.status = Status::Abort;
  } else if (eat(text, "inc")) {
    t.status = Status::Inc;
  } else {
    return std::nullopt;
  }
  skip_ws(text);
  if (!text.empty()) return std::nullopt;
  return t;
}

ModelCfg::ModelCfg(StateSpace space_, unsigned bound_) : space(space_), bound(bound_) {
  if (bound == 0) throw std::invalid_argument("bound must be at least 1");
}

// ---------------------------------------------------------------------------
// Universe

Universe::Universe(unsigned states, unsigned bound) : states_(states), bound_(bound) {
  pows_.push_back(1);
  for (unsigned k = 0; k <= bound + 1; ++k) pows_.push_back(pows_.back() * states);
  offsets_.push_back(0);
  for (unsigned k = 0; k <= bound; ++k) {
    const std::uint64_t count = pows_[k + 1] * (std::uint64_t{1} << k) * 3;
    offsets_.push_back(offsets_.back() + count);
    if (offsets_.back() > (std::size_t{1} << 31))
      throw std::invalid_argument("trace universe too large for states=" +
                                  std::to_string(states) + " bound=" + std::to_string(bound));
  }
}

std::shared_ptr<const Universe> Universe::get(unsigned states, unsigned bound) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Universe>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{states, bound}];
  if (!slot) slot = std::shared_ptr<const Universe>(new Universe(states, bound));
  return slot;
}

Universe::Code Universe::decode(std::size_t index) const {
  unsigned k = 0;
  while (index >= offsets_[k + 1]) ++k;
  std::size_t r = index - offsets_[k];
  Code c;
  c.length = k;
  c.status = static_cast<Status>(r % 3);
  r /= 3;
  c.labels = static_cast<std::uint32_t>(r & ((std::size_t{1} << k) - 1));
  c.shape = r >> k;
  return c;
}

std::size_t Universe::index(const Trace& t) const {
  if (t.steps.size() > bound_) throw std::out_of_range("trace longer than bound");
  if (t.init >= states_) throw std::out_of_range("trace state out of range");
  Code c{static_cast<unsigned>(t.steps.size()), t.init, 0, t.status};
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    if (t.steps[i].post >= states_) throw std::out_of_range("trace state out of range");
    c.shape = c.shape * states_ + t.steps[i].post;
    if (t.steps[i].label == Label::Pi) c.labels |= std::uint32_t{1} << i;
  }
  return encode(c);
}

Trace Universe::trace(std::size_t index) const {
  const Code c = decode(index);
  Trace t;
  t.init = init_of(c);
  t.status = c.status;
  t.steps.resize(c.length);
  std::uint64_t shape = c.shape;
  for (unsigned i = c.length; i-- > 0;) {
    t.steps[i].post = static_cast<State>(shape % states_);
    t.steps[i].label = (c.labels >> i) & 1u ? Label::Pi : Label::Eps;
    shape /= states_;
  }
  return t;
}

// ---------------------------------------------------------------------------
// TraceSet

TraceSet::TraceSet(const ModelCfg& cfg)
    : cfg_(cfg), universe_(Universe::get(cfg.space.size(), cfg.bound)),
      words_((universe_->size() + 63) / 64, 0) {}

TraceSet TraceSet::floor(const ModelCfg& cfg) {
  TraceSet s(cfg);
  for (State st = 0; st < cfg.space.size(); ++st)
    s.set(s.universe_->encode({0, st, 0, Status::Inc}));
  return s;
}

TraceSet TraceSet::everything(const ModelCfg& cfg) {
  TraceSet s(cfg);
  const std::size_t n = s.universe_->size();
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (n & 63) s.words_.back() = (std::uint64_t{1} << (n & 63)) - 1;
  return s;
}

std::size_t TraceSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

std::vector<Trace> TraceSet::traces() const {
  std::vector<Trace> out;
  for_each([&](std::size_t i) { out.push_back(universe_->trace(i)); });
  return out;
}

TraceSet& TraceSet::operator|=(const TraceSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

TraceSet& TraceSet::operator&=(const TraceSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool TraceSet::subset_of(const TraceSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

TraceSet operator|(TraceSet a, const TraceSet& b) { return a |= b; }
TraceSet operator&(TraceSet a, const TraceSet& b) { return a &= b; }

// ---------------------------------------------------------------------------
// Closure

namespace closure_audit {
namespace {
std::atomic<bool> g_enabled{false};
std::atomic<std::uint64_t> g_checks{0};
std::atomic<std::uint64_t> g_violations{0};
}  // namespace

void enable(bool on) { g_enabled = on; }
bool enabled() { return g_enabled; }
void reset() {
  g_checks = 0;
  g_violations = 0;
}
std::uint64_t checks() { return g_checks; }
std::uint64_t violations() { return g_violations; }
}  // namespace closure_audit

namespace {

TraceSet audited(TraceSet s) {
  if (closure_audit::enabled()) {
    ++closure_audit::g_checks;
    if (closure_defect(s) != ClosureDefect::None) ++closure_audit::g_violations;
  }
  return s;
}

Universe::Code with_status(Universe::Code c, Status st) {
  c.status = st;
  return c;
}

Universe::Code drop_last(const Universe& u, const Universe::Code& c) {
  return {c.length - 1, c.shape / u.states(),
          c.labels & ((std::uint32_t{1} << (c.length - 1)) - 1), Status::Inc};
}

}  // namespace

TraceSet close(TraceSet s) {
  const Universe& u = s.universe();
  const unsigned n = u.bound();
  for (State st = 0; st < u.states(); ++st) s.set(u.encode({0, st, 0, Status::Inc}));

  // Abort closure, shortest first so that new aborting extensions are
  // themselves extended in the next round.
  for (unsigned k = 0; k <= n; ++k) {
    std::vector<std::size_t> aborts;
    s.for_each_in(u.begin_of(k), u.end_of(k), [&](std::size_t i) {
      // offsets are multiples of 3, so the residue is the status
      if (i % 3 == static_cast<std::size_t>(Status::Abort)) aborts.push_back(i);
    });
    for (std::size_t i : aborts) {
      const auto c = u.decode(i);
      s.set(u.encode(with_status(c, Status::Term)));
      s.set(u.encode(with_status(c, Status::Inc)));
      if (k == n) continue;
      for (std::uint32_t lab = 0; lab < 2; ++lab)
        for (State post = 0; post < u.states(); ++post)
          s.set(u.encode({k + 1, c.shape * u.states() + post, c.labels | (lab << k),
                          Status::Abort}));
    }
  }
  // Prefix closure, longest first.
  for (unsigned k = n + 1; k-- > 0;) {
    std::vector<std::size_t> members;
    s.for_each_in(u.begin_of(k), u.end_of(k), [&](std::size_t i) { members.push_back(i); });
    for (std::size_t i : members) {
      const auto c = u.decode(i);
      s.set(u.encode(with_status(c, Status::Inc)));
      if (k > 0) s.set(u.encode(drop_last(u, c)));
    }
  }
  return s;
}

TraceSet close(const std::vector<Trace>& raw, const ModelCfg& cfg) {
  TraceSet s(cfg);
  for (const auto& t : raw) s.insert(t);
  return close(std::move(s));
}

ClosureDefect closure_defect(const TraceSet& s) {
  const Universe& u = s.universe();
  for (State st = 0; st < u.states(); ++st)
    if (!s.test(u.encode({0, st, 0, Status::Inc}))) return ClosureDefect::Floor;
  ClosureDefect defect = ClosureDefect::None;
  s.for_each([&](std::size_t i) {
    if (defect != ClosureDefect::None) return;
    const auto c = u.decode(i);
    if (!s.test(u.encode(with_status(c, Status::Inc))) ||
        (c.length > 0 && !s.test(u.encode(drop_last(u, c))))) {
      defect = ClosureDefect::Prefix;
      return;
    }
    if (c.status != Status::Abort) return;
    if (!s.test(u.encode(with_status(c, Status::Term)))) {
      defect = ClosureDefect::Abort;
      return;
    }
    if (c.length == u.bound()) return;
    for (std::uint32_t lab = 0; lab < 2; ++lab)
      for (State post = 0; post < u.states(); ++post)
        if (!s.test(u.encode({c.length + 1, c.shape * u.states() + post,
                              c.labels | (lab << c.length), Status::Abort}))) {
          defect = ClosureDefect::Abort;
          return;
        }
  });
  return defect;
}

// ---------------------------------------------------------------------------
// Operators

TraceSet seq(const TraceSet& c, const TraceSet& d) {
  const Universe& u = c.universe();
  const unsigned n = u.bound();
  // d's traces grouped by initial state: (length, shape without init, labels, status).
  std::vector<std::vector<Universe::Code>> from(u.states());
  d.for_each([&](std::size_t i) {
    auto code = u.decode(i);
    const State init = u.init_of(code);
    code.shape %= u.pow(code.length);
    from[init].push_back(code);
  });
  TraceSet out = TraceSet::floor(c.cfg());
  c.for_each([&](std::size_t i) {
    const auto head = u.decode(i);
    // A terminated trace whose aborting twin is present belongs to the abort
    // closure and survives unchanged.
    if (head.status != Status::Term || c.test(i - static_cast<std::size_t>(Status::Term) +
                                              static_cast<std::size_t>(Status::Abort))) {
      out.set(i);
      return;
    }
    for (const auto& tail : from[u.last_of(head)]) {
      if (head.length + tail.length > n) continue;
      out.set(u.encode({head.length + tail.length, head.shape * u.pow(tail.length) + tail.shape,
                        head.labels | (tail.labels << head.length), tail.status}));
    }
  });
  return audited(std::move(out));
}

namespace {

std::optional<Status> sync_status(Status a, Status b) {
  if (a == Status::Abort || b == Status::Abort) return Status::Abort;
  if (a == b) return a;
  return std::nullopt;
}

// Pointwise synchronisation of traces with identical state sequences. Both
// operands and the result share a block, so only label masks and statuses
// are combined.
template <typename CombineLabels>
TraceSet synchronise(const TraceSet& c, const TraceSet& d, CombineLabels combine) {
  const Universe& u = c.universe();
  TraceSet out(c.cfg());
  std::vector<std::pair<std::uint32_t, Status>> left, right;
  for (unsigned k = 0; k <= u.bound(); ++k) {
    const std::size_t block = std::size_t{3} << k;
    const std::uint64_t shapes = u.pow(k + 1);
    for (std::uint64_t shape = 0; shape < shapes; ++shape) {
      const std::size_t base = u.begin_of(k) + shape * block;
      left.clear();
      c.for_each_in(base, base + block, [&](std::size_t i) {
        const std::size_t r = i - base;
        left.emplace_back(static_cast<std::uint32_t>(r / 3), static_cast<Status>(r % 3));
      });
      if (left.empty()) continue;
      right.clear();
      d.for_each_in(base, base + block, [&](std::size_t i) {
        const std::size_t r = i - base;
        right.emplace_back(static_cast<std::uint32_t>(r / 3), static_cast<Status>(r % 3));
      });
      for (const auto& [la, sa] : left)
        for (const auto& [lb, sb] : right) {
          const auto labels = combine(la, lb);
          if (!labels) continue;
          const auto st = sync_status(sa, sb);
          if (!st) continue;
          out.set(base + std::size_t{*labels} * 3 + static_cast<std::size_t>(*st));
        }
    }
  }
  return audited(close(std::move(out)));
}

}  // namespace

TraceSet par(const TraceSet& c, const TraceSet& d) {
  // pi || eps = pi, eps || eps = eps, pi || pi excluded.
  return synchronise(c, d, [](std::uint32_t a, std::uint32_t b) -> std::optional<std::uint32_t> {
    if (a & b) return std::nullopt;
    return a | b;
  });
}

TraceSet wconj(const TraceSet& c, const TraceSet& d) {
  return synchronise(c, d, [](std::uint32_t a, std::uint32_t b) -> std::optional<std::uint32_t> {
    if (a != b) return std::nullopt;
    return a;
  });
}

TraceSet meet(const TraceSet& c, const TraceSet& d) {
  return audited(close(c & d));
}

TraceSet lfp(const TraceMap& f, const ModelCfg& cfg) {
  TraceSet x = TraceSet::floor(cfg);
  const std::size_t cap = x.universe().size() + 1;
  for (std::size_t round = 0; round < cap; ++round) {
    TraceSet y = f(x);
    if (y == x) return audited(std::move(x));
    x = std::move(y);
  }
  throw std::runtime_error("lfp: iteration cap exceeded (non-monotone map?)");
}

TraceSet gfp(const TraceMap& f, const ModelCfg& cfg) {
  TraceSet x = TraceSet::everything(cfg);
  const std::size_t cap = x.universe().size() + 1;
  for (std::size_t round = 0; round < cap; ++round) {
    TraceSet y = f(x);
    if (y == x) return audited(std::move(x));
    x = std::move(y);
  }
  throw std::runtime_error("gfp: iteration cap exceeded (non-monotone map?)");
}

// ---------------------------------------------------------------------------
// Denotation

namespace {

TraceSet tau_set(const ModelCfg& cfg) {
  TraceSet s = TraceSet::floor(cfg);
  const Universe& u = s.universe();
  for (State st = 0; st < cfg.space.size(); ++st) s.set(u.encode({0, st, 0, Status::Term}));
  return s;
}

TraceSet step_set(const Relation& rel, Label label, const ModelCfg& cfg) {
  TraceSet s = TraceSet::floor(cfg);
  const Universe& u = s.universe();
  const std::uint32_t lab = label == Label::Pi ? 1u : 0u;
  for (const auto& [a, b] : rel.pairs()) {
    const std::uint64_t shape = std::uint64_t{a} * u.states() + b;
    s.set(u.encode({1, shape, lab, Status::Term}));
    s.set(u.encode({1, shape, lab, Status::Inc}));
  }
  return s;
}

}  // namespace

TraceSet denote(const Command& c, const ModelCfg& cfg) {
  switch (c.op()) {
    case Op::Bot: return audited(TraceSet::floor(cfg));
    case Op::Top: return audited(TraceSet::everything(cfg));
    case Op::Tau: return audited(tau_set(cfg));
    case Op::Test: {
      TraceSet s = TraceSet::floor(cfg);
      const Universe& u = s.universe();
      for (State st : c.test_pred().states()) s.set(u.encode({0, st, 0, Status::Term}));
      return audited(std::move(s));
    }
    case Op::Pgm: return audited(step_set(c.relation(), Label::Pi, cfg));
    case Op::Env: return audited(step_set(c.relation(), Label::Eps, cfg));
    case Op::Choice: return audited(denote(c.lhs(), cfg) | denote(c.rhs(), cfg));
    case Op::Meet: return meet(denote(c.lhs(), cfg), denote(c.rhs(), cfg));
    case Op::Seq: return seq(denote(c.lhs(), cfg), denote(c.rhs(), cfg));
    case Op::Par: return par(denote(c.lhs(), cfg), denote(c.rhs(), cfg));
    case Op::WConj: return wconj(denote(c.lhs(), cfg), denote(c.rhs(), cfg));
    case Op::FixedIter: {
      const TraceSet body = denote(c.body(), cfg);
      TraceSet acc = tau_set(cfg);
      for (unsigned i = 0; i < c.exponent(); ++i) acc = seq(body, acc);
      return audited(std::move(acc));
    }
    case Op::FinIter:
    case Op::OmIter: {
      const TraceSet body = denote(c.body(), cfg);
      const TraceSet tau = tau_set(cfg);
      auto unfold = [&](const TraceSet& y) { return tau | seq(body, y); };
      return c.op() == Op::FinIter ? lfp(unfold, cfg) : gfp(unfold, cfg);
    }
    case Op::InfIter: {
      const TraceSet body = denote(c.body(), cfg);
      return gfp([&](const TraceSet& y) { return seq(body, y); }, cfg);
    }
  }
  throw std::logic_error("denote: unknown operator");
}

bool refines(const Command& c, const Command& d, const ModelCfg& cfg) {
  return denote(d, cfg).subset_of(denote(c, cfg));
}

bool equiv(const Command& c, const Command& d, const ModelCfg& cfg) {
  return denote(c, cfg) == denote(d, cfg);
}

std::optional<Trace> first_missing(const TraceSet& lhs, const TraceSet& rhs) {
  std::optional<Trace> found;
  rhs.for_each([&](std::size_t i) {
    if (!found && !lhs.test(i)) found = rhs.universe().trace(i);
  });
  return found;
}

bool equal_below_bound(const TraceSet& a, const TraceSet& b) {
  const std::size_t hi = a.universe().begin_of(a.universe().bound());
  bool equal = true;
  a.for_each_in(0, hi, [&](std::size_t i) { equal = equal && b.test(i); });
  b.for_each_in(0, hi, [&](std::size_t i) { equal = equal && a.test(i); });
  return equal;
}

}  // namespace cra
