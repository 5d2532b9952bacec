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

// Bounded Aczel-trace semantics.
//
// A trace is an initial state followed by at most `bound` labelled steps and
// a final status. Denotations are sets of traces that are prefix closed,
// abort closed and contain the empty incomplete trace from every state. The
// set of all bounded traces is enumerated once per (states, bound) and trace
// sets are bitsets over that enumeration, so equality is structural.

#ifndef CRA_TRACE_MODEL_HPP_
#define CRA_TRACE_MODEL_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cra/terms.hpp"

namespace cra {

enum class Label : std::uint8_t { Pi, Eps };
enum class Status : std::uint8_t { Term = 0, Abort = 1, Inc = 2 };

struct Step {
  Label label;
  State post;
  auto operator<=>(const Step&) const = default;
};

struct Trace {
  State init = 0;
  std::vector<Step> steps;
  Status status = Status::Inc;
  auto operator<=>(const Trace&) const = default;
};

/// `<init> [label(post) ...] <status>`, e.g. `0 [pi(1) eps(1)] ok`.
std::string render_trace(const Trace& t);
std::optional<Trace> parse_trace(std::string_view text);

struct ModelCfg {
  ModelCfg(StateSpace space_, unsigned bound_);
  StateSpace space;
  unsigned bound;  // maximum number of steps in a trace
};

/// Dense numbering of every trace within a configuration.
///
/// Traces of length k occupy one contiguous range; inside it they are ordered
/// by (shape, label mask, status), where the shape packs the initial state and
/// the k post-states in base `states`. Traces sharing a state sequence are
/// therefore adjacent, which is what synchronisation iterates over.
class Universe {
 public:
  struct Code {
    unsigned length;
    std::uint64_t shape;   // init * S^k + posts, most significant first
    std::uint32_t labels;  // bit i set iff step i is a program step
    Status status;
  };

  static std::shared_ptr<const Universe> get(unsigned states, unsigned bound);

  unsigned states() const { return states_; }
  unsigned bound() const { return bound_; }
  std::size_t size() const { return offsets_.back(); }
  std::size_t begin_of(unsigned length) const { return offsets_[length]; }
  std::size_t end_of(unsigned length) const { return offsets_[length + 1]; }
  std::uint64_t pow(unsigned k) const { return pows_[k]; }

  std::size_t encode(const Code& c) const {
    return offsets_[c.length] + ((c.shape << c.length) + c.labels) * 3 +
           static_cast<std::size_t>(c.status);
  }
  Code decode(std::size_t index) const;

  std::size_t index(const Trace& t) const;
  Trace trace(std::size_t index) const;

  State init_of(const Code& c) const { return static_cast<State>(c.shape / pows_[c.length]); }
  State last_of(const Code& c) const { return static_cast<State>(c.shape % states_); }

 private:
  Universe(unsigned states, unsigned bound);
  unsigned states_;
  unsigned bound_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint64_t> pows_;
};

class TraceSet {
 public:
  /// The empty raw set; not closed.
  explicit TraceSet(const ModelCfg& cfg);

  /// {(σ, [], inc)}: the denotation of bot.
  static TraceSet floor(const ModelCfg& cfg);
  /// Every bounded trace: the denotation of top.
  static TraceSet everything(const ModelCfg& cfg);

  const Universe& universe() const { return *universe_; }
  const ModelCfg& cfg() const { return cfg_; }

  bool contains(const Trace& t) const { return test(universe_->index(t)); }
  void insert(const Trace& t) { set(universe_->index(t)); }
  std::size_t count() const;
  std::vector<Trace> traces() const;

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  /// Calls fn(index) for each member with index in [lo, hi).
  template <typename Fn>
  void for_each_in(std::size_t lo, std::size_t hi, Fn&& fn) const {
    if (lo >= hi) return;
    std::size_t w = lo >> 6;
    const std::size_t last = (hi - 1) >> 6;
    for (; w <= last; ++w) {
      std::uint64_t bits = words_[w];
      if (w == (lo >> 6)) bits &= ~std::uint64_t{0} << (lo & 63);
      if (w == last && (hi & 63) != 0) bits &= (std::uint64_t{1} << (hi & 63)) - 1;
      while (bits) {
        const int b = __builtin_ctzll(bits);
        fn((w << 6) + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for_each_in(0, universe_->size(), std::forward<Fn>(fn));
  }

  TraceSet& operator|=(const TraceSet& other);
  TraceSet& operator&=(const TraceSet& other);
  bool subset_of(const TraceSet& other) const;
  bool operator==(const TraceSet& other) const { return words_ == other.words_; }

 private:
  ModelCfg cfg_;
  std::shared_ptr<const Universe> universe_;
  std::vector<std::uint64_t> words_;
};

TraceSet operator|(TraceSet a, const TraceSet& b);
TraceSet operator&(TraceSet a, const TraceSet& b);

/// Least superset that is prefix closed, abort closed and contains the floor.
TraceSet close(TraceSet raw);
TraceSet close(const std::vector<Trace>& raw, const ModelCfg& cfg);

enum class ClosureDefect { None, Floor, Prefix, Abort };
ClosureDefect closure_defect(const TraceSet& s);

/// Debug-mode check of the closure invariants after every trace-set
/// operation. Counters are process-wide and thread safe.
namespace closure_audit {
void enable(bool on);
bool enabled();
void reset();
std::uint64_t checks();
std::uint64_t violations();
}  // namespace closure_audit

// Operations on closed trace sets.
TraceSet seq(const TraceSet& c, const TraceSet& d);
TraceSet par(const TraceSet& c, const TraceSet& d);
TraceSet wconj(const TraceSet& c, const TraceSet& d);
TraceSet meet(const TraceSet& c, const TraceSet& d);

using TraceMap = std::function<TraceSet(const TraceSet&)>;
/// Kleene iteration from the floor / from everything. Throws
/// std::runtime_error if the iteration does not stabilise within
/// |universe| + 1 rounds, which only happens for non-monotone maps.
TraceSet lfp(const TraceMap& f, const ModelCfg& cfg);
TraceSet gfp(const TraceMap& f, const ModelCfg& cfg);

TraceSet denote(const Command& c, const ModelCfg& cfg);

/// c ⊒ d: every trace of d is a trace of c.
bool refines(const Command& c, const Command& d, const ModelCfg& cfg);
bool equiv(const Command& c, const Command& d, const ModelCfg& cfg);

/// First (in universe order) trace of `rhs` missing from `lhs`.
std::optional<Trace> first_missing(const TraceSet& lhs, const TraceSet& rhs);

/// Diagnostic comparison that ignores traces of exactly `bound` steps.
bool equal_below_bound(const TraceSet& a, const TraceSet& b);

}  // namespace cra

#endif  // CRA_TRACE_MODEL_HPP_
