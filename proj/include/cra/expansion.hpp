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

// Head normal forms: a command is an assertion followed by a choice between
// terminating now and taking one concrete step into a continuation.

#ifndef CRA_EXPANSION_HPP_
#define CRA_EXPANSION_HPP_

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "cra/terms.hpp"
#include "cra/trace_model.hpp"

namespace cra {

struct StepKey {
  Label label;
  State pre;
  State post;
  auto operator<=>(const StepKey&) const = default;
};

struct ExpandedForm {
  TestPred abort_test;  // states from which the command aborts immediately
  TestPred term_test;   // states from which it may terminate without a step
  std::map<StepKey, Command> branches;
};

ExpandedForm expand(const Command& c, const StateSpace& space);

/// assert(¬abort) ; (term ⊔ ⨆ step ; continuation)
Command rebuild(const ExpandedForm& f, const StateSpace& space);

/// Bounded bisimulation over (command, state) nodes. Depth k compares all
/// behaviours of at most k steps.
bool equiv_by_expansion(const Command& c, const Command& d, unsigned depth,
                        const StateSpace& space);

struct CrossCheck {
  bool oracle = false;     // equiv under the trace model
  bool expansion = false;  // equiv_by_expansion at depth = bound
  std::optional<Trace> witness;  // a trace on which the denotations differ
  bool agree() const { return oracle == expansion; }
};

CrossCheck cross_check(const Command& c, const Command& d, const ModelCfg& cfg);

std::string render_expanded(const ExpandedForm& f, const StateSpace& space);

}  // namespace cra

#endif  // CRA_EXPANSION_HPP_
