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

// Rely/guarantee commands as macros over the core syntax, and the parallel
// introduction derivation as a replayable refinement chain.

#ifndef CRA_RG_HPP_
#define CRA_RG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cra/terms.hpp"
#include "cra/trace_model.hpp"

namespace cra {

Command bigstep_pi(const StateSpace& space);     // pi(univ)
Command bigstep_eps(const StateSpace& space);    // eps(univ)
Command bigstep_alpha(const StateSpace& space);  // pi(univ) ⊔ eps(univ)
Command skip(const StateSpace& space);           // eps^ω
Command chaos(const StateSpace& space);          // alpha^ω
Command guar(const Relation& g, const StateSpace& space);
/// (pi ⊔ eps ⊔ eps(¬r);top)^ω, with ¬r taken relative to the universal relation.
Command rely(const Relation& r, const StateSpace& space);
Command term_cmd(const StateSpace& space);  // alpha⋆ ; eps^ω
Command post(const TestPred& t, const StateSpace& space);  // term ; t

struct Justification {
  std::string law;
  std::map<std::string, std::string> bindings;  // metavariable -> DSL text
};

struct ChainStep {
  Command from;
  Command to;  // claim: from ⊒ to
  Justification why;
};

struct RefinementChain {
  std::vector<ChainStep> steps;
};

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// rely r ⋒ post(t1 ∩ t2) ⊒ (rely r1 ⋒ guar r2 ⋒ post t1) ∥ (guar r1 ⋒ rely r2 ⋒ post t2)
/// Requires r ⊆ r1 and r ⊆ r2.
RefinementChain intro_parallel(const Relation& r, const Relation& r1, const Relation& r2,
                               const TestPred& t1, const TestPred& t2, const StateSpace& space);

struct ChainVerdict {
  bool ok = true;
  std::optional<std::size_t> failing_step;
  std::optional<Trace> witness;  // trace of `to` that `from` lacks
  std::string reason;
};

ChainVerdict verify_chain(const RefinementChain& chain, const ModelCfg& cfg);

std::string render_chain(const RefinementChain& chain, const StateSpace& space);

}  // namespace cra

#endif  // CRA_RG_HPP_
