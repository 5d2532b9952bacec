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

// Textual command syntax.
//
//   expr   := choice
//   choice := meet ( '|' meet )*
//   meet   := par ( '&' par )*
//   par    := conj ( '||' conj )*
//   conj   := seq ( '&&' seq )*
//   seq    := atom ( ';' atom )*
//   atom   := 'bot' | 'top' | 'tau' | 'skip' | 'chaos' | 'term'
//           | ('test' | 'assert' | 'post') '{' states '}'
//           | ('pgm' | 'env' | 'guar' | 'rely') '{' pairs '}'
//           | ('fin' | 'om' | 'inf') '(' expr ')' | 'pow' '(' expr ',' n ')'
//           | '(' expr ')'
//
// All binary operators are left associative.

#ifndef CRA_DSL_HPP_
#define CRA_DSL_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cra/terms.hpp"

namespace cra {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, unsigned line, unsigned column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line), column_(column) {}
  unsigned line() const { return line_; }
  unsigned column() const { return column_; }

 private:
  unsigned line_;
  unsigned column_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Violation v)
      : std::runtime_error("invalid command at " + v.path + ": " + v.message), v_(std::move(v)) {}
  const Violation& violation() const { return v_; }

 private:
  Violation v_;
};

struct DslOptions {
  /// Largest exponent accepted by pow(); larger values are a usage error.
  std::optional<unsigned> max_pow;
};

/// Throws ParseError on malformed input and ValidationError when a state is
/// out of range for `space`.
Command parse_dsl(std::string_view src, const StateSpace& space, const DslOptions& opts = {});

/// Core syntax only.
std::string render(const Command& c);
/// Re-sugars skip, chaos, term, assert, guar, rely and post.
std::string render(const Command& c, const StateSpace& space);

std::string render_relation(const Relation& r);  // {(0,1),(1,1)}
std::string render_test(const TestPred& t);      // {0,1}

}  // namespace cra

#endif  // CRA_DSL_HPP_
