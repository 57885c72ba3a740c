// Copyright 2026 The hocu Authors
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

// The .hocu problem format:
//
//   # comment
//   colours pe, pf;
//   types e, t;
//   const like : e -> e -> t;
//   const dan : e @ pe;          # default annotation of dan occurrences
//   var R : e -> t @ ~pe;
//   eq like(dan, golf) = R(dan);
//   expect { R_~pe = \x. like(x, golf); }
//   expect none;
//
// Occurrences take an explicit annotation with `_`: `dan_pe`, `R_A`,
// `i_(pe | pf)`. Application is `f(a, b)` or `f a b`; lambdas are
// `\x:e y. body`, binder types optional where the expected type fixes them.

#ifndef HOCU_DSL_H_
#define HOCU_DSL_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hocu/csubst.h"
#include "hocu/term.h"
#include "hocu/unifier.h"

namespace hocu {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kLexical, kSyntax, kResolution, kTyping };

  ParseError(Kind kind, int line, int column, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string message_;
};

const char* kind_name(ParseError::Kind kind);

// One expected solution.
struct Expected {
  CSubstitution substitution;
  std::vector<Entailment> constraints;
  friend bool operator==(const Expected&, const Expected&) = default;
};

struct ProblemFile {
  Problem problem;
  std::vector<Expected> expected;
  bool expect_none = false;

  bool has_expectations() const { return expect_none || !expected.empty(); }
};

bool operator==(const ProblemFile& a, const ProblemFile& b);

ProblemFile parse_problem(std::string_view text);
ProblemFile read_problem(const std::string& path);

// Prints a file that parses back to an equal ProblemFile. Binder types are
// always written; annotations equal to the declared default are omitted.
std::string print_problem(const ProblemFile& file);

// A term over `sig`, checked against `expected` when given.
Term parse_term(std::string_view text, const Signature& sig,
                const std::optional<Type>& expected = std::nullopt);

// The body of an expect block: `x_c = M; A := c; B |= c;`.
Expected parse_solution(std::string_view text, const Signature& sig);

}  // namespace hocu

#endif  // HOCU_DSL_H_
