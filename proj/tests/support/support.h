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

#ifndef HOCU_TESTS_SUPPORT_SUPPORT_H_
#define HOCU_TESTS_SUPPORT_SUPPORT_H_

#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hocu/colour.h"
#include "hocu/dsl.h"
#include "hocu/term.h"
#include "hocu/unifier.h"

namespace hocu::testing {

// Signature from declarations in problem-file syntax.
Signature signature(std::string_view declarations);

Term term(std::string_view text, const Signature& sig);
Colour colour(std::string_view text, const Signature& sig);

// Truth-table semantics written independently of the library: constant k
// is the valuation making k true and every other constant false.
bool holds(const Colour& formula, const std::string& constant);
bool entails_by_table(const Colour& a, const Colour& b,
                      const ColourAlphabet& alphabet);

// Every ground formula over `alphabet` up to two connectives deep.
std::vector<Colour> small_formulas(const ColourAlphabet& alphabet);

// Well-typed terms of the fixed test signature, with beta-redexes, partial
// applications and random annotations.
class TermGenerator {
 public:
  explicit TermGenerator(unsigned seed);
  const Signature& sig() const { return sig_; }
  Term generate(int depth);

 private:
  Term gen(const Type& type, int depth, std::vector<Type>& context);
  std::optional<Colour> maybe_colour();
  Type pick_type();

  std::mt19937 rng_;
  Signature sig_;
};

// A random matching problem as problem-file text: one or two equations
// X(s) = t with t ground, built so that a solution usually exists.
std::string random_matching_problem(std::mt19937& rng);

// Maps each variable name of a solution to the erasure of its image.
std::map<std::string, Term> erased_images(const Solution& solution);

}  // namespace hocu::testing

#endif  // HOCU_TESTS_SUPPORT_SUPPORT_H_
