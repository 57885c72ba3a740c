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

#ifndef HOCU_UNIFIER_H_
#define HOCU_UNIFIER_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hocu/colour.h"
#include "hocu/csubst.h"
#include "hocu/term.h"

namespace hocu {

// M = N. A binding equation x = G is produced by a flex/rigid step; its left
// side is the bare head variable and it is only ever eliminated.
struct TermEquation {
  Term lhs;
  Term rhs;
  bool binding = false;
  friend bool operator==(const TermEquation&, const TermEquation&) = default;
};

using Equation = std::variant<TermEquation, ColourEquation>;

std::string to_string(const Equation& eq);

struct Problem {
  Signature signature;
  std::vector<TermEquation> equations;
};

struct TraceEntry {
  std::string rule;
  std::size_t index = 0;
  std::string binding;  // empty unless the rule chose a general binding
  std::string equation;

  // RULE <rule> ON <index> [BINDING <binding>] ; <equation>
  std::string str() const;
};

struct ProblemState {
  std::vector<Equation> equations;
  ColourStore store;
  // Constants introduced by abstraction decomposition.
  std::map<std::string, Type> forbidden;
  // Solved forms x_c = M, kept fully substituted.
  std::vector<std::pair<VarKey, Term>> solved;
  // Binding depth of variables introduced by general bindings.
  std::map<std::string, int> depth;
  int next_variable = 1;
  int next_constant = 1;
  int next_colour = 1;
  // Names fresh symbols must avoid (signature names, problem colour
  // variables).
  std::shared_ptr<const std::set<std::string>> reserved;
  std::vector<TraceEntry> trace;
};

// The starting state: equations normalized, reserved names collected.
ProblemState initial_state(const Problem& problem);

// The deterministic rules. Each acts on equation `index`; std::nullopt means
// the branch fails.
ProblemState decompose_abstraction(const ProblemState& state,
                                   std::size_t index);
std::optional<ProblemState> decompose_application(const ProblemState& state,
                                                  std::size_t index);
std::optional<ProblemState> eliminate_colour_variable(
    const ProblemState& state, std::size_t index, const ColourAlphabet& alphabet);
std::optional<ProblemState> eliminate_term_variable(
    const ProblemState& state, std::size_t index, const ColourAlphabet& alphabet);

// Applies the deterministic rules to a fixpoint, always picking the first
// applicable rule in the order delete, decompose abstraction, decompose
// application, eliminate colour, eliminate term.
std::optional<ProblemState> simplify(ProblemState state,
                                     const ColourAlphabet& alphabet);

// Index of the first flex/rigid equation, if any.
std::optional<std::size_t> find_flex_rigid(const ProblemState& state);

struct Branch {
  std::string rule;  // "imitate" or "project"
  Term binding;
  ProblemState state;
};

// General bindings for the flex/rigid equation `index`: the imitation first
// (if the rigid head is not forbidden and the colours allow it), then one
// projection per argument of matching result type. Each branch carries the
// binding equation appended and the colour constraints it needs. Variables
// deeper than `max_depth` are not bound; `cut` is set instead.
std::vector<Branch> general_bindings(const ProblemState& state,
                                     std::size_t index,
                                     const ColourAlphabet& alphabet,
                                     int max_depth, bool* cut);

struct Solution {
  CSubstitution substitution;
  // Colour constraints still open on the substitution's colour variables.
  std::vector<Entailment> constraints;
  // Flex/flex equations left over; nonempty only for pre-solutions.
  std::vector<TermEquation> residual;
  std::vector<TraceEntry> trace;
  bool pre_solution() const { return !residual.empty(); }
};

// Lines `x_c = M`, `A := c`, `A |= c`, then `flex: M = N`.
std::string serialize(const Solution& solution);

enum class SearchStatus { kExhausted, kBoundReached, kSolutionLimit };
const char* status_name(SearchStatus status);

enum class Strategy { kIterativeDeepening, kDepthFirst };

struct SearchConfig {
  int max_bindings = 10;
  int max_solutions = 50;
  Strategy strategy = Strategy::kIterativeDeepening;
};

struct SearchResult {
  std::vector<Solution> solutions;
  SearchStatus status = SearchStatus::kExhausted;
};

// Emits solutions as they are found, each once up to canonical form.
// Returns the final status.
SearchStatus solve(const Problem& problem, const SearchConfig& config,
                   const std::function<void(const Solution&)>& emit);
SearchResult solve(const Problem& problem, const SearchConfig& config = {});

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string str() const;
};

// Independent check: legality, no constants outside the signature in any
// image, and both sides of every equation equal after applying the
// substitution. Pre-solutions are checked for legality only.
ValidationReport validate(const Solution& solution, const Problem& problem);
ValidationReport validate(const CSubstitution& substitution,
                          const Problem& problem,
                          const std::vector<Entailment>& constraints = {},
                          bool check_equations = true);

// Colour variables mentioned anywhere in the problem.
std::set<std::string> problem_colour_variables(const Problem& problem);

// A normal form for comparing solutions: sorted lines, canonical binder
// names, ground colours replaced by a fixed representative of their
// denotation, and colour variables outside `keep` renamed by first
// appearance.
std::string canonical_form(const CSubstitution& substitution,
                           const std::vector<Entailment>& constraints,
                           const std::set<std::string>& keep,
                           const ColourAlphabet& alphabet);

}  // namespace hocu

#endif  // HOCU_UNIFIER_H_
