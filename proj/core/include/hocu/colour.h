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

#ifndef HOCU_COLOUR_H_
#define HOCU_COLOUR_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hocu {

class ColourError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A colour annotation: a constant from the alphabet, a colour variable, or a
// boolean formula over those.
class Colour {
 public:
  enum class Kind { kConstant, kVariable, kNot, kAnd, kOr };

  static Colour constant(std::string name);
  static Colour variable(std::string name);
  static Colour negate(Colour operand);
  static Colour conj(Colour lhs, Colour rhs);
  static Colour disj(Colour lhs, Colour rhs);

  Kind kind() const { return node_->kind; }
  bool is_constant() const { return kind() == Kind::kConstant; }
  bool is_variable() const { return kind() == Kind::kVariable; }
  // Name of a constant or variable.
  const std::string& name() const { return node_->name; }
  // Operands of a connective; rhs() is only valid for kAnd and kOr.
  const Colour& lhs() const { return node_->operands[0]; }
  const Colour& rhs() const { return node_->operands[1]; }

  // True when no colour variable occurs inside.
  bool is_ground() const { return node_->ground; }
  void collect_variables(std::vector<std::string>& out) const;

  // Replaces variables according to `lookup`; unbound variables stay.
  Colour substitute(
      const std::function<std::optional<Colour>(const std::string&)>& lookup)
      const;

  // `~` binds tighter than `&`, which binds tighter than `|`.
  std::string str() const;

  // Structural identity. Logical equivalence needs an alphabet, see
  // ColourAlphabet::equivalent.
  friend bool operator==(const Colour& a, const Colour& b);
  friend bool operator!=(const Colour& a, const Colour& b) { return !(a == b); }
  friend bool operator<(const Colour& a, const Colour& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Colour> operands;
    bool ground = true;
  };
  explicit Colour(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Colour variables are an uppercase letter optionally followed by digits.
bool is_colour_variable_name(std::string_view name);

using ColourSet = std::uint64_t;

// The finite set of colour constants of one problem. A ground formula denotes
// the set of constants k such that the valuation "k true, every other
// constant false" satisfies it; so ~d is the disjunction of all constants
// other than d.
class ColourAlphabet {
 public:
  static constexpr std::size_t kMaxSize = 64;

  ColourAlphabet() = default;
  explicit ColourAlphabet(std::vector<std::string> constants);

  const std::vector<std::string>& constants() const { return constants_; }
  std::size_t size() const { return constants_.size(); }
  bool contains(std::string_view name) const;
  // Throws ColourError when `name` is not in the alphabet.
  std::size_t index_of(std::string_view name) const;
  ColourSet all() const;

  // Set of satisfying constants; `formula` must be ground.
  ColourSet denotation(const Colour& formula) const;
  // Ground annotations are equal when they denote the same set.
  bool equivalent(const Colour& a, const Colour& b) const;
  // Smallest readable formula denoting `set`.
  Colour formula_for(ColourSet set) const;

  friend bool operator==(const ColourAlphabet&, const ColourAlphabet&) =
      default;

 private:
  std::vector<std::string> constants_;
};

// Throws ColourError when `colour` mentions a constant outside `alphabet`.
void check_constants(const Colour& colour, const ColourAlphabet& alphabet);

// annotation |= bound, for ground formulae: every constant satisfying
// `annotation` satisfies `bound`. With a single constant on the left this is
// plain propositional evaluation under that constant's valuation.
bool entails(const Colour& annotation, const Colour& bound,
             const ColourAlphabet& alphabet);

struct ColourEquation {
  Colour lhs;
  Colour rhs;
  friend bool operator==(const ColourEquation&, const ColourEquation&) =
      default;
};

struct Entailment {
  Colour annotation;
  Colour bound;
  friend bool operator==(const Entailment&, const Entailment&) = default;
};

using ColourBindings = std::map<std::string, Colour>;

// Equations, entailments and variable bindings over one alphabet. Stores are
// values: every operation returns a new store or std::nullopt for unsat.
class ColourStore {
 public:
  const std::vector<ColourEquation>& equations() const { return equations_; }
  const std::vector<Entailment>& entailments() const { return entailments_; }
  const ColourBindings& bindings() const { return bindings_; }

  std::optional<Colour> binding(const std::string& variable) const;
  // Applies the bindings (idempotent, so one pass suffices).
  Colour resolve(const Colour& colour) const;

  // Builds a store verbatim without any checking; for tests and for
  // reconstructing stores from files.
  static ColourStore from_parts(std::vector<ColourEquation> equations,
                                std::vector<Entailment> entailments,
                                ColourBindings bindings);

  // Colour variables in first-mention order: bindings' right-hand sides,
  // equations, then entailments.
  std::vector<std::string> unbound_variables() const;

  friend bool operator==(const ColourStore&, const ColourStore&) = default;

 private:
  friend std::optional<ColourStore> unify_colours(const Colour&, const Colour&,
                                                  const ColourStore&,
                                                  const ColourAlphabet&);
  friend std::optional<ColourStore> assert_entailment(const Colour&,
                                                      const Colour&,
                                                      const ColourStore&,
                                                      const ColourAlphabet&);
  friend std::optional<ColourStore> bind_colour_variable(
      const std::string&, const Colour&, const ColourStore&,
      const ColourAlphabet&);

  std::vector<ColourEquation> equations_;
  std::vector<Entailment> entailments_;
  ColourBindings bindings_;
};

// Solves a = b. A variable on either side is bound (the left one first);
// two ground sides must be equivalent. Formulae with variables nested inside
// connectives are kept as deferred equations and checked once ground.
std::optional<ColourStore> unify_colours(const Colour& a, const Colour& b,
                                         const ColourStore& store,
                                         const ColourAlphabet& alphabet);

// Records annotation |= bound. Checked immediately when both sides are ground
// under the current bindings, otherwise re-checked on every later binding.
std::optional<ColourStore> assert_entailment(const Colour& annotation,
                                             const Colour& bound,
                                             const ColourStore& store,
                                             const ColourAlphabet& alphabet);

// Binds `variable` (which must be unbound) and re-checks every constraint.
std::optional<ColourStore> bind_colour_variable(const std::string& variable,
                                                const Colour& value,
                                                const ColourStore& store,
                                                const ColourAlphabet& alphabet);

// Enumerates every assignment of alphabet constants to the store's unbound
// variables that satisfies all equations, entailments and bindings. Each
// result is a complete map (existing bindings resolved). Order: variables in
// first-mention order, the first one varying slowest, constants in alphabet
// order.
std::vector<ColourBindings> solve_store(const ColourStore& store,
                                        const ColourAlphabet& alphabet);

// Cheaper than solve_store(...).empty(): stops at the first model.
bool satisfiable(const ColourStore& store, const ColourAlphabet& alphabet);

}  // namespace hocu

#endif  // HOCU_COLOUR_H_
