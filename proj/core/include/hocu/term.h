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

#ifndef HOCU_TERM_H_
#define HOCU_TERM_H_

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hocu/colour.h"

namespace hocu {

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple types: base types and right-associative arrows.
class Type {
 public:
  static Type base(std::string name);
  static Type arrow(Type from, Type to);
  // arrows(b1..bn, a) = b1 -> ... -> bn -> a
  static Type arrows(std::span<const Type> from, Type to);

  bool is_base() const { return node_->from == nullptr; }
  const std::string& name() const { return node_->name; }
  Type from() const { return Type(node_->from); }
  Type to() const { return Type(node_->to); }

  // Argument types and final base type of the spine b1 -> ... -> bn -> a.
  std::vector<Type> arguments() const;
  Type result() const;
  std::size_t arity() const;

  std::string str() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

 private:
  struct Node {
    std::string name;
    std::shared_ptr<const Node> from;
    std::shared_ptr<const Node> to;
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Coloured simply-typed lambda terms. Bound variables are de Bruijn indices,
// so alpha-equivalent terms are equal; binder names are kept as printing
// hints only. Terms are immutable and cheap to copy.
class Term {
 public:
  enum class Kind { kConst, kFree, kBound, kApp, kLam };

  static Term constant(std::string name, Type type,
                       std::optional<Colour> colour = std::nullopt);
  static Term free(std::string name, Type type,
                   std::optional<Colour> colour = std::nullopt);
  static Term bound(int index, Type type);
  // Throws TypeError when `fn` is not a function accepting `arg`.
  static Term app(Term fn, Term arg);
  static Term apps(Term head, std::span<const Term> args);
  static Term lam(std::string hint, Type binder, Term body);

  Kind kind() const { return node_->kind; }
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_free() const { return kind() == Kind::kFree; }
  bool is_bound() const { return kind() == Kind::kBound; }
  bool is_app() const { return kind() == Kind::kApp; }
  bool is_lam() const { return kind() == Kind::kLam; }

  const Type& type() const { return node_->type; }
  // Symbol name for constants and free variables, binder hint for lambdas.
  const std::string& name() const { return node_->name; }
  const std::optional<Colour>& colour() const { return node_->colour; }
  int index() const { return node_->index; }
  const Term& fn() const { return node_->children[0]; }
  const Term& arg() const { return node_->children[1]; }
  const Type& binder_type() const { return node_->binder; }
  const Term& body() const { return node_->children[0]; }

  // One more than the largest loose de Bruijn index (0 for closed terms).
  int loose_bound() const { return node_->loose; }

  Term with_colour(std::optional<Colour> colour) const;

  // Syntactic equality up to binder hints; colours compare structurally.
  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    Type type;
    std::string name;
    std::optional<Colour> colour;
    int index = 0;
    Type binder;
    std::vector<Term> children;
    int loose = 0;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct SymbolDecl {
  std::string name;
  Type type;
  // Default annotation of occurrences written without one.
  std::optional<Colour> colour;
};

// Base types, constants and free variables of one problem together with its
// colour alphabet. Names are unique within their namespace.
class Signature {
 public:
  Signature() = default;
  explicit Signature(ColourAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const ColourAlphabet& alphabet() const { return alphabet_; }
  void set_alphabet(ColourAlphabet alphabet) { alphabet_ = std::move(alphabet); }

  void add_base_type(const std::string& name);
  void add_constant(SymbolDecl decl);
  void add_variable(SymbolDecl decl);

  bool has_base_type(const std::string& name) const;
  const SymbolDecl* constant(const std::string& name) const;
  const SymbolDecl* variable(const std::string& name) const;
  bool declares(const std::string& name) const;

  const std::vector<std::string>& base_types() const { return base_types_; }
  const std::vector<SymbolDecl>& constants() const { return constants_; }
  const std::vector<SymbolDecl>& variables() const { return variables_; }

  friend bool operator==(const Signature&, const Signature&);

 private:
  void check_colour(const std::optional<Colour>& colour,
                    const std::string& owner) const;
  void check_type(const Type& type, const std::string& owner) const;

  ColourAlphabet alphabet_;
  std::vector<std::string> base_types_;
  std::vector<SymbolDecl> constants_;
  std::vector<SymbolDecl> variables_;
  std::map<std::string, std::size_t> constant_index_;
  std::map<std::string, std::size_t> variable_index_;
};

// Checks every symbol against `sig` (declared, same type) and every
// application node; returns the type of `term`.
Type typecheck(const Term& term, const Signature& sig);

struct PrintOptions {
  // Print `\x:e.` instead of `\x.`.
  bool binder_types = false;
  // When set, occurrences whose annotation equals the declared default are
  // printed without a suffix.
  const Signature* defaults = nullptr;
};

// `like(dan_pe, golf)`, `\x. R_~pe(x)`. Binder hints are renamed where they
// would capture or be captured.
std::string to_string(const Term& term, const PrintOptions& options = {});
std::string colour_suffix(const Colour& colour);

}  // namespace hocu

#endif  // HOCU_TERM_H_
