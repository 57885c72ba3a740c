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

#ifndef HOCU_CSUBST_H_
#define HOCU_CSUBST_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hocu/colour.h"
#include "hocu/term.h"

namespace hocu {

// A coloured variable: the pair of a variable name and one annotation.
struct VarKey {
  std::string name;
  std::optional<Colour> colour;

  static VarKey of(const Term& free_var) {
    return {free_var.name(), free_var.colour()};
  }
  std::string str() const;

  friend bool operator==(const VarKey&, const VarKey&) = default;
  friend bool operator<(const VarKey& a, const VarKey& b);
};

// A pair of a term substitution over coloured variables and a colour
// substitution over colour variables.
class CSubstitution {
 public:
  const std::map<VarKey, Term>& terms() const { return terms_; }
  const ColourBindings& colours() const { return colours_; }

  void bind(VarKey key, Term image);
  void bind_colour(const std::string& variable, Colour value);
  const Term* lookup(const VarKey& key) const;
  std::optional<Colour> colour(const std::string& variable) const;
  bool empty() const { return terms_.empty() && colours_.empty(); }

  // Applies the colour part to one annotation.
  Colour apply_colour(const Colour& colour) const;

  friend bool operator==(const CSubstitution&, const CSubstitution&) = default;

 private:
  std::map<VarKey, Term> terms_;
  ColourBindings colours_;
};

struct LegalityViolation {
  enum class Condition { kErasureEquality, kMonochromicity, kType };
  Condition condition;
  std::vector<VarKey> keys;
  std::string detail;
};

struct LegalityReport {
  std::vector<LegalityViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

const char* condition_name(LegalityViolation::Condition condition);

// Checks that same-name entries have equal erasures, that every entry whose
// (colour-substituted) key colour is ground maps to a monochrome image, and
// that images have the declared type. Image annotations that are still colour
// variables are checked for joint satisfiability together with `residual`.
LegalityReport check_legal(const CSubstitution& s, const Signature& sig,
                           const ColourStore& residual = {});

// Replaces each x_c with its image (after rewriting c through the colour part
// when (x, c) itself has no entry), rewrites every other annotation, and
// normalizes the result.
Term apply(const CSubstitution& s, const Term& term);

// apply(compose(outer, inner), M) == apply(outer, apply(inner, M)).
CSubstitution compose(const CSubstitution& outer, const CSubstitution& inner);

// Erasure of a legal substitution: a classical substitution keyed by name.
std::map<std::string, Term> erase(const CSubstitution& s);
Term apply_classical(const std::map<std::string, Term>& s, const Term& term);

// One line per binding, `x_colour = term`, then `A := colour`, in key order.
std::string serialize(const CSubstitution& s);

}  // namespace hocu

#endif  // HOCU_CSUBST_H_
