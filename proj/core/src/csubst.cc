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

#include "hocu/csubst.h"

#include <set>
#include <stdexcept>
#include <utility>

#include "hocu/kernel.h"

namespace hocu {

std::string VarKey::str() const {
  return colour ? name + colour_suffix(*colour) : name;
}

bool operator<(const VarKey& a, const VarKey& b) {
  if (a.name != b.name) return a.name < b.name;
  if (a.colour.has_value() != b.colour.has_value()) return !a.colour;
  if (!a.colour) return false;
  return *a.colour < *b.colour;
}

void CSubstitution::bind(VarKey key, Term image) {
  if (image.loose_bound() != 0) {
    throw std::logic_error("substitution image with loose bound variables");
  }
  terms_.insert_or_assign(std::move(key), std::move(image));
}

void CSubstitution::bind_colour(const std::string& variable, Colour value) {
  colours_.insert_or_assign(variable, std::move(value));
}

const Term* CSubstitution::lookup(const VarKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? nullptr : &it->second;
}

std::optional<Colour> CSubstitution::colour(const std::string& variable) const {
  auto it = colours_.find(variable);
  if (it == colours_.end()) return std::nullopt;
  return it->second;
}

Colour CSubstitution::apply_colour(const Colour& c) const {
  if (c.is_ground() || colours_.empty()) return c;
  return c.substitute([this](const std::string& v) { return colour(v); });
}

const char* condition_name(LegalityViolation::Condition condition) {
  switch (condition) {
    case LegalityViolation::Condition::kErasureEquality:
      return "erasure equality";
    case LegalityViolation::Condition::kMonochromicity:
      return "monochromicity";
    case LegalityViolation::Condition::kType:
      return "type";
  }
  return "?";
}

std::string LegalityReport::str() const {
  if (ok()) return "ok";
  std::string out;
  for (const LegalityViolation& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(condition_name(v.condition)) + " violated by";
    for (const VarKey& k : v.keys) out += " " + k.str();
    if (!v.detail.empty()) out += " (" + v.detail + ")";
  }
  return out;
}

LegalityReport check_legal(const CSubstitution& s, const Signature& sig,
                           const ColourStore& residual) {
  LegalityReport report;
  const ColourAlphabet& alphabet = sig.alphabet();

  std::map<std::string, std::pair<VarKey, Term>> first_by_name;
  for (const auto& [key, image] : s.terms()) {
    const SymbolDecl* decl = sig.variable(key.name);
    if (decl == nullptr) {
      report.violations.push_back({LegalityViolation::Condition::kType,
                                   {key},
                                   "undeclared variable"});
    } else if (decl->type != image.type()) {
      report.violations.push_back(
          {LegalityViolation::Condition::kType,
           {key},
           "image has type " + image.type().str() + ", variable has " +
               decl->type.str()});
    }

    Term erased = erase(normalize(image));
    auto [it, inserted] = first_by_name.try_emplace(key.name, key, erased);
    if (!inserted && it->second.second != erased) {
      report.violations.push_back(
          {LegalityViolation::Condition::kErasureEquality,
           {it->second.first, key},
           "erasures differ"});
    }
  }

  std::optional<ColourStore> pending = residual;
  std::vector<VarKey> pending_keys;
  for (const auto& [key, image] : s.terms()) {
    if (!key.colour) continue;
    Colour bound = s.apply_colour(*key.colour);
    if (!bound.is_ground()) continue;
    std::string offenders;
    for_each_symbol(image, [&](const Term& symbol) {
      if (!symbol.colour()) return;
      Colour annotation = s.apply_colour(*symbol.colour());
      if (annotation.is_ground()) {
        if (!entails(annotation, bound, alphabet)) {
          if (!offenders.empty()) offenders += ", ";
          offenders += symbol.name() + colour_suffix(annotation);
        }
        return;
      }
      if (pending) {
        pending = assert_entailment(annotation, bound, *pending, alphabet);
      }
      pending_keys.push_back(key);
    });
    if (!offenders.empty()) {
      report.violations.push_back(
          {LegalityViolation::Condition::kMonochromicity,
           {key},
           offenders + " not " + bound.str() + "-monochrome"});
    }
  }
  if (!pending_keys.empty() &&
      (!pending || !satisfiable(*pending, alphabet))) {
    report.violations.push_back({LegalityViolation::Condition::kMonochromicity,
                                 pending_keys,
                                 "colour-variable annotations cannot be "
                                 "made monochrome"});
  }
  return report;
}

namespace {

Term replace(const CSubstitution& s, const Term& term) {
  switch (term.kind()) {
    case Term::Kind::kFree: {
      VarKey key = VarKey::of(term);
      if (const Term* image = s.lookup(key)) return *image;
      if (!term.colour()) return term;
      Colour rewritten = s.apply_colour(*term.colour());
      if (rewritten == *term.colour()) return term;
      key.colour = rewritten;
      if (const Term* image = s.lookup(key)) return *image;
      return term.with_colour(rewritten);
    }
    case Term::Kind::kConst:
      if (!term.colour()) return term;
      return term.with_colour(s.apply_colour(*term.colour()));
    case Term::Kind::kBound:
      return term;
    case Term::Kind::kApp:
      return Term::app(replace(s, term.fn()), replace(s, term.arg()));
    case Term::Kind::kLam:
      return Term::lam(term.name(), term.binder_type(),
                       replace(s, term.body()));
  }
  return term;
}

}  // namespace

Term apply(const CSubstitution& s, const Term& term) {
  return normalize(replace(s, term));
}

CSubstitution compose(const CSubstitution& outer, const CSubstitution& inner) {
  CSubstitution out;
  for (const auto& [var, value] : inner.colours()) {
    out.bind_colour(var, outer.apply_colour(value));
  }
  for (const auto& [var, value] : outer.colours()) {
    if (!inner.colour(var)) out.bind_colour(var, value);
  }

  // Every key whose image can change: explicit keys of either side, plus each
  // variable name paired with each colour variable either side rewrites.
  std::map<std::string, Type> names;
  std::set<VarKey> candidates;
  for (const auto* side : {&inner, &outer}) {
    for (const auto& [key, image] : side->terms()) {
      names.try_emplace(key.name, image.type());
      candidates.insert(key);
    }
  }
  for (const auto* side : {&inner, &outer}) {
    for (const auto& [var, value] : side->colours()) {
      for (const auto& [name, type] : names) {
        candidates.insert(VarKey{name, Colour::variable(var)});
      }
    }
  }
  std::set<VarKey> explicit_keys;
  for (const auto* side : {&inner, &outer}) {
    for (const auto& entry : side->terms()) explicit_keys.insert(entry.first);
  }
  auto image_of = [&](const VarKey& key) {
    Term var = Term::free(key.name, names.at(key.name), key.colour);
    return std::pair{normalize(var), apply(outer, apply(inner, var))};
  };
  for (const VarKey& key : explicit_keys) {
    auto [var, image] = image_of(key);
    if (image != var) out.bind(key, image);
  }
  // Other keys only when the composite does not already map them right.
  for (const VarKey& key : candidates) {
    if (explicit_keys.contains(key)) continue;
    auto [var, image] = image_of(key);
    if (apply(out, var) != image) out.bind(key, image);
  }
  return out;
}

std::map<std::string, Term> erase(const CSubstitution& s) {
  std::map<std::string, Term> out;
  for (const auto& [key, image] : s.terms()) {
    out.try_emplace(key.name, erase(normalize(image)));
  }
  return out;
}

namespace {

Term replace_classical(const std::map<std::string, Term>& s, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kFree: {
      auto it = s.find(t.name());
      return it == s.end() ? t : it->second;
    }
    case Term::Kind::kApp:
      return Term::app(replace_classical(s, t.fn()),
                       replace_classical(s, t.arg()));
    case Term::Kind::kLam:
      return Term::lam(t.name(), t.binder_type(),
                       replace_classical(s, t.body()));
    default:
      return t;
  }
}

}  // namespace

Term apply_classical(const std::map<std::string, Term>& s, const Term& term) {
  return normalize(replace_classical(s, term));
}

namespace {

// Keeps the outer binders so an image still shows its arity.
Term contract_inside(const Term& t) {
  if (t.kind() != Term::Kind::kLam) return eta_contract(t);
  return Term::lam(t.name(), t.binder_type(), contract_inside(t.body()));
}

}  // namespace

std::string serialize(const CSubstitution& s) {
  std::string out;
  for (const auto& [key, image] : s.terms()) {
    out += key.str() + " = " + to_string(contract_inside(image)) + "\n";
  }
  for (const auto& [var, value] : s.colours()) {
    out += var + " := " + value.str() + "\n";
  }
  return out;
}

}  // namespace hocu
