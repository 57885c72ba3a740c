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

#include "hocu/kernel.h"

#include <algorithm>
#include <utility>

namespace hocu {

Term shift(const Term& term, int delta, int cutoff) {
  if (delta == 0 || term.loose_bound() <= cutoff) return term;
  switch (term.kind()) {
    case Term::Kind::kBound:
      return term.index() >= cutoff
                 ? Term::bound(term.index() + delta, term.type())
                 : term;
    case Term::Kind::kApp:
      return Term::app(shift(term.fn(), delta, cutoff),
                       shift(term.arg(), delta, cutoff));
    case Term::Kind::kLam:
      return Term::lam(term.name(), term.binder_type(),
                       shift(term.body(), delta, cutoff + 1));
    default:
      return term;
  }
}

namespace {

Term substitute_at(const Term& term, int depth, const Term& value) {
  if (term.loose_bound() <= depth) return term;
  switch (term.kind()) {
    case Term::Kind::kBound:
      if (term.index() == depth) return shift(value, depth);
      if (term.index() > depth) return Term::bound(term.index() - 1, term.type());
      return term;
    case Term::Kind::kApp:
      return Term::app(substitute_at(term.fn(), depth, value),
                       substitute_at(term.arg(), depth, value));
    case Term::Kind::kLam:
      return Term::lam(term.name(), term.binder_type(),
                       substitute_at(term.body(), depth + 1, value));
    default:
      return term;
  }
}

}  // namespace

Term instantiate(const Term& body, const Term& value) {
  return substitute_at(body, 0, value);
}

namespace {

bool has_index(const Term& term, int index) {
  if (term.loose_bound() <= index) return false;
  switch (term.kind()) {
    case Term::Kind::kBound:
      return term.index() == index;
    case Term::Kind::kApp:
      return has_index(term.fn(), index) || has_index(term.arg(), index);
    case Term::Kind::kLam:
      return has_index(term.body(), index + 1);
    default:
      return false;
  }
}

}  // namespace

Term eta_contract(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::kApp:
      return Term::app(eta_contract(term.fn()), eta_contract(term.arg()));
    case Term::Kind::kLam: {
      Term body = eta_contract(term.body());
      if (body.kind() == Term::Kind::kApp &&
          body.arg().kind() == Term::Kind::kBound && body.arg().index() == 0 &&
          !has_index(body.fn(), 0)) {
        return shift(body.fn(), -1);
      }
      return Term::lam(term.name(), term.binder_type(), body);
    }
    default:
      return term;
  }
}

Term beta_normalize(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::kLam:
      return Term::lam(term.name(), term.binder_type(),
                       beta_normalize(term.body()));
    case Term::Kind::kApp: {
      std::vector<Term> args = args_of(term);
      Term head = head_of(term);
      if (head.is_lam()) {
        Term reduced = instantiate(head.body(), args.front());
        return beta_normalize(
            Term::apps(reduced, std::span(args).subspan(1)));
      }
      for (Term& a : args) a = beta_normalize(a);
      return Term::apps(head, args);
    }
    default:
      return term;
  }
}

namespace {

const char* const kHints[] = {"x", "y", "z", "w", "u", "v"};

std::string expansion_hint(std::size_t i) {
  if (i < std::size(kHints)) return kHints[i];
  return "x" + std::to_string(i);
}

// Eta-expands a beta-normal term.
Term eta_long(const Term& term) {
  if (term.is_lam()) {
    return Term::lam(term.name(), term.binder_type(), eta_long(term.body()));
  }
  Term head = head_of(term);
  std::vector<Term> args = args_of(term);
  for (Term& a : args) a = eta_long(a);
  std::vector<Type> missing = term.type().arguments();
  if (missing.empty()) return Term::apps(head, args);

  int n = static_cast<int>(missing.size());
  Term body = shift(head, n);
  for (const Term& a : args) body = Term::app(body, shift(a, n));
  for (int i = 0; i < n; ++i) {
    body = Term::app(body, eta_long(Term::bound(n - 1 - i, missing[i])));
  }
  for (int i = n - 1; i >= 0; --i) {
    body = Term::lam(expansion_hint(i), missing[i], body);
  }
  return body;
}

}  // namespace

Term normalize(const Term& term) { return eta_long(beta_normalize(term)); }

bool is_eta_long_normal(const Term& term) {
  if (term.is_lam()) return is_eta_long_normal(term.body());
  if (!term.type().is_base()) return false;
  Term head = head_of(term);
  if (head.is_lam() || head.is_app()) return false;
  for (const Term& a : args_of(term)) {
    if (!is_eta_long_normal(a)) return false;
  }
  return true;
}

Term head_of(const Term& term) {
  const Term* t = &term;
  while (t->is_app()) t = &t->fn();
  return *t;
}

std::vector<Term> args_of(const Term& term) {
  std::vector<Term> out;
  const Term* t = &term;
  while (t->is_app()) {
    out.push_back(t->arg());
    t = &t->fn();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Spine spine(const Term& term) {
  std::vector<Type> binders;
  std::vector<std::string> hints;
  const Term* t = &term;
  while (t->is_lam()) {
    binders.push_back(t->binder_type());
    hints.push_back(t->name());
    t = &t->body();
  }
  return Spine{std::move(binders), std::move(hints), head_of(*t), args_of(*t)};
}

Term map_colours(const Term& term,
                 const std::function<Colour(const Colour&)>& f) {
  switch (term.kind()) {
    case Term::Kind::kConst:
    case Term::Kind::kFree:
      if (!term.colour()) return term;
      return term.with_colour(f(*term.colour()));
    case Term::Kind::kBound:
      return term;
    case Term::Kind::kApp:
      return Term::app(map_colours(term.fn(), f), map_colours(term.arg(), f));
    case Term::Kind::kLam:
      return Term::lam(term.name(), term.binder_type(),
                       map_colours(term.body(), f));
  }
  return term;
}

Term erase(const Term& term) {
  switch (term.kind()) {
    case Term::Kind::kConst:
    case Term::Kind::kFree:
      return term.colour() ? term.with_colour(std::nullopt) : term;
    case Term::Kind::kBound:
      return term;
    case Term::Kind::kApp:
      return Term::app(erase(term.fn()), erase(term.arg()));
    case Term::Kind::kLam:
      return Term::lam(term.name(), term.binder_type(), erase(term.body()));
  }
  return term;
}

void for_each_symbol(const Term& term,
                     const std::function<void(const Term&)>& visit) {
  switch (term.kind()) {
    case Term::Kind::kConst:
    case Term::Kind::kFree:
      visit(term);
      return;
    case Term::Kind::kBound:
      return;
    case Term::Kind::kApp:
      for_each_symbol(term.fn(), visit);
      for_each_symbol(term.arg(), visit);
      return;
    case Term::Kind::kLam:
      for_each_symbol(term.body(), visit);
      return;
  }
}

namespace {

bool same_annotation(const std::optional<Colour>& a,
                     const std::optional<Colour>& b,
                     const ColourAlphabet& alphabet) {
  if (!a || !b) return !a && !b;
  if (a->is_ground() && b->is_ground()) return alphabet.equivalent(*a, *b);
  return *a == *b;
}

bool equal_normal(const Term& a, const Term& b, const ColourAlphabet& alphabet,
                  bool loose) {
  if (a.kind() != b.kind() || a.type() != b.type()) return false;
  switch (a.kind()) {
    case Term::Kind::kConst:
      if (loose && (!a.colour() || !b.colour())) return a.name() == b.name();
      [[fallthrough]];
    case Term::Kind::kFree:
      return a.name() == b.name() &&
             same_annotation(a.colour(), b.colour(), alphabet);
    case Term::Kind::kBound:
      return a.index() == b.index();
    case Term::Kind::kApp:
      return equal_normal(a.fn(), b.fn(), alphabet, loose) &&
             equal_normal(a.arg(), b.arg(), alphabet, loose);
    case Term::Kind::kLam:
      return a.binder_type() == b.binder_type() &&
             equal_normal(a.body(), b.body(), alphabet, loose);
  }
  return false;
}

}  // namespace

bool alpha_beta_eta_equal(const Term& a, const Term& b,
                          const ColourAlphabet& alphabet,
                          bool unannotated_constants_match) {
  if (a.type() != b.type()) {
    throw TypeError("comparing terms of different types " + a.type().str() +
                    " and " + b.type().str());
  }
  return equal_normal(normalize(a), normalize(b), alphabet,
                      unannotated_constants_match);
}

std::optional<ColourStore> monochrome_constraints(
    const Term& term, const Colour& colour, const ColourStore& store,
    const ColourAlphabet& alphabet) {
  std::optional<ColourStore> out = store;
  for_each_symbol(term, [&](const Term& symbol) {
    if (!out || !symbol.colour()) return;
    out = assert_entailment(*symbol.colour(), colour, *out, alphabet);
  });
  return out;
}

}  // namespace hocu
