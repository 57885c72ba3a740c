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

#include "hocu/unifier.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hocu/kernel.h"

namespace hocu {

std::string to_string(const Equation& eq) {
  if (const auto* t = std::get_if<TermEquation>(&eq)) {
    return to_string(t->lhs) + " = " + to_string(t->rhs);
  }
  const auto& c = std::get<ColourEquation>(eq);
  return c.lhs.str() + " =c " + c.rhs.str();
}

std::string TraceEntry::str() const {
  std::string out = "RULE " + rule + " ON " + std::to_string(index);
  if (!binding.empty()) out += " BINDING " + binding;
  return out + " ; " + equation;
}

namespace {

void collect_colour_variables(const Term& term, std::set<std::string>& out) {
  for_each_symbol(term, [&](const Term& s) {
    if (!s.colour()) return;
    std::vector<std::string> vars;
    s.colour()->collect_variables(vars);
    out.insert(vars.begin(), vars.end());
  });
}

std::string fresh_name(const std::string& prefix, int& counter,
                       const ProblemState& state) {
  for (;;) {
    std::string name = prefix + std::to_string(counter++);
    if (!state.reserved || !state.reserved->contains(name)) return name;
  }
}

void add_trace(ProblemState& state, std::string rule, std::size_t index,
               std::string binding, const Equation& eq) {
  state.trace.push_back(
      {std::move(rule), index, std::move(binding), to_string(eq)});
}

bool occurs(const Term& term, const std::string& name) {
  bool found = false;
  for_each_symbol(term, [&](const Term& s) {
    if (s.is_free() && s.name() == name) found = true;
  });
  return found;
}

bool mentions_forbidden(const Term& term, const ProblemState& state) {
  bool found = false;
  for_each_symbol(term, [&](const Term& s) {
    if (s.is_const() && state.forbidden.contains(s.name())) found = true;
  });
  return found;
}

// True when `pred` holds for a symbol that no substitution can remove: one
// reachable from the root without passing through the arguments of a free
// variable.
bool rigid_occurrence(const Term& term,
                      const std::function<bool(const Term&)>& pred) {
  const Term* t = &term;
  while (t->is_lam()) t = &t->body();
  Term head = head_of(*t);
  if (head.is_free()) return pred(head);
  if (head.is_const() && pred(head)) return true;
  for (const Term& a : args_of(*t)) {
    if (rigid_occurrence(a, pred)) return true;
  }
  return false;
}

Term strip_lambdas(const Term& term) {
  const Term* t = &term;
  while (t->is_lam()) t = &t->body();
  return *t;
}

void resolve_all(ProblemState& state) {
  const ColourStore& store = state.store;
  auto resolve = [&store](const Colour& c) { return store.resolve(c); };
  for (Equation& eq : state.equations) {
    if (auto* t = std::get_if<TermEquation>(&eq)) {
      t->lhs = map_colours(t->lhs, resolve);
      t->rhs = map_colours(t->rhs, resolve);
    } else {
      auto& c = std::get<ColourEquation>(eq);
      c.lhs = store.resolve(c.lhs);
      c.rhs = store.resolve(c.rhs);
    }
  }
  for (auto& [key, image] : state.solved) {
    if (key.colour) key.colour = store.resolve(*key.colour);
    image = map_colours(image, resolve);
  }
}

enum class Elimination { kNone, kLeft, kRight, kFail };

Elimination classify_elimination(const TermEquation& eq,
                                 const ProblemState& state) {
  if (eq.binding) return Elimination::kLeft;
  auto side = [&state](const Term& var, const Term& other) {
    if (!var.is_free()) return Elimination::kNone;
    const std::string& x = var.name();
    if (rigid_occurrence(other, [&x](const Term& s) {
          return s.is_free() && s.name() == x;
        })) {
      return Elimination::kFail;
    }
    if (rigid_occurrence(other, [&state](const Term& s) {
          return s.is_const() && state.forbidden.contains(s.name());
        })) {
      return Elimination::kFail;
    }
    if (occurs(other, x) || mentions_forbidden(other, state)) {
      return Elimination::kNone;
    }
    return Elimination::kLeft;
  };
  Elimination left = side(eq.lhs, eq.rhs);
  if (left != Elimination::kNone) return left;
  Elimination right = side(eq.rhs, eq.lhs);
  return right == Elimination::kLeft ? Elimination::kRight : right;
}

bool is_rigid_rigid(const TermEquation& eq) {
  return !eq.binding && !eq.lhs.is_lam() && !eq.rhs.is_lam() &&
         head_of(eq.lhs).is_const() && head_of(eq.rhs).is_const();
}

}  // namespace

ProblemState initial_state(const Problem& problem) {
  ProblemState state;
  auto reserved = std::make_shared<std::set<std::string>>();
  const Signature& sig = problem.signature;
  for (const std::string& b : sig.base_types()) reserved->insert(b);
  for (const SymbolDecl& d : sig.constants()) reserved->insert(d.name);
  for (const SymbolDecl& d : sig.variables()) reserved->insert(d.name);
  for (const std::string& c : sig.alphabet().constants()) reserved->insert(c);
  for (const std::string& v : problem_colour_variables(problem)) {
    reserved->insert(v);
  }
  state.reserved = std::move(reserved);
  for (const TermEquation& eq : problem.equations) {
    if (eq.lhs.type() != eq.rhs.type()) {
      throw TypeError("equation sides have types " + eq.lhs.type().str() +
                      " and " + eq.rhs.type().str());
    }
    state.equations.push_back(
        TermEquation{normalize(eq.lhs), normalize(eq.rhs), false});
  }
  return state;
}

ProblemState decompose_abstraction(const ProblemState& state,
                                   std::size_t index) {
  ProblemState next = state;
  const auto& eq = std::get<TermEquation>(state.equations[index]);
  const Term& lam = eq.lhs.is_lam() ? eq.lhs : eq.rhs;
  std::string name = fresh_name("c", next.next_constant, next);
  Term c = Term::constant(name, lam.binder_type());
  next.forbidden.emplace(name, lam.binder_type());
  auto open = [&c](const Term& side) {
    return side.is_lam() ? normalize(instantiate(side.body(), c))
                         : normalize(Term::app(side, c));
  };
  add_trace(next, "decompose_abstraction", index, "", eq);
  next.equations[index] = TermEquation{open(eq.lhs), open(eq.rhs), false};
  return next;
}

std::optional<ProblemState> decompose_application(const ProblemState& state,
                                                  std::size_t index) {
  const auto& eq = std::get<TermEquation>(state.equations[index]);
  Term lh = head_of(eq.lhs);
  Term rh = head_of(eq.rhs);
  if (lh.name() != rh.name()) return std::nullopt;
  ProblemState next = state;
  add_trace(next, "decompose_application", index, "", eq);
  std::vector<Equation> parts;
  if (lh.colour() && rh.colour()) {
    parts.push_back(ColourEquation{*lh.colour(), *rh.colour()});
  }
  std::vector<Term> la = args_of(eq.lhs);
  std::vector<Term> ra = args_of(eq.rhs);
  for (std::size_t i = 0; i < la.size(); ++i) {
    parts.push_back(TermEquation{la[i], ra[i], false});
  }
  auto pos = next.equations.erase(next.equations.begin() +
                                  static_cast<std::ptrdiff_t>(index));
  next.equations.insert(pos, parts.begin(), parts.end());
  return next;
}

std::optional<ProblemState> eliminate_colour_variable(
    const ProblemState& state, std::size_t index,
    const ColourAlphabet& alphabet) {
  const auto& eq = std::get<ColourEquation>(state.equations[index]);
  std::optional<ColourStore> store =
      unify_colours(state.store.resolve(eq.lhs), state.store.resolve(eq.rhs),
                    state.store, alphabet);
  if (!store) return std::nullopt;
  ProblemState next = state;
  add_trace(next, "eliminate_colour", index, "", eq);
  next.equations.erase(next.equations.begin() +
                       static_cast<std::ptrdiff_t>(index));
  next.store = std::move(*store);
  resolve_all(next);
  return next;
}

std::optional<ProblemState> eliminate_term_variable(
    const ProblemState& state, std::size_t index,
    const ColourAlphabet& alphabet) {
  const auto& eq = std::get<TermEquation>(state.equations[index]);
  Elimination side = classify_elimination(eq, state);
  if (side != Elimination::kLeft && side != Elimination::kRight) {
    return std::nullopt;
  }
  const Term& var = side == Elimination::kLeft ? eq.lhs : eq.rhs;
  const Term& image = side == Elimination::kLeft ? eq.rhs : eq.lhs;
  const std::string& x = var.name();
  std::optional<Colour> d = var.colour();
  if (d) d = state.store.resolve(*d);

  ProblemState next = state;
  if (d) {
    std::optional<ColourStore> store =
        monochrome_constraints(image, *d, next.store, alphabet);
    if (!store) return std::nullopt;
    next.store = std::move(*store);
  }

  // Every other colour under which x occurs gets a variant of the image.
  std::vector<std::optional<Colour>> others;
  auto note = [&](const Term& t) {
    for_each_symbol(t, [&](const Term& s) {
      if (!s.is_free() || s.name() != x || s.colour() == d) return;
      if (std::find(others.begin(), others.end(), s.colour()) == others.end()) {
        others.push_back(s.colour());
      }
    });
  };
  for (std::size_t j = 0; j < state.equations.size(); ++j) {
    if (j == index) continue;
    if (const auto* t = std::get_if<TermEquation>(&state.equations[j])) {
      note(t->lhs);
      note(t->rhs);
    }
  }
  for (const auto& [key, solved] : state.solved) note(solved);

  CSubstitution sigma;
  sigma.bind(VarKey{x, d}, image);
  std::vector<std::pair<VarKey, Term>> added{{VarKey{x, d}, image}};
  for (const std::optional<Colour>& ci : others) {
    bool failed = false;
    std::function<Term(const Term&)> recolour = [&](const Term& t) -> Term {
      switch (t.kind()) {
        case Term::Kind::kConst: {
          if (!t.colour()) return t;
          Colour k = Colour::variable(fresh_name("K", next.next_colour, next));
          if (ci) {
            std::optional<ColourStore> store =
                assert_entailment(k, *ci, next.store, alphabet);
            if (!store) {
              failed = true;
            } else {
              next.store = std::move(*store);
            }
          }
          return t.with_colour(k);
        }
        case Term::Kind::kFree:
          return t.with_colour(ci);
        case Term::Kind::kApp:
          return Term::app(recolour(t.fn()), recolour(t.arg()));
        case Term::Kind::kLam:
          return Term::lam(t.name(), t.binder_type(), recolour(t.body()));
        default:
          return t;
      }
    };
    Term variant = recolour(image);
    if (failed) return std::nullopt;
    sigma.bind(VarKey{x, ci}, variant);
    added.emplace_back(VarKey{x, ci}, variant);
  }

  add_trace(next, "eliminate_term", index, "", eq);
  next.equations.erase(next.equations.begin() +
                       static_cast<std::ptrdiff_t>(index));
  for (Equation& e : next.equations) {
    auto* t = std::get_if<TermEquation>(&e);
    if (t == nullptr || t->binding) continue;
    t->lhs = apply(sigma, t->lhs);
    t->rhs = apply(sigma, t->rhs);
  }
  for (auto& [key, solved] : next.solved) solved = apply(sigma, solved);
  for (auto& entry : added) next.solved.push_back(std::move(entry));
  return next;
}

std::optional<ProblemState> simplify(ProblemState state,
                                     const ColourAlphabet& alphabet) {
  for (;;) {
    auto& eqs = state.equations;
    bool progressed = false;

    for (std::size_t i = 0; i < eqs.size() && !progressed; ++i) {
      const auto* t = std::get_if<TermEquation>(&eqs[i]);
      if (t != nullptr && !t->binding && t->lhs == t->rhs) {
        add_trace(state, "delete", i, "", eqs[i]);
        eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(i));
        progressed = true;
      }
    }
    if (progressed) continue;

    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const auto* t = std::get_if<TermEquation>(&eqs[i]);
      if (t != nullptr && !t->binding && (t->lhs.is_lam() || t->rhs.is_lam())) {
        state = decompose_abstraction(state, i);
        progressed = true;
        break;
      }
    }
    if (progressed) continue;

    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const auto* t = std::get_if<TermEquation>(&eqs[i]);
      if (t != nullptr && is_rigid_rigid(*t)) {
        std::optional<ProblemState> next = decompose_application(state, i);
        if (!next) return std::nullopt;
        state = std::move(*next);
        progressed = true;
        break;
      }
    }
    if (progressed) continue;

    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (std::holds_alternative<ColourEquation>(eqs[i])) {
        std::optional<ProblemState> next =
            eliminate_colour_variable(state, i, alphabet);
        if (!next) return std::nullopt;
        state = std::move(*next);
        progressed = true;
        break;
      }
    }
    if (progressed) continue;

    for (std::size_t i = 0; i < eqs.size(); ++i) {
      const auto* t = std::get_if<TermEquation>(&eqs[i]);
      if (t == nullptr) continue;
      Elimination e = classify_elimination(*t, state);
      if (e == Elimination::kFail) return std::nullopt;
      if (e == Elimination::kNone) continue;
      std::optional<ProblemState> next =
          eliminate_term_variable(state, i, alphabet);
      if (!next) return std::nullopt;
      state = std::move(*next);
      progressed = true;
      break;
    }
    if (!progressed) return state;
  }
}

std::optional<std::size_t> find_flex_rigid(const ProblemState& state) {
  for (std::size_t i = 0; i < state.equations.size(); ++i) {
    const auto* t = std::get_if<TermEquation>(&state.equations[i]);
    if (t == nullptr || t->binding) continue;
    Term lh = head_of(strip_lambdas(t->lhs));
    Term rh = head_of(strip_lambdas(t->rhs));
    if ((lh.is_free() && rh.is_const()) || (lh.is_const() && rh.is_free())) {
      return i;
    }
  }
  return std::nullopt;
}

namespace {

std::string binder_hint(std::size_t i) {
  static const char* const kHints[] = {"x", "y", "z", "w"};
  if (i < std::size(kHints)) return kHints[i];
  return "x" + std::to_string(i);
}

}  // namespace

std::vector<Branch> general_bindings(const ProblemState& state,
                                     std::size_t index,
                                     const ColourAlphabet& alphabet,
                                     int max_depth, bool* cut) {
  const auto& eq = std::get<TermEquation>(state.equations[index]);
  bool flex_left = head_of(strip_lambdas(eq.lhs)).is_free();
  Term var = head_of(strip_lambdas(flex_left ? eq.lhs : eq.rhs));
  Term head = head_of(strip_lambdas(flex_left ? eq.rhs : eq.lhs));

  auto it = state.depth.find(var.name());
  int depth = it == state.depth.end() ? 0 : it->second;
  if (depth + 1 > max_depth) {
    if (cut != nullptr) *cut = true;
    return {};
  }

  std::optional<Colour> c = var.colour();
  if (c) c = state.store.resolve(*c);
  std::vector<Type> betas = var.type().arguments();
  Type alpha = var.type().result();
  const int n = static_cast<int>(betas.size());

  // lambda z1..zn. h(H1(z1..zn), ..., Hm(z1..zn)) for the given head and
  // argument types.
  auto build = [&](ProblemState& next, const Term& h,
                   const std::vector<Type>& gammas) -> Term {
    std::vector<Term> zs;
    for (int j = 0; j < n; ++j) zs.push_back(Term::bound(n - 1 - j, betas[j]));
    std::vector<Term> args;
    for (const Type& gamma : gammas) {
      std::optional<Colour> e;
      if (c) {
        e = c->is_ground() ? *c
                           : Colour::variable(
                                 fresh_name("K", next.next_colour, next));
      }
      std::string name = fresh_name("H", next.next_variable, next);
      next.depth[name] = depth + 1;
      Term hv = Term::free(name, Type::arrows(betas, gamma), e);
      args.push_back(Term::apps(hv, zs));
    }
    Term body = Term::apps(h, args);
    for (int j = n - 1; j >= 0; --j) {
      body = Term::lam(binder_hint(static_cast<std::size_t>(j)), betas[j], body);
    }
    return normalize(body);
  };

  std::vector<Branch> out;
  auto finish = [&](std::string rule, ProblemState next, Term binding) {
    if (c) {
      std::optional<ColourStore> store =
          monochrome_constraints(binding, *c, next.store, alphabet);
      if (!store) return;
      next.store = std::move(*store);
    }
    add_trace(next, rule, index, to_string(binding), eq);
    next.equations.push_back(TermEquation{var, binding, true});
    out.push_back(Branch{std::move(rule), std::move(binding), std::move(next)});
  };

  if (!state.forbidden.contains(head.name())) {
    std::optional<Colour> hc = head.colour();
    bool allowed = true;
    if (hc) {
      Colour d = state.store.resolve(*hc);
      if (c && c->is_ground()) {
        if (d.is_ground()) {
          allowed = entails(d, *c, alphabet);
          hc = d;
        } else {
          hc = *c;
        }
      } else {
        hc = d;
      }
    }
    if (allowed) {
      ProblemState next = state;
      Term h = head.with_colour(hc);
      Term binding = build(next, h, head.type().arguments());
      finish("imitate", std::move(next), std::move(binding));
    }
  }

  for (int j = 0; j < n; ++j) {
    if (betas[j].result() != alpha) continue;
    ProblemState next = state;
    Term binding = build(next, Term::bound(n - 1 - j, betas[j]),
                         betas[j].arguments());
    finish("project", std::move(next), std::move(binding));
  }
  return out;
}

std::string serialize(const Solution& solution) {
  std::string out = serialize(solution.substitution);
  for (const Entailment& e : solution.constraints) {
    out += e.annotation.str() + " |= " + e.bound.str() + "\n";
  }
  for (const TermEquation& eq : solution.residual) {
    out += "flex: " + to_string(eq.lhs) + " = " + to_string(eq.rhs) + "\n";
  }
  return out;
}

const char* status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::kExhausted:
      return "search space exhausted";
    case SearchStatus::kBoundReached:
      return "bound reached";
    case SearchStatus::kSolutionLimit:
      return "solution limit reached";
  }
  return "?";
}

std::set<std::string> problem_colour_variables(const Problem& problem) {
  std::set<std::string> out;
  for (const TermEquation& eq : problem.equations) {
    collect_colour_variables(eq.lhs, out);
    collect_colour_variables(eq.rhs, out);
  }
  return out;
}

namespace {

Term reset_hints(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kApp:
      return Term::app(reset_hints(t.fn()), reset_hints(t.arg()));
    case Term::Kind::kLam:
      return Term::lam("v", t.binder_type(), reset_hints(t.body()));
    default:
      return t;
  }
}

std::set<std::string> variables_of(const Colour& c) {
  std::vector<std::string> vars;
  c.collect_variables(vars);
  return {vars.begin(), vars.end()};
}

}  // namespace

std::string canonical_form(const CSubstitution& substitution,
                           const std::vector<Entailment>& constraints,
                           const std::set<std::string>& keep,
                           const ColourAlphabet& alphabet) {
  std::map<std::string, std::string> renamed;
  auto canon = [&](const Colour& c) -> Colour {
    if (c.is_ground()) return alphabet.formula_for(alphabet.denotation(c));
    return c.substitute([&](const std::string& v) -> std::optional<Colour> {
      if (keep.contains(v)) return std::nullopt;
      auto [it, inserted] =
          renamed.try_emplace(v, "?" + std::to_string(renamed.size() + 1));
      return Colour::variable(it->second);
    });
  };
  std::vector<std::string> lines;
  for (const auto& [key, image] : substitution.terms()) {
    std::string k = key.name;
    if (key.colour) k += colour_suffix(canon(*key.colour));
    lines.push_back(k + " = " +
                    to_string(map_colours(reset_hints(normalize(image)), canon)));
  }
  for (const auto& [var, value] : substitution.colours()) {
    lines.push_back(var + " := " + canon(value).str());
  }
  for (const Entailment& e : constraints) {
    lines.push_back(canon(e.annotation).str() + " |= " + canon(e.bound).str());
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

std::string ValidationReport::str() const {
  if (ok()) return "ok";
  std::string out;
  for (const std::string& f : failures) {
    if (!out.empty()) out += "; ";
    out += f;
  }
  return out;
}

ValidationReport validate(const CSubstitution& substitution,
                          const Problem& problem,
                          const std::vector<Entailment>& constraints,
                          bool check_equations) {
  ValidationReport report;
  const Signature& sig = problem.signature;
  ColourStore residual = ColourStore::from_parts({}, constraints, {});
  LegalityReport legal = check_legal(substitution, sig, residual);
  for (const LegalityViolation& v : legal.violations) {
    std::string line = std::string(condition_name(v.condition)) + ":";
    for (const VarKey& k : v.keys) line += " " + k.str();
    if (!v.detail.empty()) line += " (" + v.detail + ")";
    report.failures.push_back(std::move(line));
  }
  for (const auto& [key, image] : substitution.terms()) {
    for_each_symbol(image, [&](const Term& s) {
      if (s.is_const() && sig.constant(s.name()) == nullptr) {
        report.failures.push_back("forbidden constant " + s.name() +
                                  " in the image of " + key.str());
      }
    });
  }
  if (!check_equations) return report;
  const ColourAlphabet& alphabet = sig.alphabet();
  for (std::size_t i = 0; i < problem.equations.size(); ++i) {
    const TermEquation& eq = problem.equations[i];
    Term l = apply(substitution, eq.lhs);
    Term r = apply(substitution, eq.rhs);
    if (!alpha_beta_eta_equal(l, r, alphabet, true)) {
      report.failures.push_back("beta-eta inequality in equation " +
                                std::to_string(i) + ": " + to_string(l) +
                                " != " + to_string(r));
    }
  }
  return report;
}

ValidationReport validate(const Solution& solution, const Problem& problem) {
  return validate(solution.substitution, problem, solution.constraints,
                  !solution.pre_solution());
}

namespace {

class Search {
 public:
  Search(const Problem& problem, const SearchConfig& config,
         const std::function<void(const Solution&)>& emit)
      : problem_(problem),
        config_(config),
        emit_(emit),
        alphabet_(problem.signature.alphabet()),
        keep_(problem_colour_variables(problem)) {
    for (const TermEquation& eq : problem.equations) {
      for (const Term* side : {&eq.lhs, &eq.rhs}) {
        for_each_symbol(*side, [this](const Term& s) {
          if (s.is_free()) keys_.insert(VarKey::of(s));
        });
      }
    }
  }

  SearchStatus run() {
    ProblemState start = initial_state(problem_);
    if (config_.max_solutions <= 0) return SearchStatus::kSolutionLimit;
    if (config_.strategy == Strategy::kDepthFirst) {
      explore(start, config_.max_bindings);
      if (stopped_) return SearchStatus::kSolutionLimit;
      return cut_ ? SearchStatus::kBoundReached : SearchStatus::kExhausted;
    }
    for (int limit = 0; limit <= config_.max_bindings; ++limit) {
      cut_ = false;
      explore(start, limit);
      if (stopped_) return SearchStatus::kSolutionLimit;
      if (!cut_) return SearchStatus::kExhausted;
    }
    return SearchStatus::kBoundReached;
  }

 private:
  void explore(const ProblemState& state, int limit) {
    if (stopped_) return;
    std::optional<ProblemState> simple = simplify(state, alphabet_);
    if (!simple) return;
    std::optional<std::size_t> index = find_flex_rigid(*simple);
    if (!index) {
      report(*simple);
      return;
    }
    for (Branch& b : general_bindings(*simple, *index, alphabet_, limit, &cut_)) {
      explore(b.state, limit);
      if (stopped_) return;
    }
  }

  void report(const ProblemState& final_state) {
    ColourStore store = final_state.store;
    if (!satisfiable(store, alphabet_)) return;

    auto find_image = [&](const VarKey& key) -> std::optional<Term> {
      VarKey resolved = key;
      if (resolved.colour) resolved.colour = store.resolve(*resolved.colour);
      for (const auto& [k, image] : final_state.solved) {
        if (k == key || k == resolved) return image;
      }
      return std::nullopt;
    };
    std::map<VarKey, Term> images;
    for (const VarKey& key : keys_) {
      if (std::optional<Term> image = find_image(key)) images.emplace(key, *image);
    }

    // A fresh colour variable bounded above only by ground colours is
    // generalised to the conjunction of its bounds.
    std::set<std::string> fresh;
    for (const auto& [key, image] : images) {
      std::set<std::string> vars;
      collect_colour_variables(map_colours(image, [&](const Colour& c) {
                                 return store.resolve(c);
                               }),
                               vars);
      for (const std::string& v : vars) {
        if (!keep_.contains(v)) fresh.insert(v);
      }
    }
    for (const std::string& v : fresh) {
      if (store.binding(v)) continue;
      std::optional<Colour> bound;
      bool only_upper = true;
      for (const ColourEquation& eq : store.equations()) {
        if (variables_of(store.resolve(eq.lhs)).contains(v) ||
            variables_of(store.resolve(eq.rhs)).contains(v)) {
          only_upper = false;
        }
      }
      for (const Entailment& e : store.entailments()) {
        Colour a = store.resolve(e.annotation);
        Colour b = store.resolve(e.bound);
        bool in_a = variables_of(a).contains(v);
        bool in_b = variables_of(b).contains(v);
        if (!in_a && !in_b) continue;
        if (a == Colour::variable(v) && b.is_ground()) {
          bound = bound ? Colour::conj(*bound, b) : b;
        } else {
          only_upper = false;
        }
      }
      if (!only_upper || !bound) continue;
      Colour value = alphabet_.formula_for(alphabet_.denotation(*bound));
      if (std::optional<ColourStore> next =
              bind_colour_variable(v, value, store, alphabet_)) {
        store = std::move(*next);
      }
    }

    Solution solution;
    solution.trace = final_state.trace;
    auto resolve = [&store](const Colour& c) { return store.resolve(c); };
    std::set<std::string> mentioned;
    for (const auto& [key, image] : images) {
      Term resolved = map_colours(image, resolve);
      collect_colour_variables(resolved, mentioned);
      if (key.colour) {
        std::set<std::string> kv = variables_of(store.resolve(*key.colour));
        mentioned.insert(kv.begin(), kv.end());
      }
      solution.substitution.bind(key, resolved);
    }
    for (const std::string& a : keep_) {
      Colour value = store.resolve(Colour::variable(a));
      if (value != Colour::variable(a)) {
        solution.substitution.bind_colour(a, value);
        std::set<std::string> vv = variables_of(value);
        mentioned.insert(vv.begin(), vv.end());
      }
    }
    for (const Entailment& e : store.entailments()) {
      Colour a = store.resolve(e.annotation);
      Colour b = store.resolve(e.bound);
      bool relevant = false;
      for (const std::string& v : variables_of(a)) relevant |= mentioned.contains(v);
      for (const std::string& v : variables_of(b)) relevant |= mentioned.contains(v);
      if (relevant) solution.constraints.push_back({a, b});
    }
    for (const Equation& eq : final_state.equations) {
      if (const auto* t = std::get_if<TermEquation>(&eq)) {
        solution.residual.push_back(TermEquation{map_colours(t->lhs, resolve),
                                                 map_colours(t->rhs, resolve),
                                                 false});
      }
    }

    std::string canon = canonical_form(solution.substitution,
                                       solution.constraints, keep_, alphabet_);
    for (const TermEquation& r : solution.residual) {
      canon += "flex: " + to_string(reset_hints(r.lhs)) + " = " +
               to_string(reset_hints(r.rhs)) + "\n";
    }
    if (!seen_.insert(canon).second) return;

    ValidationReport check = validate(solution, problem_);
    if (!check.ok()) {
      throw std::logic_error("unifier produced an invalid solution: " +
                             check.str() + "\n" + serialize(solution));
    }
    emit_(solution);
    if (++emitted_ >= config_.max_solutions) stopped_ = true;
  }

  const Problem& problem_;
  const SearchConfig& config_;
  const std::function<void(const Solution&)>& emit_;
  const ColourAlphabet& alphabet_;
  std::set<std::string> keep_;
  std::set<VarKey> keys_;
  std::set<std::string> seen_;
  int emitted_ = 0;
  bool stopped_ = false;
  bool cut_ = false;
};

}  // namespace

SearchStatus solve(const Problem& problem, const SearchConfig& config,
                   const std::function<void(const Solution&)>& emit) {
  return Search(problem, config, emit).run();
}

SearchResult solve(const Problem& problem, const SearchConfig& config) {
  SearchResult result;
  result.status = solve(problem, config, [&result](const Solution& s) {
    result.solutions.push_back(s);
  });
  return result;
}

}  // namespace hocu
