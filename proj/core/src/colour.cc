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

#include "hocu/colour.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <utility>

namespace hocu {

Colour Colour::constant(std::string name) {
  if (name.empty()) throw ColourError("empty colour constant name");
  return Colour(std::make_shared<Node>(
      Node{Kind::kConstant, std::move(name), {}, /*ground=*/true}));
}

Colour Colour::variable(std::string name) {
  if (!is_colour_variable_name(name)) {
    throw ColourError("'" + name + "' is not a colour variable name");
  }
  return Colour(std::make_shared<Node>(
      Node{Kind::kVariable, std::move(name), {}, /*ground=*/false}));
}

Colour Colour::negate(Colour operand) {
  bool ground = operand.is_ground();
  return Colour(std::make_shared<Node>(
      Node{Kind::kNot, {}, {std::move(operand)}, ground}));
}

Colour Colour::conj(Colour lhs, Colour rhs) {
  bool ground = lhs.is_ground() && rhs.is_ground();
  return Colour(std::make_shared<Node>(
      Node{Kind::kAnd, {}, {std::move(lhs), std::move(rhs)}, ground}));
}

Colour Colour::disj(Colour lhs, Colour rhs) {
  bool ground = lhs.is_ground() && rhs.is_ground();
  return Colour(std::make_shared<Node>(
      Node{Kind::kOr, {}, {std::move(lhs), std::move(rhs)}, ground}));
}

void Colour::collect_variables(std::vector<std::string>& out) const {
  switch (kind()) {
    case Kind::kConstant:
      return;
    case Kind::kVariable:
      if (std::find(out.begin(), out.end(), name()) == out.end()) {
        out.push_back(name());
      }
      return;
    default:
      for (const Colour& op : node_->operands) op.collect_variables(out);
  }
}

Colour Colour::substitute(
    const std::function<std::optional<Colour>(const std::string&)>& lookup)
    const {
  switch (kind()) {
    case Kind::kConstant:
      return *this;
    case Kind::kVariable: {
      std::optional<Colour> value = lookup(name());
      return value ? *value : *this;
    }
    case Kind::kNot:
      if (is_ground()) return *this;
      return negate(lhs().substitute(lookup));
    case Kind::kAnd:
      if (is_ground()) return *this;
      return conj(lhs().substitute(lookup), rhs().substitute(lookup));
    case Kind::kOr:
      if (is_ground()) return *this;
      return disj(lhs().substitute(lookup), rhs().substitute(lookup));
  }
  return *this;
}

namespace {

int precedence(Colour::Kind kind) {
  switch (kind) {
    case Colour::Kind::kOr:
      return 1;
    case Colour::Kind::kAnd:
      return 2;
    case Colour::Kind::kNot:
      return 3;
    default:
      return 4;
  }
}

void print(const Colour& c, std::string& out) {
  auto operand = [&out](const Colour& op, int min_prec) {
    bool parens = precedence(op.kind()) < min_prec;
    if (parens) out += '(';
    print(op, out);
    if (parens) out += ')';
  };
  switch (c.kind()) {
    case Colour::Kind::kConstant:
    case Colour::Kind::kVariable:
      out += c.name();
      return;
    case Colour::Kind::kNot:
      out += '~';
      operand(c.lhs(), 3);
      return;
    case Colour::Kind::kAnd:
      operand(c.lhs(), 2);
      out += " & ";
      operand(c.rhs(), 3);
      return;
    case Colour::Kind::kOr:
      operand(c.lhs(), 1);
      out += " | ";
      operand(c.rhs(), 2);
      return;
  }
}

}  // namespace

std::string Colour::str() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Colour& a, const Colour& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Colour::Kind::kConstant:
    case Colour::Kind::kVariable:
      return a.name() == b.name();
    case Colour::Kind::kNot:
      return a.lhs() == b.lhs();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

bool operator<(const Colour& a, const Colour& b) { return a.str() < b.str(); }

bool is_colour_variable_name(std::string_view name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch));
  });
}

ColourAlphabet::ColourAlphabet(std::vector<std::string> constants)
    : constants_(std::move(constants)) {
  if (constants_.size() > kMaxSize) {
    throw ColourError("colour alphabet larger than 64 constants");
  }
  std::set<std::string> seen;
  for (const std::string& name : constants_) {
    if (name.empty()) throw ColourError("empty colour constant name");
    if (is_colour_variable_name(name)) {
      throw ColourError("colour constant '" + name +
                        "' looks like a colour variable");
    }
    if (!seen.insert(name).second) {
      throw ColourError("duplicate colour constant '" + name + "'");
    }
  }
}

bool ColourAlphabet::contains(std::string_view name) const {
  return std::find(constants_.begin(), constants_.end(), name) !=
         constants_.end();
}

std::size_t ColourAlphabet::index_of(std::string_view name) const {
  auto it = std::find(constants_.begin(), constants_.end(), name);
  if (it == constants_.end()) {
    throw ColourError("colour constant '" + std::string(name) +
                      "' is not in the alphabet");
  }
  return static_cast<std::size_t>(it - constants_.begin());
}

ColourSet ColourAlphabet::all() const {
  if (constants_.size() == kMaxSize) return ~ColourSet{0};
  return (ColourSet{1} << constants_.size()) - 1;
}

ColourSet ColourAlphabet::denotation(const Colour& formula) const {
  switch (formula.kind()) {
    case Colour::Kind::kConstant:
      return ColourSet{1} << index_of(formula.name());
    case Colour::Kind::kVariable:
      throw ColourError("colour variable " + formula.name() +
                        " has no denotation");
    case Colour::Kind::kNot:
      return all() & ~denotation(formula.lhs());
    case Colour::Kind::kAnd:
      return denotation(formula.lhs()) & denotation(formula.rhs());
    case Colour::Kind::kOr:
      return denotation(formula.lhs()) | denotation(formula.rhs());
  }
  return 0;
}

bool ColourAlphabet::equivalent(const Colour& a, const Colour& b) const {
  return denotation(a) == denotation(b);
}

Colour ColourAlphabet::formula_for(ColourSet set) const {
  set &= all();
  if (constants_.empty()) throw ColourError("empty colour alphabet");
  if (set == 0) {
    return Colour::conj(Colour::constant(constants_[0]),
                        Colour::negate(Colour::constant(constants_[0])));
  }
  if (std::popcount(set) == 1) {
    return Colour::constant(constants_[std::countr_zero(set)]);
  }
  ColourSet complement = all() & ~set;
  if (std::popcount(complement) == 1) {
    return Colour::negate(
        Colour::constant(constants_[std::countr_zero(complement)]));
  }
  std::optional<Colour> out;
  for (std::size_t i = 0; i < constants_.size(); ++i) {
    if (!(set & (ColourSet{1} << i))) continue;
    Colour k = Colour::constant(constants_[i]);
    out = out ? Colour::disj(*out, k) : k;
  }
  return *out;
}

void check_constants(const Colour& colour, const ColourAlphabet& alphabet) {
  switch (colour.kind()) {
    case Colour::Kind::kConstant:
      (void)alphabet.index_of(colour.name());
      return;
    case Colour::Kind::kVariable:
      return;
    case Colour::Kind::kNot:
      check_constants(colour.lhs(), alphabet);
      return;
    default:
      check_constants(colour.lhs(), alphabet);
      check_constants(colour.rhs(), alphabet);
  }
}

bool entails(const Colour& annotation, const Colour& bound,
             const ColourAlphabet& alphabet) {
  if (!annotation.is_ground() || !bound.is_ground()) {
    throw ColourError("entailment between non-ground colours " +
                      annotation.str() + " and " + bound.str());
  }
  ColourSet lhs = alphabet.denotation(annotation);
  ColourSet rhs = alphabet.denotation(bound);
  return (lhs & ~rhs) == 0;
}

std::optional<Colour> ColourStore::binding(const std::string& variable) const {
  auto it = bindings_.find(variable);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

Colour ColourStore::resolve(const Colour& colour) const {
  if (colour.is_ground() || bindings_.empty()) return colour;
  return colour.substitute(
      [this](const std::string& name) { return binding(name); });
}

ColourStore ColourStore::from_parts(std::vector<ColourEquation> equations,
                                    std::vector<Entailment> entailments,
                                    ColourBindings bindings) {
  ColourStore store;
  store.equations_ = std::move(equations);
  store.entailments_ = std::move(entailments);
  store.bindings_ = std::move(bindings);
  return store;
}

std::vector<std::string> ColourStore::unbound_variables() const {
  std::vector<std::string> mentioned;
  for (const auto& [name, value] : bindings_) value.collect_variables(mentioned);
  for (const ColourEquation& eq : equations_) {
    eq.lhs.collect_variables(mentioned);
    eq.rhs.collect_variables(mentioned);
  }
  for (const Entailment& e : entailments_) {
    e.annotation.collect_variables(mentioned);
    e.bound.collect_variables(mentioned);
  }
  std::vector<std::string> out;
  for (const std::string& name : mentioned) {
    if (!bindings_.contains(name)) out.push_back(name);
  }
  return out;
}

namespace {

// Cheap pruning: intersect, per unbound variable, the constants still allowed
// by entailments that mention only that variable and ground colours.
bool domains_nonempty(const ColourStore& store,
                      const ColourAlphabet& alphabet) {
  std::map<std::string, ColourSet> domain;
  auto restrict = [&](const std::string& var, ColourSet allowed) {
    auto [it, inserted] = domain.try_emplace(var, alphabet.all());
    it->second &= allowed;
    return it->second != 0;
  };
  for (const Entailment& e : store.entailments()) {
    Colour lhs = store.resolve(e.annotation);
    Colour rhs = store.resolve(e.bound);
    if (lhs.is_variable() && rhs.is_ground()) {
      if (!restrict(lhs.name(), alphabet.denotation(rhs))) return false;
    } else if (lhs.is_ground() && rhs.is_variable()) {
      ColourSet sat = alphabet.denotation(lhs);
      ColourSet allowed = sat == 0                    ? alphabet.all()
                          : std::popcount(sat) == 1 ? sat
                                                    : ColourSet{0};
      if (!restrict(rhs.name(), allowed)) return false;
    }
  }
  return true;
}

enum class Check { kHolds, kFails, kPending };

Check check_equation(const Colour& lhs, const Colour& rhs,
                     const ColourAlphabet& alphabet) {
  if (lhs == rhs) return Check::kHolds;
  if (!lhs.is_ground() || !rhs.is_ground()) return Check::kPending;
  return alphabet.equivalent(lhs, rhs) ? Check::kHolds : Check::kFails;
}

Check check_entailment(const Colour& lhs, const Colour& rhs,
                       const ColourAlphabet& alphabet) {
  if (lhs == rhs) return Check::kHolds;
  if (!lhs.is_ground() || !rhs.is_ground()) return Check::kPending;
  return entails(lhs, rhs, alphabet) ? Check::kHolds : Check::kFails;
}

bool occurs(const std::string& var, const Colour& colour) {
  std::vector<std::string> vars;
  colour.collect_variables(vars);
  return std::find(vars.begin(), vars.end(), var) != vars.end();
}

}  // namespace

std::optional<ColourStore> bind_colour_variable(const std::string& variable,
                                                const Colour& value,
                                                const ColourStore& store,
                                                const ColourAlphabet& alphabet) {
  Colour resolved = store.resolve(value);
  if (resolved.is_variable() && resolved.name() == variable) return store;

  ColourStore next = store;
  auto lookup = [&](const std::string& name) -> std::optional<Colour> {
    if (name == variable) return resolved;
    return std::nullopt;
  };
  for (auto& [name, bound_to] : next.bindings_) {
    bound_to = bound_to.substitute(lookup);
  }
  next.bindings_.insert_or_assign(variable, resolved);

  // Re-examine deferred constraints; solving one may bind further variables.
  std::vector<ColourEquation> equations = std::move(next.equations_);
  std::vector<Entailment> entailments = std::move(next.entailments_);
  next.equations_.clear();
  next.entailments_.clear();
  for (const Entailment& e : entailments) {
    switch (check_entailment(next.resolve(e.annotation), next.resolve(e.bound),
                             alphabet)) {
      case Check::kFails:
        return std::nullopt;
      case Check::kPending:
        next.entailments_.push_back(e);
        break;
      case Check::kHolds:
        break;
    }
  }
  std::optional<ColourStore> current = std::move(next);
  for (const ColourEquation& eq : equations) {
    current = unify_colours(eq.lhs, eq.rhs, *current, alphabet);
    if (!current) return std::nullopt;
  }
  if (!domains_nonempty(*current, alphabet)) return std::nullopt;
  return current;
}

std::optional<ColourStore> unify_colours(const Colour& a, const Colour& b,
                                         const ColourStore& store,
                                         const ColourAlphabet& alphabet) {
  Colour lhs = store.resolve(a);
  Colour rhs = store.resolve(b);
  if (lhs == rhs) return store;
  if (lhs.is_variable() && !occurs(lhs.name(), rhs)) {
    return bind_colour_variable(lhs.name(), rhs, store, alphabet);
  }
  if (rhs.is_variable() && !occurs(rhs.name(), lhs)) {
    return bind_colour_variable(rhs.name(), lhs, store, alphabet);
  }
  switch (check_equation(lhs, rhs, alphabet)) {
    case Check::kHolds:
      return store;
    case Check::kFails:
      return std::nullopt;
    case Check::kPending:
      break;
  }
  ColourStore next = store;
  next.equations_.push_back({a, b});
  return next;
}

std::optional<ColourStore> assert_entailment(const Colour& annotation,
                                             const Colour& bound,
                                             const ColourStore& store,
                                             const ColourAlphabet& alphabet) {
  switch (check_entailment(store.resolve(annotation), store.resolve(bound),
                           alphabet)) {
    case Check::kHolds:
      return store;
    case Check::kFails:
      return std::nullopt;
    case Check::kPending:
      break;
  }
  Entailment entry{annotation, bound};
  if (std::find(store.entailments_.begin(), store.entailments_.end(), entry) !=
      store.entailments_.end()) {
    return store;
  }
  ColourStore next = store;
  next.entailments_.push_back(std::move(entry));
  if (!domains_nonempty(next, alphabet)) return std::nullopt;
  return next;
}

namespace {

// Backtracking over constants; a constraint is checked as soon as all of its
// variables are assigned.
class StoreSearch {
 public:
  StoreSearch(const ColourStore& store, const ColourAlphabet& alphabet)
      : store_(store), alphabet_(alphabet), vars_(store.unbound_variables()) {
    for (const ColourEquation& eq : store.equations()) {
      constraints_.push_back({eq.lhs, eq.rhs, /*entailment=*/false});
    }
    for (const Entailment& e : store.entailments()) {
      constraints_.push_back({e.annotation, e.bound, /*entailment=*/true});
    }
    // Bindings are facts, but a store built with from_parts may contain
    // bindings that contradict its constraints; those surface through resolve.
    for (Constraint& c : constraints_) {
      std::vector<std::string> used;
      store.resolve(c.lhs).collect_variables(used);
      store.resolve(c.rhs).collect_variables(used);
      std::size_t last = 0;
      for (const std::string& v : used) {
        auto it = std::find(vars_.begin(), vars_.end(), v);
        last = std::max(last,
                        static_cast<std::size_t>(it - vars_.begin()) + 1);
      }
      c.ready_at = last;
    }
  }

  void run(const std::function<bool(const ColourBindings&)>& emit) {
    emit_ = &emit;
    assignment_.clear();
    stopped_ = false;
    if (!check_level(0)) return;
    descend(0);
  }

 private:
  struct Constraint {
    Colour lhs;
    Colour rhs;
    bool entailment;
    std::size_t ready_at = 0;
  };

  std::optional<Colour> lookup(const std::string& name) const {
    auto it = assignment_.find(name);
    if (it != assignment_.end()) return it->second;
    return std::nullopt;
  }

  Colour ground(const Colour& c) const {
    Colour resolved = store_.resolve(c);
    return resolved.substitute(
        [this](const std::string& name) { return lookup(name); });
  }

  bool check_level(std::size_t level) const {
    for (const Constraint& c : constraints_) {
      if (c.ready_at != level) continue;
      Colour lhs = ground(c.lhs);
      Colour rhs = ground(c.rhs);
      Check result = c.entailment ? check_entailment(lhs, rhs, alphabet_)
                                  : check_equation(lhs, rhs, alphabet_);
      if (result != Check::kHolds) return false;
    }
    return true;
  }

  void descend(std::size_t level) {
    if (stopped_) return;
    if (level == vars_.size()) {
      ColourBindings complete;
      for (const auto& [name, value] : store_.bindings()) {
        complete.emplace(name, ground(value));
      }
      for (const auto& [name, value] : assignment_) {
        complete.emplace(name, value);
      }
      if (!(*emit_)(complete)) stopped_ = true;
      return;
    }
    for (const std::string& constant : alphabet_.constants()) {
      assignment_.insert_or_assign(vars_[level], Colour::constant(constant));
      if (check_level(level + 1)) descend(level + 1);
      if (stopped_) return;
    }
    assignment_.erase(vars_[level]);
  }

  const ColourStore& store_;
  const ColourAlphabet& alphabet_;
  std::vector<std::string> vars_;
  std::vector<Constraint> constraints_;
  std::map<std::string, Colour> assignment_;
  const std::function<bool(const ColourBindings&)>* emit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

std::vector<ColourBindings> solve_store(const ColourStore& store,
                                        const ColourAlphabet& alphabet) {
  std::vector<ColourBindings> out;
  StoreSearch(store, alphabet).run([&out](const ColourBindings& b) {
    out.push_back(b);
    return true;
  });
  return out;
}

bool satisfiable(const ColourStore& store, const ColourAlphabet& alphabet) {
  bool found = false;
  StoreSearch(store, alphabet).run([&found](const ColourBindings&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace hocu
