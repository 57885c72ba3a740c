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

#include "hocu/term.h"

#include <algorithm>
#include <set>
#include <utility>

namespace hocu {

Type Type::base(std::string name) {
  if (name.empty()) throw TypeError("empty base type name");
  return Type(std::make_shared<Node>(Node{std::move(name), nullptr, nullptr}));
}

Type Type::arrow(Type from, Type to) {
  return Type(std::make_shared<Node>(
      Node{{}, std::move(from.node_), std::move(to.node_)}));
}

Type Type::arrows(std::span<const Type> from, Type to) {
  Type out = std::move(to);
  for (auto it = from.rbegin(); it != from.rend(); ++it) out = arrow(*it, out);
  return out;
}

std::vector<Type> Type::arguments() const {
  std::vector<Type> out;
  Type t = *this;
  while (!t.is_base()) {
    out.push_back(t.from());
    t = t.to();
  }
  return out;
}

Type Type::result() const {
  Type t = *this;
  while (!t.is_base()) t = t.to();
  return t;
}

std::size_t Type::arity() const {
  std::size_t n = 0;
  for (const Node* p = node_.get(); p->from; p = p->to.get()) ++n;
  return n;
}

std::string Type::str() const {
  if (is_base()) return name();
  Type dom = from();
  std::string lhs = dom.is_base() ? dom.str() : "(" + dom.str() + ")";
  return lhs + " -> " + to().str();
}

bool operator==(const Type& a, const Type& b) {
  const Type::Node* x = a.node_.get();
  const Type::Node* y = b.node_.get();
  while (true) {
    if (x == y) return true;
    if ((x->from == nullptr) != (y->from == nullptr)) return false;
    if (x->from == nullptr) return x->name == y->name;
    if (!(Type(x->from) == Type(y->from))) return false;
    x = x->to.get();
    y = y->to.get();
  }
}

Term Term::constant(std::string name, Type type, std::optional<Colour> colour) {
  return Term(std::make_shared<Node>(Node{Kind::kConst, std::move(type),
                                          std::move(name), std::move(colour), 0,
                                          Type::base("?"), {}, 0}));
}

Term Term::free(std::string name, Type type, std::optional<Colour> colour) {
  return Term(std::make_shared<Node>(Node{Kind::kFree, std::move(type),
                                          std::move(name), std::move(colour), 0,
                                          Type::base("?"), {}, 0}));
}

Term Term::bound(int index, Type type) {
  if (index < 0) throw TypeError("negative de Bruijn index");
  return Term(std::make_shared<Node>(Node{Kind::kBound, std::move(type), {},
                                          std::nullopt, index, Type::base("?"),
                                          {}, index + 1}));
}

Term Term::app(Term fn, Term arg) {
  const Type& ft = fn.type();
  if (ft.is_base() || ft.from() != arg.type()) {
    throw TypeError("type mismatch in application of " + to_string(fn) +
                    " : " + ft.str() + " to " + to_string(arg) + " : " +
                    arg.type().str());
  }
  Type result = ft.to();
  int loose = std::max(fn.loose_bound(), arg.loose_bound());
  return Term(std::make_shared<Node>(
      Node{Kind::kApp, std::move(result), {}, std::nullopt, 0, Type::base("?"),
           {std::move(fn), std::move(arg)}, loose}));
}

Term Term::apps(Term head, std::span<const Term> args) {
  for (const Term& a : args) head = app(std::move(head), a);
  return head;
}

Term Term::lam(std::string hint, Type binder, Term body) {
  Type type = Type::arrow(binder, body.type());
  int loose = std::max(0, body.loose_bound() - 1);
  return Term(std::make_shared<Node>(Node{Kind::kLam, std::move(type),
                                          std::move(hint), std::nullopt, 0,
                                          std::move(binder),
                                          {std::move(body)}, loose}));
}

Term Term::with_colour(std::optional<Colour> colour) const {
  if (kind() == Kind::kConst) return constant(name(), type(), std::move(colour));
  if (kind() == Kind::kFree) return free(name(), type(), std::move(colour));
  return *this;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::kConst:
    case Term::Kind::kFree:
      return a.name() == b.name() && a.colour() == b.colour() &&
             a.type() == b.type();
    case Term::Kind::kBound:
      return a.index() == b.index() && a.type() == b.type();
    case Term::Kind::kApp:
      return a.fn() == b.fn() && a.arg() == b.arg();
    case Term::Kind::kLam:
      return a.binder_type() == b.binder_type() && a.body() == b.body();
  }
  return false;
}

void Signature::check_type(const Type& type, const std::string& owner) const {
  if (type.is_base()) {
    if (!has_base_type(type.name())) {
      throw TypeError("undeclared base type '" + type.name() + "' in " + owner);
    }
    return;
  }
  check_type(type.from(), owner);
  check_type(type.to(), owner);
}

void Signature::check_colour(const std::optional<Colour>& colour,
                             const std::string& owner) const {
  if (!colour) return;
  try {
    check_constants(*colour, alphabet_);
  } catch (const ColourError& e) {
    throw ColourError(std::string(e.what()) + " (on " + owner + ")");
  }
}

void Signature::add_base_type(const std::string& name) {
  if (has_base_type(name)) throw TypeError("duplicate base type '" + name + "'");
  base_types_.push_back(name);
}

void Signature::add_constant(SymbolDecl decl) {
  if (constant_index_.contains(decl.name) || variable_index_.contains(decl.name)) {
    throw TypeError("duplicate declaration of '" + decl.name + "'");
  }
  check_type(decl.type, decl.name);
  check_colour(decl.colour, decl.name);
  constant_index_.emplace(decl.name, constants_.size());
  constants_.push_back(std::move(decl));
}

void Signature::add_variable(SymbolDecl decl) {
  if (constant_index_.contains(decl.name) || variable_index_.contains(decl.name)) {
    throw TypeError("duplicate declaration of '" + decl.name + "'");
  }
  check_type(decl.type, decl.name);
  check_colour(decl.colour, decl.name);
  variable_index_.emplace(decl.name, variables_.size());
  variables_.push_back(std::move(decl));
}

bool Signature::has_base_type(const std::string& name) const {
  return std::find(base_types_.begin(), base_types_.end(), name) !=
         base_types_.end();
}

const SymbolDecl* Signature::constant(const std::string& name) const {
  auto it = constant_index_.find(name);
  return it == constant_index_.end() ? nullptr : &constants_[it->second];
}

const SymbolDecl* Signature::variable(const std::string& name) const {
  auto it = variable_index_.find(name);
  return it == variable_index_.end() ? nullptr : &variables_[it->second];
}

bool Signature::declares(const std::string& name) const {
  return constant_index_.contains(name) || variable_index_.contains(name) ||
         has_base_type(name);
}

namespace {

bool same_decls(const std::vector<SymbolDecl>& a,
                const std::vector<SymbolDecl>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || a[i].type != b[i].type ||
        a[i].colour != b[i].colour) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool operator==(const Signature& a, const Signature& b) {
  return a.alphabet_ == b.alphabet_ && a.base_types_ == b.base_types_ &&
         same_decls(a.constants_, b.constants_) &&
         same_decls(a.variables_, b.variables_);
}

namespace {

Type check(const Term& term, const Signature& sig, std::vector<Type>& ctx) {
  switch (term.kind()) {
    case Term::Kind::kConst:
    case Term::Kind::kFree: {
      const SymbolDecl* decl = term.is_const() ? sig.constant(term.name())
                                               : sig.variable(term.name());
      if (decl == nullptr) {
        throw TypeError(std::string("undeclared ") +
                        (term.is_const() ? "constant" : "variable") + " '" +
                        term.name() + "'");
      }
      if (decl->type != term.type()) {
        throw TypeError("'" + term.name() + "' used at type " +
                        term.type().str() + " but declared " +
                        decl->type.str());
      }
      if (term.colour()) {
        try {
          check_constants(*term.colour(), sig.alphabet());
        } catch (const ColourError& e) {
          throw TypeError("bad colour on '" + term.name() + "': " + e.what());
        }
      }
      return decl->type;
    }
    case Term::Kind::kBound: {
      if (term.index() >= static_cast<int>(ctx.size())) {
        throw TypeError("loose bound variable #" +
                        std::to_string(term.index()));
      }
      const Type& t = ctx[ctx.size() - 1 - term.index()];
      if (t != term.type()) {
        throw TypeError("bound variable #" + std::to_string(term.index()) +
                        " has inconsistent type");
      }
      return t;
    }
    case Term::Kind::kApp: {
      Type f = check(term.fn(), sig, ctx);
      Type a = check(term.arg(), sig, ctx);
      if (f.is_base() || f.from() != a) {
        throw TypeError("type mismatch at application " + to_string(term) +
                        ": function has type " + f.str() +
                        ", argument has type " + a.str());
      }
      return f.to();
    }
    case Term::Kind::kLam: {
      ctx.push_back(term.binder_type());
      Type body = check(term.body(), sig, ctx);
      ctx.pop_back();
      return Type::arrow(term.binder_type(), body);
    }
  }
  throw TypeError("unknown term kind");
}

}  // namespace

Type typecheck(const Term& term, const Signature& sig) {
  std::vector<Type> ctx;
  return check(term, sig, ctx);
}

std::string colour_suffix(const Colour& colour) {
  switch (colour.kind()) {
    case Colour::Kind::kConstant:
    case Colour::Kind::kVariable:
    case Colour::Kind::kNot:
      return "_" + colour.str();
    default:
      return "_(" + colour.str() + ")";
  }
}

namespace {

void collect_symbols(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::kConst:
    case Term::Kind::kFree:
      out.insert(t.name());
      return;
    case Term::Kind::kBound:
      return;
    case Term::Kind::kApp:
      collect_symbols(t.fn(), out);
      collect_symbols(t.arg(), out);
      return;
    case Term::Kind::kLam:
      collect_symbols(t.body(), out);
      return;
  }
}

class Printer {
 public:
  Printer(const Term& root, const PrintOptions& options) : options_(options) {
    collect_symbols(root, symbols_);
  }

  void term(const Term& t, std::string& out) {
    if (t.is_lam()) {
      lambda(t, out);
      return;
    }
    std::vector<const Term*> args;
    const Term* head = &t;
    while (head->is_app()) {
      args.push_back(&head->arg());
      head = &head->fn();
    }
    std::reverse(args.begin(), args.end());
    atom(*head, out);
    if (args.empty()) return;
    out += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i > 0) out += ", ";
      term(*args[i], out);
    }
    out += ')';
  }

 private:
  void atom(const Term& t, std::string& out) {
    switch (t.kind()) {
      case Term::Kind::kConst:
      case Term::Kind::kFree:
        out += t.name();
        if (t.colour() && !is_default(t)) out += colour_suffix(*t.colour());
        return;
      case Term::Kind::kBound: {
        int level = static_cast<int>(names_.size()) - 1 - t.index();
        if (level < 0) {
          out += "#" + std::to_string(t.index());
        } else {
          out += names_[level];
        }
        return;
      }
      default:
        out += '(';
        term(t, out);
        out += ')';
    }
  }

  bool is_default(const Term& t) const {
    if (options_.defaults == nullptr) return false;
    const SymbolDecl* decl = t.is_const()
                                 ? options_.defaults->constant(t.name())
                                 : options_.defaults->variable(t.name());
    return decl != nullptr && decl->colour == t.colour();
  }

  std::string pick(const std::string& hint) const {
    std::string base = hint.empty() ? "x" : hint;
    auto taken = [this](const std::string& n) {
      return symbols_.contains(n) ||
             std::find(names_.begin(), names_.end(), n) != names_.end();
    };
    if (!taken(base)) return base;
    for (int i = 1;; ++i) {
      std::string candidate = base + std::to_string(i);
      if (!taken(candidate)) return candidate;
    }
  }

  void lambda(const Term& t, std::string& out) {
    out += '\\';
    const Term* cur = &t;
    std::size_t pushed = 0;
    bool first = true;
    while (cur->is_lam()) {
      std::string name = pick(cur->name());
      if (!first) out += ' ';
      first = false;
      out += name;
      if (options_.binder_types) {
        out += ':';
        const Type& bt = cur->binder_type();
        out += bt.is_base() ? bt.str() : "(" + bt.str() + ")";
      }
      names_.push_back(name);
      ++pushed;
      cur = &cur->body();
    }
    out += ". ";
    term(*cur, out);
    names_.resize(names_.size() - pushed);
  }

  const PrintOptions& options_;
  std::set<std::string> symbols_;
  std::vector<std::string> names_;
};

}  // namespace

std::string to_string(const Term& term, const PrintOptions& options) {
  std::string out;
  Printer(term, options).term(term, out);
  return out;
}

}  // namespace hocu
