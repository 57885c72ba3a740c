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

#include "support/support.h"

#include <stdexcept>

#include "hocu/csubst.h"
#include "hocu/kernel.h"

namespace hocu::testing {

Signature signature(std::string_view declarations) {
  return parse_problem(declarations).problem.signature;
}

Term term(std::string_view text, const Signature& sig) {
  return parse_term(text, sig);
}

Colour colour(std::string_view text, const Signature& sig) {
  // An entailment line is the smallest place the grammar takes a colour.
  std::string line = "A |= " + std::string(text) + ";";
  Expected e = parse_solution(line, sig);
  return e.constraints.at(0).bound;
}

bool holds(const Colour& formula, const std::string& constant) {
  switch (formula.kind()) {
    case Colour::Kind::kConstant:
      return formula.name() == constant;
    case Colour::Kind::kNot:
      return !holds(formula.lhs(), constant);
    case Colour::Kind::kAnd:
      return holds(formula.lhs(), constant) && holds(formula.rhs(), constant);
    case Colour::Kind::kOr:
      return holds(formula.lhs(), constant) || holds(formula.rhs(), constant);
    case Colour::Kind::kVariable:
      break;
  }
  throw std::invalid_argument("truth table of a non-ground colour");
}

bool entails_by_table(const Colour& a, const Colour& b,
                      const ColourAlphabet& alphabet) {
  for (const std::string& k : alphabet.constants()) {
    if (holds(a, k) && !holds(b, k)) return false;
  }
  return true;
}

std::vector<Colour> small_formulas(const ColourAlphabet& alphabet) {
  std::vector<Colour> literals;
  for (const std::string& k : alphabet.constants()) {
    literals.push_back(Colour::constant(k));
    literals.push_back(Colour::negate(Colour::constant(k)));
  }
  std::vector<Colour> out = literals;
  for (const Colour& l : literals) {
    for (const Colour& r : literals) {
      out.push_back(Colour::conj(l, r));
      out.push_back(Colour::disj(l, r));
      out.push_back(Colour::negate(Colour::disj(l, r)));
    }
  }
  return out;
}

TermGenerator::TermGenerator(unsigned seed) : rng_(seed) {
  sig_ = signature(R"(
    colours r, g, u;
    types e, t;
    const a : e;
    const b : e;
    const f : e -> e;
    const h : e -> e -> e;
    const p : e -> t;
    const q : (e -> e) -> e;
    const all : (e -> t) -> t;
    var X : e -> e;
    var Y : e;
    var Z : (e -> e) -> e -> t;
  )");
}

std::optional<Colour> TermGenerator::maybe_colour() {
  const auto& names = sig_.alphabet().constants();
  switch (std::uniform_int_distribution<int>(0, 5)(rng_)) {
    case 0:
      return Colour::constant(names[rng_() % names.size()]);
    case 1:
      return Colour::negate(Colour::constant(names[rng_() % names.size()]));
    case 2:
      return Colour::variable("A");
    default:
      return std::nullopt;
  }
}

Type TermGenerator::pick_type() {
  Type e = Type::base("e");
  switch (rng_() % 3) {
    case 0:
      return e;
    case 1:
      return Type::arrow(e, e);
    default:
      return Type::arrow(e, Type::base("t"));
  }
}

Term TermGenerator::generate(int depth) {
  std::vector<Type> context;
  Type type = rng_() % 2 ? Type::base("t") : Type::arrow(Type::base("e"),
                                                          Type::base("t"));
  return gen(type, depth, context);
}

Term TermGenerator::gen(const Type& type, int depth,
                        std::vector<Type>& context) {
  int choice = std::uniform_int_distribution<int>(0, 9)(rng_);
  if (depth > 0 && !type.is_base() && choice < 3) {
    context.push_back(type.from());
    Term body = gen(type.to(), depth - 1, context);
    context.pop_back();
    return Term::lam("v", type.from(), body);
  }
  if (depth > 1 && choice == 3) {
    Type sigma = pick_type();
    context.push_back(sigma);
    Term body = gen(type, depth - 2, context);
    context.pop_back();
    return Term::app(Term::lam("r", sigma, body), gen(sigma, depth - 2, context));
  }

  // A head whose type ends in `type` after some arguments.
  struct Head {
    Term term;
    std::size_t args;
  };
  std::vector<Head> heads;
  auto consider = [&](const Term& head) {
    Type ty = head.type();
    std::size_t n = 0;
    while (true) {
      if (ty == type) heads.push_back({head, n});
      if (ty.is_base()) break;
      ty = ty.to();
      ++n;
    }
  };
  for (const SymbolDecl& c : sig_.constants()) {
    consider(Term::constant(c.name, c.type, maybe_colour()));
  }
  for (const SymbolDecl& v : sig_.variables()) {
    consider(Term::free(v.name, v.type, maybe_colour()));
  }
  for (std::size_t i = 0; i < context.size(); ++i) {
    consider(Term::bound(static_cast<int>(context.size() - 1 - i), context[i]));
  }
  if (depth <= 0) {
    std::vector<Head> atoms;
    for (const Head& h : heads) {
      if (h.args == 0) atoms.push_back(h);
    }
    if (!atoms.empty()) heads = std::move(atoms);
  }
  Head pick = heads[rng_() % heads.size()];
  Term out = pick.term;
  for (std::size_t i = 0; i < pick.args; ++i) {
    out = Term::app(out, gen(out.type().from(), depth - 1, context));
  }
  return out;
}

namespace {

std::string pick(std::mt19937& rng, const std::vector<std::string>& from) {
  return from[rng() % from.size()];
}

std::string annotation(std::mt19937& rng,
                       const std::vector<std::string>& colours,
                       bool allow_variable) {
  switch (rng() % 6) {
    case 0:
      return "_" + pick(rng, colours);
    case 1:
      return "_~" + pick(rng, colours);
    case 2:
      return allow_variable ? "_A" : "";
    default:
      return "";
  }
}

// Ground term over the individuals; `hole` (if nonempty) is planted at
// random leaves.
std::string ground(std::mt19937& rng, int depth,
                   const std::vector<std::string>& individuals,
                   const std::vector<std::string>& colours,
                   const std::string& hole) {
  int choice = static_cast<int>(rng() % 10);
  if (!hole.empty() && choice < 2) return hole;
  if (depth == 0 || choice < 5) {
    return pick(rng, individuals) + annotation(rng, colours, true);
  }
  if (choice < 7) {
    return "g" + annotation(rng, colours, false) + "(" +
           ground(rng, depth - 1, individuals, colours, hole) + ")";
  }
  return "f" + annotation(rng, colours, false) + "(" +
         ground(rng, depth - 1, individuals, colours, hole) + ", " +
         ground(rng, depth - 1, individuals, colours, hole) + ")";
}

}  // namespace

std::string random_matching_problem(std::mt19937& rng) {
  std::vector<std::string> colours = {"r", "g", "u"};
  colours.resize(2 + rng() % 2);
  std::vector<std::string> individuals = {"k0", "k1", "k2", "k3"};
  individuals.resize(2 + rng() % 3);

  std::string text = "colours ";
  for (std::size_t i = 0; i < colours.size(); ++i) {
    text += (i ? ", " : "") + colours[i];
  }
  text += ";\ntypes e;\n";
  auto default_colour = [&]() -> std::string {
    switch (rng() % 4) {
      case 0:
        return " @ " + pick(rng, colours);
      case 1:
        return " @ ~" + pick(rng, colours);
      default:
        return "";
    }
  };
  text += "const f : e -> e -> e" + default_colour() + ";\n";
  text += "const g : e -> e" + default_colour() + ";\n";
  for (const std::string& k : individuals) {
    text += "const " + k + " : e" + default_colour() + ";\n";
  }
  text += "var X : e -> e" + default_colour() + ";\n";
  bool second = rng() % 3 == 0;
  if (second) text += "var Y : e -> e -> e" + default_colour() + ";\n";

  std::string s = ground(rng, 1, individuals, colours, "");
  std::string t = ground(rng, 4, individuals, colours, s);
  text += "eq X(" + s + ") = " + t + ";\n";
  if (second) {
    std::string s1 = ground(rng, 0, individuals, colours, "");
    std::string s2 = ground(rng, 1, individuals, colours, "");
    std::string body = ground(rng, 3, individuals, colours, s1);
    text += "eq Y(" + s1 + ", " + s2 + ") = " + body + ";\n";
  }
  return text;
}

std::map<std::string, Term> erased_images(const Solution& solution) {
  return erase(solution.substitution);
}

}  // namespace hocu::testing
