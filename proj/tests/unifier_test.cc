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

#include <gtest/gtest.h>

#include "hocu/driver.h"
#include "hocu/dsl.h"
#include "hocu/kernel.h"
#include "support/support.h"

namespace hocu {
namespace {

using testing::term;

Colour C(const std::string& n) { return Colour::constant(n); }
Colour V(const std::string& n) { return Colour::variable(n); }
Colour Not(const Colour& c) { return Colour::negate(c); }

const char kCrossover[] = R"(
  colours pe, pf;
  types e, t;
  const ex : e -> e -> e -> t @ ~pf;
  const i : e;
  var R : e -> e -> t @ ~pf;
)";

Problem problem(std::string_view text) { return parse_problem(text).problem; }

std::string eq_str(const ProblemState& s, std::size_t i) {
  return to_string(s.equations.at(i));
}

std::vector<std::string> images(const SearchResult& r) {
  std::vector<std::string> out;
  for (const Solution& s : r.solutions) out.push_back(serialize(s));
  return out;
}

TEST(DecomposeAbstraction, CrossoverEquation) {
  Problem p = problem(std::string(kCrossover) +
                      "eq R(i_pf) = \\x:e. ex(x, i_pf, i_A);");
  ProblemState s = decompose_abstraction(initial_state(p), 0);
  ASSERT_EQ(s.equations.size(), 1u);
  EXPECT_EQ(eq_str(s, 0), "R_~pf(i_pf, c1) = ex_~pf(c1, i_pf, i_A)");
  EXPECT_TRUE(s.forbidden.contains("c1"));
}

TEST(DecomposeAbstraction, AlphaVariantSides) {
  Problem p = problem(R"(
    types e, t;
    const f : e -> t;
    eq \x:e. f(x) = \y:e. f(y);
  )");
  ProblemState s = decompose_abstraction(initial_state(p), 0);
  EXPECT_EQ(eq_str(s, 0), "f(c1) = f(c1)");
  auto done = simplify(s, p.signature.alphabet());
  ASSERT_TRUE(done);
  EXPECT_TRUE(done->equations.empty());
}

TEST(DecomposeAbstraction, OneSidedAbstraction) {
  Problem p = problem(R"(
    types e;
    const a : e;
    const b : e -> e;
    eq \x:e. a = b;
  )");
  ProblemState s = decompose_abstraction(initial_state(p), 0);
  EXPECT_EQ(eq_str(s, 0), "a = b(c1)");
  EXPECT_TRUE(solve(p).solutions.empty());

  Problem q = problem(R"(
    types e;
    const a : e;
    var F : e -> e;
    eq \x:e. a = F;
  )");
  SearchResult r = solve(q);
  ASSERT_EQ(r.solutions.size(), 1u);
  EXPECT_EQ(serialize(r.solutions[0]), "F = \\x. a\n");
  EXPECT_TRUE(validate(r.solutions[0], q).ok());
}

TEST(DecomposeApplication, ColourClashPrunes) {
  Problem p = problem(R"(
    colours a, b;
    types e, t;
    const intro : e -> e -> e -> t;
    const p : e;
    const j : e;
    const s : e;
    var x : e;
    eq intro_a(p_a, j_b, x_a) = intro_a(p_a, j_a, s_a);
  )");
  auto s = decompose_application(initial_state(p), 0);
  ASSERT_TRUE(s);
  // a =c a, p_a = p_a, j_b = j_a, x_a = s_a
  ASSERT_EQ(s->equations.size(), 4u);
  EXPECT_EQ(eq_str(*s, 2), "j_b = j_a");
  auto t = decompose_application(*s, 2);
  ASSERT_TRUE(t);
  bool found = false;
  for (std::size_t k = 0; k < t->equations.size(); ++k) {
    if (eq_str(*t, k) == "b =c a") {
      found = true;
      EXPECT_FALSE(eliminate_colour_variable(*t, k, p.signature.alphabet()));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_FALSE(simplify(initial_state(p), p.signature.alphabet()));
}

TEST(DecomposeApplication, DifferentHeadsClash) {
  Problem p = problem(std::string(kCrossover) +
                      "const dan : e;\neq ex(dan, i, i) = ex(i_pf, i, i);");
  auto s = decompose_application(initial_state(p), 0);
  ASSERT_TRUE(s);
  bool clash = false;
  for (std::size_t k = 0; k < s->equations.size(); ++k) {
    if (eq_str(*s, k) == "dan = i_pf") {
      clash = !decompose_application(*s, k).has_value();
    }
  }
  EXPECT_TRUE(clash);
}

TEST(DecomposeApplication, TrivialEquationIsDeleted) {
  Problem p = problem(std::string(kCrossover) + "eq \\x:e. ex(x, i, i) = \\y:e. ex(y, i, i);");
  auto s = simplify(initial_state(p), p.signature.alphabet());
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->equations.empty());
}

TEST(DecomposeApplication, UncolouredHeadEmitsNoColourEquation) {
  Problem p = problem(R"(
    colours pe, pf;
    types e, t;
    const like : e -> e -> t;
    const golf : e;
    const dan : e;
    eq like(dan, golf) = like(dan, golf_pe);
  )");
  auto s = decompose_application(initial_state(p), 0);
  ASSERT_TRUE(s);
  for (const Equation& e : s->equations) {
    EXPECT_TRUE(std::holds_alternative<TermEquation>(e)) << to_string(e);
  }
}

ProblemState colour_state(std::vector<ColourEquation> eqs) {
  ProblemState s = initial_state(Problem{});
  for (ColourEquation& e : eqs) s.equations.push_back(std::move(e));
  return s;
}

TEST(EliminateColour, BindsEverywhere) {
  ColourAlphabet alphabet({"pe", "pf"});
  ProblemState s = colour_state({{V("A"), Not(C("pf"))}});
  Type e = Type::base("e");
  s.equations.push_back(TermEquation{Term::constant("i", e, V("A")),
                                     Term::constant("i", e, V("A"))});
  auto out = eliminate_colour_variable(s, 0, alphabet);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->store.resolve(V("A")), Not(C("pf")));
  EXPECT_EQ(to_string(out->equations.back()), "i_~pf = i_~pf");
}

TEST(EliminateColour, ReflexiveNeedsNoBinding) {
  ColourAlphabet alphabet({"pe", "pf"});
  auto out = eliminate_colour_variable(colour_state({{V("A"), V("A")}}), 0,
                                       alphabet);
  ASSERT_TRUE(out);
  EXPECT_FALSE(out->store.binding("A"));
}

TEST(EliminateColour, LaterConflictFails) {
  ColourAlphabet alphabet({"pe", "pf"});
  ProblemState s = colour_state({{V("A"), C("pf")}, {C("pe"), V("A")}});
  EXPECT_FALSE(simplify(s, alphabet));
}

TEST(EliminateTerm, VariantsKeepTheCounterexampleUnsolvable) {
  Problem p = problem(R"(
    colours c, d;
    types e;
    const f : e;
    const g : e;
    var x : e;
    eq x_c = f_c;
    eq x_d = g_d;
  )");
  auto s = eliminate_term_variable(initial_state(p), 0, p.signature.alphabet());
  ASSERT_TRUE(s);
  // x_d became the variant f_K with K |= d.
  bool variant = false;
  for (const Equation& e : s->equations) {
    std::string text = to_string(e);
    if (text.rfind("f_K", 0) == 0 && text.ends_with("= g_d")) variant = true;
  }
  EXPECT_TRUE(variant);
  EXPECT_FALSE(simplify(*s, p.signature.alphabet()));
  EXPECT_TRUE(solve(p).solutions.empty());
}

TEST(EliminateTerm, SingleBinding) {
  Problem p = problem(R"(
    colours a, b;
    types e;
    const k : e;
    var x : e;
    eq x_a = k_a;
  )");
  auto s = simplify(initial_state(p), p.signature.alphabet());
  ASSERT_TRUE(s);
  ASSERT_EQ(s->solved.size(), 1u);
  EXPECT_EQ(s->solved[0].first.str(), "x_a");
  EXPECT_EQ(to_string(s->solved[0].second), "k_a");
}

TEST(EliminateTerm, OccursCheckPrunes) {
  Problem p = problem(R"(
    types e;
    const g : e -> e;
    var x : e;
    eq x = g(x);
  )");
  EXPECT_FALSE(eliminate_term_variable(initial_state(p), 0,
                                       p.signature.alphabet()));
  EXPECT_TRUE(solve(p).solutions.empty());
}

TEST(EliminateTerm, ForbiddenConstantCannotEscape) {
  Problem p = problem(R"(
    types e;
    var x : e;
    var F : e -> e;
    eq \y:e. x = \y:e. y;
  )");
  EXPECT_TRUE(solve(p).solutions.empty());
}

std::vector<std::string> binding_strings(const std::vector<Branch>& bs) {
  std::vector<std::string> out;
  for (const Branch& b : bs) out.push_back(b.rule + " " + to_string(b.binding));
  return out;
}

TEST(GeneralBindings, ImitationAndProjection) {
  Problem p = problem(R"(
    types e;
    const a : e;
    var x : e -> e;
    eq x(a) = a;
  )");
  ProblemState s = initial_state(p);
  bool cut = false;
  auto bs = general_bindings(s, 0, p.signature.alphabet(), 10, &cut);
  EXPECT_EQ(binding_strings(bs),
            (std::vector<std::string>{"imitate \\x. a", "project \\x. x"}));
  EXPECT_FALSE(cut);
}

// The state reached after the imitation for R and the decomposition:
// H_~pf(i_pf, c1) = rhs.
ProblemState crossover_state(const Term& rhs) {
  ColourAlphabet alphabet({"pe", "pf"});
  Type e = Type::base("e");
  Type ee = Type::arrow(e, Type::arrow(e, e));
  ProblemState s = initial_state(Problem{});
  s.forbidden.emplace("c1", e);
  std::vector<Term> args = {Term::constant("i", e, C("pf")),
                            Term::constant("c1", e)};
  s.equations.push_back(TermEquation{
      Term::apps(Term::free("H3", ee, Not(C("pf"))), args), rhs});
  return s;
}

TEST(GeneralBindings, VariableColouredPronoun) {
  ColourAlphabet alphabet({"pe", "pf"});
  ProblemState s =
      crossover_state(Term::constant("i", Type::base("e"), V("A")));
  bool cut = false;
  auto bs = general_bindings(s, 0, alphabet, 10, &cut);
  EXPECT_EQ(binding_strings(bs),
            (std::vector<std::string>{"imitate \\x y. i_~pf",
                                      "project \\x y. x",
                                      "project \\x y. y"}));
}

TEST(GeneralBindings, PrimaryHeadCannotBeImitated) {
  ColourAlphabet alphabet({"pe", "pf"});
  ProblemState s =
      crossover_state(Term::constant("i", Type::base("e"), C("pf")));
  bool cut = false;
  auto bs = general_bindings(s, 0, alphabet, 10, &cut);
  for (const Branch& b : bs) EXPECT_EQ(b.rule, "project");
  EXPECT_EQ(bs.size(), 2u);
}

TEST(GeneralBindings, ForbiddenHeadCannotBeImitated) {
  ColourAlphabet alphabet({"pe", "pf"});
  ProblemState s = crossover_state(Term::constant("c1", Type::base("e")));
  bool cut = false;
  auto bs = general_bindings(s, 0, alphabet, 10, &cut);
  EXPECT_EQ(binding_strings(bs),
            (std::vector<std::string>{"project \\x y. x",
                                      "project \\x y. y"}));
}

TEST(GeneralBindings, DepthBoundCuts) {
  Problem p = problem(R"(
    types e;
    const a : e;
    var x : e -> e;
    eq x(a) = a;
  )");
  bool cut = false;
  auto bs = general_bindings(initial_state(p), 0, p.signature.alphabet(), 0,
                             &cut);
  EXPECT_TRUE(bs.empty());
  EXPECT_TRUE(cut);
}

TEST(Solve, EllipsisHasOneSolution) {
  Problem p = problem(R"(
    colours pe, pf;
    types e, t;
    const like : e -> e -> t;
    const dan : e;
    const golf : e;
    var R : e -> t @ ~pe;
    eq like(dan_pe, golf) = R(dan_pe);
  )");
  SearchResult r = solve(p);
  EXPECT_EQ(images(r),
            (std::vector<std::string>{"R_~pe = \\x. like(x, golf)\n"}));
  EXPECT_EQ(r.status, SearchStatus::kExhausted);
}

TEST(Solve, CrossoverBoundReadingHasTwoSolutions) {
  Problem p = problem(std::string(kCrossover) +
                      "eq R(i_pf) = \\x:e. ex(x, i_pf, i_A);");
  SearchResult r = solve(p);
  EXPECT_EQ(images(r),
            (std::vector<std::string>{
                "R_~pf = \\x y. ex_~pf(y, x, i_~pf)\nA := ~pf\n",
                "R_~pf = \\x y. ex_~pf(y, x, x)\nA := pf\n"}));
}

TEST(Solve, CrossoverCoreferentialHasOneSolution) {
  Problem p = problem(std::string(kCrossover) +
                      "eq R(i_pf) = \\x:e. ex(x, i_~pf, i_pf);");
  SearchResult r = solve(p);
  EXPECT_EQ(images(r), (std::vector<std::string>{
                           "R_~pf = \\x y. ex_~pf(y, i_~pf, x)\n"}));
}

TEST(Solve, FocusHasOneSolution) {
  Problem p = problem(R"(
    colours pe, pf;
    types e, t;
    const l : e -> e -> t;
    const j : e;
    const s : e;
    var FSV : e -> t @ ~pf;
    eq l(j, s_pf) = FSV(s_pf);
  )");
  EXPECT_EQ(images(solve(p)),
            (std::vector<std::string>{"FSV_~pf = \\x. l(j, x)\n"}));
}

TEST(Solve, ZeroBoundReportsBoundReached) {
  Problem p = problem(R"(
    types e;
    const a : e;
    var x : e -> e;
    eq x(a) = a;
  )");
  SearchConfig config;
  config.max_bindings = 0;
  SearchResult r = solve(p, config);
  EXPECT_TRUE(r.solutions.empty());
  EXPECT_EQ(r.status, SearchStatus::kBoundReached);
  EXPECT_STREQ(status_name(r.status), "bound reached");
}

TEST(Solve, SolutionLimit) {
  Problem p = problem(R"(
    types e;
    const a : e;
    var x : e -> e;
    eq x(a) = a;
  )");
  SearchConfig config;
  config.max_solutions = 1;
  SearchResult r = solve(p, config);
  EXPECT_EQ(r.solutions.size(), 1u);
  EXPECT_EQ(r.status, SearchStatus::kSolutionLimit);
}

TEST(Solve, UnboundedProblemHitsTheBound) {
  Problem p = problem(R"(
    types e;
    const f : e -> e;
    const a : e;
    var x : e -> e;
    eq x(f(a)) = f(x(a));
  )");
  SearchConfig config;
  config.max_bindings = 4;
  config.max_solutions = 1000;
  SearchResult r = solve(p, config);
  EXPECT_EQ(r.status, SearchStatus::kBoundReached);
  EXPECT_FALSE(r.solutions.empty());
  for (const Solution& s : r.solutions) EXPECT_TRUE(validate(s, p).ok());
}

TEST(Solve, FlexFlexLeavesAPreSolution) {
  Problem p = problem(R"(
    types e;
    const a : e;
    var x : e -> e;
    var y : e -> e;
    eq x(a) = y(a);
  )");
  SearchResult r = solve(p);
  ASSERT_EQ(r.solutions.size(), 1u);
  EXPECT_TRUE(r.solutions[0].pre_solution());
  EXPECT_EQ(serialize(r.solutions[0]), "flex: x(a) = y(a)\n");
}

TEST(Solve, StrategiesAgreeOnTheSolutionSet) {
  Problem p = problem(R"(
    types e, t;
    const like : e -> e -> t;
    const dan : e;
    const golf : e;
    var R : e -> t;
    eq like(dan, golf) = R(dan);
  )");
  SearchConfig dfs;
  dfs.strategy = Strategy::kDepthFirst;
  auto a = images(solve(p));
  auto b = images(solve(p, dfs));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST(Solve, Deterministic) {
  Problem p = problem(std::string(kCrossover) +
                      "eq R(i_pf) = \\x:e. ex(x, i_pf, i_A);");
  SearchResult a = solve(p), b = solve(p);
  EXPECT_EQ(images(a), images(b));
  ASSERT_EQ(a.solutions.size(), b.solutions.size());
  for (std::size_t k = 0; k < a.solutions.size(); ++k) {
    ASSERT_EQ(a.solutions[k].trace.size(), b.solutions[k].trace.size());
    for (std::size_t j = 0; j < a.solutions[k].trace.size(); ++j) {
      EXPECT_EQ(a.solutions[k].trace[j].str(), b.solutions[k].trace[j].str());
    }
  }
}

TEST(Validate, SloppyReadingSolvesTheBoundEquation) {
  ProblemFile f = parse_problem(std::string(kCrossover) +
                                "eq R(i_pf) = \\x:e. ex(x, i_pf, i_A);");
  Expected e = parse_solution("R_~pf = \\y:e x:e. ex(x, y, y); A := pf;",
                              f.problem.signature);
  EXPECT_TRUE(validate(e.substitution, f.problem, e.constraints).ok());
}

TEST(Validate, PrimaryOccurrenceIsALegalityViolation) {
  ProblemFile f = parse_problem(R"(
    colours pe, pf;
    types e, t;
    const like : e -> e -> t;
    const dan : e;
    const golf : e;
    var R : e -> t @ ~pe;
    eq like(dan_pe, golf) = R(dan_pe);
  )");
  Expected e = parse_solution("R_~pe = \\x:e. like(dan_pe, golf);",
                              f.problem.signature);
  ValidationReport r = validate(e.substitution, f.problem);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.str().find("monochromicity"), std::string::npos) << r.str();
}

TEST(Validate, BoundVariableReadingIsBetaEtaUnequal) {
  ProblemFile f = parse_problem(std::string(kCrossover) +
                                "eq R(i_pf) = \\x:e. ex(x, i_~pf, i_pf);");
  Expected e = parse_solution("R_~pf = \\y:e x:e. ex(x, y, y);",
                              f.problem.signature);
  ValidationReport r = validate(e.substitution, f.problem);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.str().find("beta-eta inequality"), std::string::npos)
      << r.str();
}

TEST(Validate, ForbiddenConstantInImage) {
  Problem p = problem(R"(
    types e;
    var x : e;
    eq x = x;
  )");
  CSubstitution s;
  s.bind({"x", std::nullopt}, Term::constant("c1", Type::base("e")));
  ValidationReport r = validate(s, p);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.str().find("forbidden constant c1"), std::string::npos);
}

TEST(Trace, LineFormat) {
  TraceEntry t{"imitate", 0, "\\x. a", "x(a) = a"};
  EXPECT_EQ(t.str(), "RULE imitate ON 0 BINDING \\x. a ; x(a) = a");
  TraceEntry u{"delete", 2, "", "c1 = c1"};
  EXPECT_EQ(u.str(), "RULE delete ON 2 ; c1 = c1");
}

}  // namespace
}  // namespace hocu
