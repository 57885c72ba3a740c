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

#include "hocu/corpus.h"

#include <exception>
#include <stdexcept>

#include "hocu/driver.h"
#include "hocu/dsl.h"

namespace hocu {

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"adverbial-coloured",
       "Tom always takes SUE to Al's mother. Yes, and he always takes Sue "
       "to JO's mother.",
       "both occurrences of the parallel element al are ps, An is ~ps",
       {"An_~ps = \\z. always(take(tom, xfoc, mother(al_ps)), "
        "take(tom, sue, mother(z)))",
        "An_~ps = \\z. always(take(tom, xfoc, mother(al_ps)), "
        "take(tom, sue, mother(al_ps)))",
        "An_~ps = \\z. always(take(tom, xfoc, mother(z)), "
        "take(tom, sue, mother(al_ps)))"}},
      {"adverbial-uncoloured",
       "the adverbial quantification equation without colours",
       "uncoloured",
       {}},
      {"clash-fails",
       "a constant coloured a cannot unify with the same constant coloured b",
       "ground colours a and b",
       {}},
      {"clash-unifies",
       "a colour variable on j unifies with the colour b",
       "ground colours a and b, colour variable A",
       {}},
      {"crossover-bound",
       "We only expected HIM to claim that he was brilliant",
       "constants ~pf, focus i_pf, the c-commanded pronoun carries a colour "
       "variable",
       {}},
      {"crossover-coreferential",
       "We only expected him to claim that HE was brilliant",
       "constants ~pf, focus i_pf, the other pronoun i_~pf",
       {"R_~pf = \\y x. ex(x, y, y)", "R_~pf = \\y x. ex(x, i_~pf, x)"}},
      {"ellipsis-coloured",
       "Dan likes golf. Peter does too.",
       "primary occurrences pe, free variables ~pe",
       {"R_~pe = \\x. like(dan_pe, golf)"}},
      {"ellipsis-uncoloured",
       "Dan likes golf. Peter does too. (no colours)",
       "uncoloured",
       {}},
      {"focus-coloured",
       "Jon likes SARAH",
       "the focus is pf, the focus semantic value ~pf",
       {"FSV_~pf = \\x. l(j, s_pf)"}},
      {"focus-uncoloured", "Jon likes SARAH (no colours)", "uncoloured",
       {}},
      {"interaction-ellipsis-focus",
       "Jon likes SARAH. Peter does too. (the ellipsis equation)",
       "j is pe, s is pf, R is ~pe; pf entails ~pe",
       {"R_~pe = \\x. l(j_pe, s_pf)"}},
      {"projection-basic", "x(a) = a", "uncoloured", {}},
      {"soe-coloured",
       "Jon only likes MARY. No, PETER only likes Mary.",
       "the parallel element j is ps, An is ~ps",
       {"An_~ps = \\z. forall(\\P:(e -> t). imp(and(in(P, setof(\\y x. "
        "like(x, y))), P(j_ps)), equal(P, \\x. like(x, m))))"}},
      {"soe-uncoloured", "the second-occurrence equation without colours",
       "uncoloured",
       {}},
      {"variant-counterexample",
       "x_c = f_c and x_d = g_d have no coloured unifier",
       "ground colours c and d on one variable",
       {}},
  };
  return entries;
}

bool CorpusSummary::ok() const {
  for (const CorpusResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

std::string CorpusSummary::str() const {
  std::string out;
  std::size_t passed = 0;
  for (const CorpusResult& r : results) {
    out += (r.passed ? "PASS " : "FAIL ") + r.id;
    if (!r.detail.empty()) out += ": " + r.detail;
    out += "\n";
    if (r.passed) ++passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(results.size()) +
         " entries passed\n";
  return out;
}

CorpusResult run_corpus_entry(const CorpusEntry& entry, const std::string& dir,
                              const SearchConfig& config) {
  CorpusResult result{entry.id, false, ""};
  try {
    ProblemFile file = read_problem(dir + "/" + entry.id + ".hocu");
    if (!file.has_expectations()) {
      result.detail = "no expect block";
      return result;
    }
    RunOptions options;
    options.config = config;
    RunReport report = run_problem(file, options);
    if (!report.expectations_met) {
      result.detail = "solution set differs from the expected set";
      return result;
    }
    for (const std::string& text : entry.rejected) {
      Expected candidate = parse_solution(text, file.problem.signature);
      ValidationReport v = validate(candidate.substitution, file.problem,
                                    candidate.constraints);
      if (v.ok()) {
        result.detail = "candidate accepted: " + text;
        return result;
      }
    }
    result.passed = true;
  } catch (const std::exception& e) {
    result.detail = e.what();
  }
  return result;
}

CorpusSummary run_corpus(const std::string& dir, const SearchConfig& config) {
  CorpusSummary summary;
  for (const CorpusEntry& entry : corpus_entries()) {
    summary.results.push_back(run_corpus_entry(entry, dir, config));
  }
  return summary;
}

namespace {

Term mark(const Term& term, const std::vector<int>& path, std::size_t at,
          const Colour& colour) {
  if (at == path.size()) {
    if (!term.is_const()) {
      throw std::invalid_argument("occurrence path does not address a "
                                  "constant: " +
                                  to_string(term));
    }
    return term.with_colour(colour);
  }
  int step = path[at];
  if (term.kind() == Term::Kind::kApp && (step == 0 || step == 1)) {
    if (step == 0) {
      return Term::app(mark(term.fn(), path, at + 1, colour), term.arg());
    }
    return Term::app(term.fn(), mark(term.arg(), path, at + 1, colour));
  }
  if (term.kind() == Term::Kind::kLam && step == 0) {
    return Term::lam(term.name(), term.binder_type(),
                     mark(term.body(), path, at + 1, colour));
  }
  throw std::invalid_argument("occurrence path leaves the term");
}

}  // namespace

Term encode_por(const Term& term, const std::vector<std::vector<int>>& paths,
                const Colour& colour) {
  Term out = term;
  for (const std::vector<int>& path : paths) out = mark(out, path, 0, colour);
  return out;
}

}  // namespace hocu
