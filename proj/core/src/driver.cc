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

#include "hocu/driver.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hocu/kernel.h"

namespace hocu {

Problem erase_problem(const Problem& problem) {
  const Signature& sig = problem.signature;
  Problem out;
  out.signature.set_alphabet(sig.alphabet());
  for (const std::string& b : sig.base_types()) out.signature.add_base_type(b);
  for (const SymbolDecl& d : sig.constants()) {
    out.signature.add_constant({d.name, d.type, std::nullopt});
  }
  for (const SymbolDecl& d : sig.variables()) {
    out.signature.add_variable({d.name, d.type, std::nullopt});
  }
  for (const TermEquation& eq : problem.equations) {
    out.equations.push_back(TermEquation{erase(eq.lhs), erase(eq.rhs), false});
  }
  return out;
}

std::string canonical_form(const Expected& expected, const Problem& problem) {
  return canonical_form(expected.substitution, expected.constraints,
                        problem_colour_variables(problem),
                        problem.signature.alphabet());
}

std::string canonical_form(const Solution& solution, const Problem& problem) {
  return canonical_form(solution.substitution, solution.constraints,
                        problem_colour_variables(problem),
                        problem.signature.alphabet());
}

namespace {

std::string indent(const std::string& block) {
  std::string out;
  std::size_t start = 0;
  while (start < block.size()) {
    std::size_t end = block.find('\n', start);
    if (end == std::string::npos) end = block.size();
    out += "  " + block.substr(start, end - start) + "\n";
    start = end + 1;
  }
  return out;
}

}  // namespace

RunReport run_problem(const ProblemFile& file, const RunOptions& options) {
  RunReport report;
  Problem problem = options.erase ? erase_problem(file.problem) : file.problem;

  report.status = solve(problem, options.config, [&](const Solution& s) {
    report.solutions.push_back(s);
    std::size_t n = report.solutions.size();
    report.out += std::string(s.pre_solution() ? "pre-solution " : "solution ") +
                  std::to_string(n) + "\n";
    std::string body = serialize(s);
    report.out += body.empty() ? "  (empty substitution)\n" : indent(body);
    if (options.trace) {
      report.err += "SOLUTION " + std::to_string(n) + "\n";
      for (const TraceEntry& t : s.trace) report.err += t.str() + "\n";
    }
  });

  std::size_t count = report.solutions.size();
  std::string summary =
      count == 0 ? "no solutions"
                 : std::to_string(count) + (count == 1 ? " solution" : " solutions");
  report.out += summary + " (" + status_name(report.status) + ")\n";

  if (!file.has_expectations() || options.erase) {
    if (file.has_expectations()) {
      report.out += "expectations not checked on the erased problem\n";
    }
    report.exit_code = count == 0 && report.status == SearchStatus::kBoundReached
                           ? kExitBoundReached
                           : kExitOk;
    return report;
  }

  report.expectations_checked = true;
  // canonical form -> text shown in a mismatch report
  std::map<std::string, std::string> wanted;
  for (const Expected& e : file.expected) {
    std::string text = serialize(e.substitution);
    for (const Entailment& c : e.constraints) {
      text += c.annotation.str() + " |= " + c.bound.str() + "\n";
    }
    wanted.try_emplace(canonical_form(e, problem), text);
  }
  std::map<std::string, std::string> got;
  for (const Solution& s : report.solutions) {
    std::string c = canonical_form(s, problem);
    for (const TermEquation& r : s.residual) {
      c += "flex: " + to_string(r.lhs) + " = " + to_string(r.rhs) + "\n";
    }
    got.try_emplace(c, serialize(s));
  }
  report.expectations_met =
      wanted.size() == got.size() &&
      std::equal(wanted.begin(), wanted.end(), got.begin(),
                 [](const auto& a, const auto& b) { return a.first == b.first; });
  if (report.expectations_met) {
    report.out += "expectations met\n";
    report.exit_code = kExitOk;
    return report;
  }
  report.out += "expectation mismatch\n";
  for (const auto& [key, text] : wanted) {
    if (!got.contains(key)) report.out += "missing:\n" + indent(text);
  }
  for (const auto& [key, text] : got) {
    if (!wanted.contains(key)) report.out += "unexpected:\n" + indent(text);
  }
  report.exit_code = report.status == SearchStatus::kBoundReached
                         ? kExitBoundReached
                         : kExitMismatch;
  return report;
}

}  // namespace hocu
