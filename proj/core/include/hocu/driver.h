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

#ifndef HOCU_DRIVER_H_
#define HOCU_DRIVER_H_

#include <string>
#include <vector>

#include "hocu/dsl.h"
#include "hocu/unifier.h"

namespace hocu {

enum ExitCode {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitParseError = 2,
  kExitBoundReached = 3,
};

struct RunOptions {
  SearchConfig config;
  bool trace = false;
  // Solve the colour-erased problem instead; expectations are not checked.
  bool erase = false;
};

struct RunReport {
  int exit_code = kExitOk;
  SearchStatus status = SearchStatus::kExhausted;
  std::vector<Solution> solutions;
  bool expectations_checked = false;
  bool expectations_met = false;
  std::string out;  // report for stdout
  std::string err;  // trace for stderr
};

RunReport run_problem(const ProblemFile& file, const RunOptions& options = {});

// The same problem with every annotation and default colour removed.
Problem erase_problem(const Problem& problem);

// Comparison keys for expectations and emitted solutions.
std::string canonical_form(const Expected& expected, const Problem& problem);
std::string canonical_form(const Solution& solution, const Problem& problem);

}  // namespace hocu

#endif  // HOCU_DRIVER_H_
