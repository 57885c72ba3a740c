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

#include <iostream>

#include "hocu/dsl.h"
#include "hocu/unifier.h"

int main() {
  hocu::ProblemFile f = hocu::parse_problem(R"(
    types e;
    const a : e;
    var x : e -> e;
    eq x(a) = a;
  )");
  hocu::SearchResult r = hocu::solve(f.problem);
  for (const hocu::Solution& s : r.solutions) std::cout << serialize(s);
  return r.solutions.size() == 2 ? 0 : 1;
}
