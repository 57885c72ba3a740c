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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "hocu/csubst.h"
#include "hocu/driver.h"
#include "hocu/dsl.h"
#include "hocu/unifier.h"
#include "support/support.h"

namespace hocu {
namespace {

TEST(RandomMatching, SoundErasureSoundAndDeterministic) {
  std::mt19937 rng(1996);
  SearchConfig config;
  config.max_solutions = 1000;
  int solved = 0;
  for (int n = 0; n < 200; ++n) {
    std::string text = testing::random_matching_problem(rng);
    SCOPED_TRACE(text);
    ProblemFile file = parse_problem(text);

    RunOptions options;
    options.config = config;
    RunReport first;
    try {
      first = run_problem(file, options);
    } catch (const std::logic_error& e) {
      ADD_FAILURE() << e.what();
      continue;
    }
    RunReport second = run_problem(file, options);
    EXPECT_EQ(first.out, second.out);

    for (const Solution& s : first.solutions) {
      EXPECT_TRUE(validate(s, file.problem).ok())
          << validate(s, file.problem).str();
    }

    options.erase = true;
    RunReport erased = run_problem(file, options);
    for (const Solution& s : first.solutions) {
      auto image = testing::erased_images(s);
      bool found = false;
      for (const Solution& u : erased.solutions) {
        if (testing::erased_images(u) == image) found = true;
      }
      EXPECT_TRUE(found) << serialize(s);
    }
    if (!first.solutions.empty()) ++solved;
  }
  // The generator plants the argument in the right-hand side, so most
  // problems have a coloured solution; a handful lose theirs to clashes.
  EXPECT_GT(solved, 100);
}

}  // namespace
}  // namespace hocu
