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


#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "hocu/colour.h"
#include "hocu/corpus.h"
#include "hocu/dsl.h"
#include "hocu/kernel.h"
#include "hocu/unifier.h"

namespace hocu {
namespace {

ProblemFile load(const std::string& id) {
  return read_problem(std::string(HOCU_CORPUS_DIR) + "/" + id + ".hocu");
}

void BM_SolveCorpusEntry(benchmark::State& state, const std::string& id) {
  ProblemFile file = load(id);
  for (auto _ : state) {
    SearchResult result = solve(file.problem);
    benchmark::DoNotOptimize(result.solutions.size());
  }
}

BENCHMARK_CAPTURE(BM_SolveCorpusEntry, ellipsis, std::string("ellipsis-coloured"));
BENCHMARK_CAPTURE(BM_SolveCorpusEntry, focus, std::string("focus-coloured"));
BENCHMARK_CAPTURE(BM_SolveCorpusEntry, crossover, std::string("crossover-bound"));
BENCHMARK_CAPTURE(BM_SolveCorpusEntry, soe, std::string("soe-coloured"));
BENCHMARK_CAPTURE(BM_SolveCorpusEntry, adverbial, std::string("adverbial-coloured"));

void BM_SolveWholeCorpus(benchmark::State& state) {
  std::vector<ProblemFile> files;
  for (const CorpusEntry& entry : corpus_entries()) files.push_back(load(entry.id));
  for (auto _ : state) {
    for (const ProblemFile& f : files) {
      benchmark::DoNotOptimize(solve(f.problem).solutions.size());
    }
  }
}
BENCHMARK(BM_SolveWholeCorpus);

// (\x. f(x, x)) applied n times to a nested redex.
void BM_Normalize(benchmark::State& state) {
  ProblemFile file = parse_problem(
      "types e;\nconst a : e;\nconst f : e -> e -> e;\n");
  std::string text = "a";
  for (int i = 0; i < state.range(0); ++i) {
    text = "(\\x:e. f(x, x)) (" + text + ")";
  }
  Term t = parse_term(text, file.problem.signature);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(t));
}
BENCHMARK(BM_Normalize)->Arg(4)->Arg(8)->Arg(12);

// A chain A1 |= A2 |= ... over a four-colour alphabet.
void BM_SolveStore(benchmark::State& state) {
  ColourAlphabet alphabet({"a", "b", "c", "d"});
  ColourStore store;
  for (int i = 1; i < state.range(0); ++i) {
    Colour lhs = Colour::variable("A" + std::to_string(i));
    Colour rhs = Colour::disj(Colour::variable("A" + std::to_string(i + 1)),
                              Colour::constant("a"));
    store = *assert_entailment(lhs, rhs, store, alphabet);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_store(store, alphabet).size());
  }
}
BENCHMARK(BM_SolveStore)->Arg(2)->Arg(4)->Arg(6);

}  // namespace
}  // namespace hocu

BENCHMARK_MAIN();
