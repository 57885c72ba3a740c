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

// The linguistic example corpus. Each entry names a file `<id>.hocu` in the
// corpus directory whose expect block holds the linguistically valid
// solutions, plus candidates that must be rejected.

#ifndef HOCU_CORPUS_H_
#define HOCU_CORPUS_H_

#include <string>
#include <vector>

#include "hocu/colour.h"
#include "hocu/term.h"
#include "hocu/unifier.h"

namespace hocu {

struct CorpusEntry {
  std::string id;
  std::string phenomenon;
  // How primary occurrences and free variables are coloured.
  std::string convention;
  // Expect-block syntax, e.g. `R_~pe = \x. like(dan_pe, golf);`. validate
  // must reject each of these.
  std::vector<std::string> rejected;
};

// Fixed order, sorted by id.
const std::vector<CorpusEntry>& corpus_entries();

struct CorpusResult {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct CorpusSummary {
  std::vector<CorpusResult> results;
  bool ok() const;
  std::string str() const;
};

CorpusResult run_corpus_entry(const CorpusEntry& entry, const std::string& dir,
                              const SearchConfig& config = {});
CorpusSummary run_corpus(const std::string& dir,
                         const SearchConfig& config = {});

// Annotates the constant occurrences at `paths` with `colour`. A path walks
// from the root: for an application 0 is the function and 1 the argument,
// for an abstraction 0 is the body. Throws std::invalid_argument when a path
// does not end at a constant.
Term encode_por(const Term& term, const std::vector<std::vector<int>>& paths,
                const Colour& colour);

}  // namespace hocu

#endif  // HOCU_CORPUS_H_
