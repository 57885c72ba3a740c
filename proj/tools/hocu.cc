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

// hocu run FILE | hocu print FILE | hocu corpus DIR

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hocu/colour.h"
#include "hocu/corpus.h"
#include "hocu/driver.h"
#include "hocu/dsl.h"

namespace {

int report_parse_error(const std::string& path, const hocu::ParseError& e) {
  std::cerr << path << ":" << e.line() << ":" << e.column() << ": "
            << hocu::kind_name(e.kind()) << " error: " << e.message() << "\n";
  return hocu::kExitParseError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order coloured unification"};
  app.require_subcommand(1);

  hocu::RunOptions options;
  std::string strategy = "iterative";
  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--max-bindings", options.config.max_bindings,
                    "Bound on general-binding depth")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-solutions", options.config.max_solutions,
                    "Stop after this many solutions")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--strategy", strategy, "Search strategy")
        ->check(CLI::IsMember({"iterative", "dfs"}));
  };

  std::string path;
  CLI::App* run = app.add_subcommand("run", "Solve a problem file");
  run->add_option("file", path, "Problem file")->required();
  add_search_flags(run);
  run->add_flag("--trace", options.trace, "Print rule applications to stderr");
  run->add_flag("--erase", options.erase, "Solve the colour-erased problem");

  CLI::App* print = app.add_subcommand("print", "Parse and pretty-print");
  print->add_option("file", path, "Problem file")->required();

  std::string dir;
  CLI::App* corpus = app.add_subcommand("corpus", "Run the example corpus");
  corpus->add_option("dir", dir, "Corpus directory")->required();
  add_search_flags(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : hocu::kExitParseError;
  }
  options.config.strategy = strategy == "dfs"
                                ? hocu::Strategy::kDepthFirst
                                : hocu::Strategy::kIterativeDeepening;

  if (*corpus) {
    hocu::CorpusSummary summary = hocu::run_corpus(dir, options.config);
    std::cout << summary.str();
    return summary.ok() ? hocu::kExitOk : hocu::kExitMismatch;
  }

  hocu::ProblemFile file;
  try {
    file = hocu::read_problem(path);
  } catch (const hocu::ParseError& e) {
    return report_parse_error(path, e);
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return hocu::kExitParseError;
  }

  if (*print) {
    std::cout << hocu::print_problem(file);
    return hocu::kExitOk;
  }

  hocu::RunReport report = hocu::run_problem(file, options);
  std::cerr << report.err;
  std::cout << report.out;
  return report.exit_code;
}
