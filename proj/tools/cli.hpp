// Copyright 2026 The cqgen Authors.
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cqgen::cli {

enum class Command { generate, materialize, stats, coverage, verbalize };

struct RunConfig {
  Command command = Command::generate;
  std::string shapes;
  std::string rules;
  std::string synonyms;
  std::string out;
  std::string dataset;
  std::string ontology;
  std::string verbs;
  std::string queries;
  std::string cqs;
  std::string report;
  std::string markdown;
  bool compat_count = false;
  std::uint64_t seed = 0;
  std::size_t limit = 10;
};

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kInvariant = 3,
};

// Returns the config, or the exit code after printing help or a usage error.
struct Parsed {
  std::optional<RunConfig> config;
  int exit_code = kOk;
};
Parsed parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cqgen::cli
