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

// Shared helpers for the unit and acceptance binaries.

#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "cqgen/cq_gen.hpp"
#include "cqgen/pipeline.hpp"
#include "cqgen/rdf.hpp"
#include "cqgen/shape.hpp"
#include "cqgen/text.hpp"

namespace cqgen::testing {

inline std::filesystem::path source_dir() { return CQGEN_SOURCE_DIR; }
inline std::filesystem::path data_dir() { return source_dir() / "data"; }
inline std::filesystem::path shapes_dir() { return data_dir() / "shapes"; }

inline std::string slurp(const std::filesystem::path& p) { return text::read_file(p.string()); }

inline void spit(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<unsigned> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("cqgen-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline constexpr const char* kPrefix = "@prefix ex: <http://example.ns#> .\n";

inline AxiomShape shape_from(const std::string& turtle, const std::string& id = "s") {
  return extract_axiom_shape(rdf::parse_turtle(turtle), id);
}

inline AxiomShape shipped_shape(const std::string& id) {
  return shape_from(slurp(shapes_dir() / (id + ".ttl")), id);
}

inline std::vector<TransformationRule> shipped_rules() {
  return parse_rules(slurp(data_dir() / "rules.cfg"));
}

inline SynonymTable shipped_synonyms() { return parse_synonyms(slurp(data_dir() / "synonyms.cfg")); }

// Shipped shapes, rules and synonyms through the whole generator.
inline const GenerateResult& shipped_generation() {
  static const GenerateResult result = [] {
    auto corpus = load_shape_corpus(shapes_dir().string());
    return generate_dataset(corpus.shapes, shipped_rules(), shipped_synonyms(),
                            CountSyntax::standard);
  }();
  return result;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

inline CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cqgen");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  auto parsed = cli::parse_args(static_cast<int>(argv.size()), argv.data(), out, err);
  r.code = parsed.config ? cli::run(*parsed.config, out, err) : parsed.exit_code;
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace cqgen::testing
