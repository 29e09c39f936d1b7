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

#include <map>
#include <string>
#include <vector>

#include "cqgen/cq_gen.hpp"
#include "cqgen/dataset.hpp"
#include "cqgen/query_gen.hpp"
#include "cqgen/shape.hpp"
#include "cqgen/verbalizer.hpp"

namespace cqgen {

struct SkipRecord {
  std::string shape_id;
  // "parse", "shape", "generate"
  std::string stage;
  // Error kind, e.g. "unsupported-construct".
  std::string kind;
  std::string message;
};

struct ShapeCorpus {
  std::vector<AxiomShape> shapes;
  std::vector<SkipRecord> skipped;
  std::string manifest_digest;
};

// Shape files of `dir` in manifest.txt order, else lexicographic; the file
// stem is the shape id.
std::vector<std::string> list_shape_files(const std::string& dir);

// Parses and lifts every shape; failures are recorded, never fatal.
ShapeCorpus load_shape_corpus(const std::string& dir);

struct GenerateResult {
  Dataset dataset;
  std::vector<Verbalization> verbalizations;
  std::vector<SkipRecord> skipped;
  std::vector<std::string> warnings;
};

GenerateResult generate_dataset(const std::vector<AxiomShape>& shapes,
                                const std::vector<TransformationRule>& rules,
                                const SynonymTable& synonyms, CountSyntax count_syntax,
                                DatasetMeta meta = {});

// Tally per (stage, kind) followed by one line per skipped shape.
std::string skip_report(const std::vector<SkipRecord>& skipped);

}  // namespace cqgen
