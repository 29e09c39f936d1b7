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

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cqgen/cq_gen.hpp"
#include "cqgen/query_gen.hpp"

namespace cqgen {

struct DatasetMeta {
  std::string rules_digest;
  std::string synonyms_digest;
  std::string manifest_digest;
  bool compat_count = false;

  bool operator==(const DatasetMeta&) const = default;
};

struct TemplatePair {
  std::string pair_id;
  std::string shape_id;
  QuestionType question_type = QuestionType::ask;
  CQTemplate cq;
  QueryTemplate query;

  bool operator==(const TemplatePair&) const = default;
};

struct Dataset {
  DatasetMeta meta;
  // Sorted by (shape id, question type, CQ text, query text).
  std::vector<TemplatePair> pairs;
  // Query templates whose bucket received no CQ template. They still count
  // in the statistics.
  std::vector<QueryTemplate> unpaired_queries;

  bool operator==(const Dataset&) const = default;
};

// "p" + 16 hex digits over (shape id, question type, CQ text, query text).
std::string make_pair_id(const std::string& shape_id, QuestionType qt,
                         const std::string& cq_text, const std::string& query_text);

// Cartesian pairing inside each (shape id, question type) bucket. A repeated
// (CQ text, query text) combination keeps its first provenance.
Dataset build_pairs(const std::vector<CQTemplate>& cqs,
                    const std::vector<QueryTemplate>& queries,
                    DatasetMeta meta = {});

// Line-delimited JSON records after a `# cqgen dataset v1 {meta}` header.
void write_dataset(const Dataset& d, std::ostream& out);
void write_dataset(const Dataset& d, const std::string& path);
// Throws ParseError naming the line.
Dataset read_dataset(std::istream& in);
Dataset read_dataset(const std::string& path);

struct ConstructCount {
  std::size_t templates = 0;
  std::size_t total = 0;

  bool operator==(const ConstructCount&) const = default;
};

struct StatsReport {
  std::size_t pairs = 0;
  std::size_t distinct_cq_templates = 0;
  std::size_t distinct_query_templates = 0;
  // Mean over distinct query texts of the number of distinct CQ texts paired
  // with each.
  double avg_cq_per_query_bucket_mean = 0;
  double avg_query_per_cq = 0;
  // distinct CQ texts / distinct query texts
  double ratio_global = 0;
  // Distinct CQ texts per question type.
  std::map<QuestionType, std::size_t> question_type_histogram;
  // Distinct query texts per question type.
  std::map<QuestionType, std::size_t> query_type_histogram;
  // CQ texts paired under more than one question type; nonzero means the
  // histogram sums to more than distinct_cq_templates.
  std::size_t cq_texts_in_multiple_types = 0;
  // Inventory order; `total` is distinct_query_templates.
  std::vector<std::pair<std::string, ConstructCount>> construct_counts;
};

StatsReport compute_stats(const Dataset& d);

// Keys match the field names above; pretty-printed, sorted keys.
std::string stats_to_json(const StatsReport& s);
// Summary, construct and question type tables.
std::string stats_to_markdown(const StatsReport& s);

}  // namespace cqgen
