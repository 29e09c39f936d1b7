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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cqgen/dataset.hpp"
#include "cqgen/placeholder.hpp"
#include "cqgen/query_gen.hpp"

namespace cqgen {

struct CanonicalQueryForm {
  std::string text;
  // Unset when the projected variable sits somewhere no template targets.
  std::optional<QuestionType> question_type;
  // Placeholder kinds in numbering order.
  std::vector<PlaceholderKind> placeholder_signature;
  // Facts used to tag misses.
  bool uses_union = false;
  bool uses_disjoint_with = false;
  std::size_t auxiliary_variables = 0;
  std::size_t target_occurrences = 0;
};

// Throws ParseError when the query is outside the supported subset and
// PreconditionError for projections of more than one variable.
CanonicalQueryForm canonicalize_query(std::string_view query);

// Slot tokens of `cq_template` (C1, OP2, ...) match 1 to `max_span` words.
bool match_cq(std::string_view cq, std::string_view cq_template, std::size_t max_span = 6);

enum class MissCategory {
  aux_variables,
  union_keyword,
  disjoint_with,
  nested_target,
  multi_projection,
  constrained_target,  // the projected variable is used more than once
  parse_error,
  other,
};

const char* to_string(MissCategory c) noexcept;

struct UncoveredItem {
  enum class Kind { query, cq };
  Kind kind = Kind::query;
  std::string text;
  MissCategory category = MissCategory::other;
  // Nearest template and its token edit distance, or the parse message.
  std::string diagnostic;
};

struct CoverageReport {
  std::size_t total_queries = 0;
  std::size_t covered_queries = 0;
  std::size_t total_cqs = 0;
  std::size_t covered_cqs = 0;
  std::vector<UncoveredItem> uncovered_items;
};

struct CoverageOptions {
  std::size_t max_span = 6;
};

CoverageReport coverage_report(const Dataset& d, const std::vector<std::string>& queries,
                               const std::vector<std::string>& cqs,
                               const CoverageOptions& options = {});

std::string coverage_to_json(const CoverageReport& r);
std::string coverage_summary(const CoverageReport& r);

// Queries from a file (blank-line separated) or a directory of `.rq` files.
std::vector<std::string> load_queries(const std::string& path);
// One question per nonempty line.
std::vector<std::string> load_cqs(const std::string& path);

}  // namespace cqgen
