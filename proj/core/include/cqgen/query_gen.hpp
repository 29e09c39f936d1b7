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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cqgen/placeholder.hpp"
#include "cqgen/shape.hpp"
#include "cqgen/verbalizer.hpp"

namespace cqgen {

// Declaration order is the output order of every generator.
enum class QuestionType {
  ask,
  select_lhs,
  select_rhs,
  select_verb,
  count_lhs,
  count_rhs,
  count_verb,
};

inline constexpr QuestionType kAllQuestionTypes[] = {
    QuestionType::ask,       QuestionType::select_lhs, QuestionType::select_rhs,
    QuestionType::select_verb, QuestionType::count_lhs, QuestionType::count_rhs,
    QuestionType::count_verb};

// "ASK", "SELECT_LHS", ...
const char* to_string(QuestionType qt) noexcept;
std::optional<QuestionType> question_type_from_string(std::string_view s);

bool is_count(QuestionType qt) noexcept;
// SELECT_* and COUNT_* share targets; ASK has none.
enum class QueryTarget { none, lhs, rhs, verb };
QueryTarget target_of(QuestionType qt) noexcept;

struct QueryTemplate {
  std::string shape_id;
  QuestionType question_type = QuestionType::ask;
  std::string text;
  std::vector<PlaceholderId> slots;

  bool operator==(const QueryTemplate&) const = default;
};

enum class CountSyntax {
  standard,  // SELECT (COUNT(?x) AS ?n)
  compat,    // SELECT COUNT(?x)
};

std::vector<QuestionType> eligible_question_types(const AxiomShape& shape,
                                                  const Segmentation& seg);

// Throws PreconditionError when `qt` is not eligible for the shape.
QueryTemplate generate_query_template(const AxiomShape& shape, QuestionType qt,
                                      CountSyntax count_syntax);

// One template per eligible question type, in QuestionType order.
std::vector<QueryTemplate> generate_query_templates(const AxiomShape& shape,
                                                    CountSyntax count_syntax);

}  // namespace cqgen
