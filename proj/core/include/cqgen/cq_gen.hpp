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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cqgen/placeholder.hpp"
#include "cqgen/query_gen.hpp"
#include "cqgen/shape.hpp"
#include "cqgen/verbalizer.hpp"

namespace cqgen {

struct TransformationRule {
  std::string id;
  RelationClass relation_class = RelationClass::SPO;
  AxiomKind axiom_kind = AxiomKind::sub_class_of;
  QuestionType question_type = QuestionType::ask;
  std::string pattern;
  // SS rule that also fires on spo_to_ss of SPO verbalizations
  // (`rewrite = spo_to_ss`).
  bool rewrite_spo = false;
  std::size_t line = 0;

  bool operator==(const TransformationRule&) const = default;
};

// marker name -> surface forms, in file order.
struct SynonymTable {
  std::map<std::string, std::vector<std::string>> sets;

  bool contains(const std::string& marker) const { return sets.count(marker) != 0; }
};

struct CQTemplate {
  std::string shape_id;
  QuestionType question_type = QuestionType::ask;
  RelationClass relation_class = RelationClass::SPO;
  AxiomKind axiom_kind = AxiomKind::sub_class_of;
  std::string text;
  std::string rule_id;
  std::map<std::string, std::string> synonym_choices;
  std::vector<PlaceholderId> slots;

  bool operator==(const CQTemplate&) const = default;
};

// Throws ParseError with the offending line.
std::vector<TransformationRule> parse_rules(std::string_view document);
SynonymTable parse_synonyms(std::string_view document);

// Marker names ("What" for "[What]") in first-occurrence order.
std::vector<std::string> markers_of(std::string_view pattern);

// Throws ParseError naming the rule when a pattern uses an undeclared marker.
void check_markers(const std::vector<TransformationRule>& rules,
                   const SynonymTable& synonyms);

struct RuleApplication {
  std::vector<CQTemplate> templates;
  std::vector<std::string> warnings;
};

// Unexpanded templates (markers kept) for one question type.
RuleApplication apply_rules(const Verbalization& v, QuestionType qt,
                            const std::vector<TransformationRule>& rules);

// Cartesian expansion of the markers of `t`. The leftmost marker varies
// fastest; a marker used twice takes the same form at both places.
// Throws PreconditionError on an undeclared marker.
std::vector<CQTemplate> expand_synonyms(const CQTemplate& t,
                                        const SynonymTable& synonyms);

}  // namespace cqgen
