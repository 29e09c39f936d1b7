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

#include "cqgen/placeholder.hpp"
#include "cqgen/shape.hpp"

namespace cqgen {

enum class RelationClass { SPO, SS };

const char* to_string(RelationClass rc) noexcept;
std::optional<RelationClass> relation_class_from_string(std::string_view s);

// {LHS} {VERB} {RHS} split of a verbalization.
struct Segmentation {
  std::string lhs_text;
  std::string verb_text;
  std::string rhs_text;
  bool verb_is_property = false;
  std::optional<PlaceholderId> verb_property;
  bool lhs_is_named = false;
  bool rhs_target_is_named = false;
  std::optional<PlaceholderId> rhs_target;

  bool operator==(const Segmentation&) const = default;
};

struct Verbalization {
  std::string shape_id;
  std::string text;
  Segmentation segmentation;
  RelationClass relation_class = RelationClass::SS;
  AxiomKind axiom_kind = AxiomKind::sub_class_of;

  bool operator==(const Verbalization&) const = default;
};

// Controlled-English rendering of a shape. The verb is the property of a
// top-level RHS restriction, otherwise the copula "is".
Verbalization verbalize(const AxiomShape& shape);

// "Every C1 OP1 a C2" -> "Every C1 is something that OP1 a C2".
// Throws PreconditionError on an SS verbalization.
Verbalization spo_to_ss(const Verbalization& v);

RelationClass classify_relation(const Verbalization& v);

// `shapeId TAB text TAB relationClass`
std::string debug_line(const Verbalization& v);

// Noun phrase of a class expression, exposed for tests and diagnostics.
std::string noun_phrase(const ClassExpression& expr, bool object_position);

}  // namespace cqgen
