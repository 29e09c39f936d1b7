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
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "cqgen/placeholder.hpp"
#include "cqgen/rdf.hpp"

namespace cqgen {

// Copyable owning pointer, used to close the recursion of ClassExpression.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

struct ClassExpression;

enum class AxiomKind { sub_class_of, equivalent_class };

enum class ConstraintKind {
  some_values_from,
  all_values_from,
  has_value,
  qualified_cardinality,
  max_qualified_cardinality,
  min_cardinality,
};

const char* to_string(AxiomKind kind) noexcept;
const char* to_string(ConstraintKind kind) noexcept;
// Full OWL IRI of the predicate carrying the constraint.
const std::string& constraint_predicate(ConstraintKind kind);

// What fills a restriction:
//   monostate        - nothing (minCardinality)
//   PlaceholderId    - an individual (I) or a datatype (DT)
//   rdf::Term        - a literal (data hasValue)
//   Box<ClassExpr>   - a class expression
using Filler =
    std::variant<std::monostate, PlaceholderId, rdf::Term, Box<ClassExpression>>;

struct NamedClass {
  PlaceholderId id;
  bool operator==(const NamedClass&) const = default;
};

struct Restriction {
  PlaceholderId property;
  ConstraintKind constraint = ConstraintKind::some_values_from;
  unsigned cardinality = 0;
  Filler filler;

  bool is_data() const noexcept { return property.kind == PlaceholderKind::DP; }
  bool operator==(const Restriction& other) const;
};

struct Intersection {
  std::vector<ClassExpression> operands;
  bool operator==(const Intersection& other) const;
};

struct Union {
  std::vector<ClassExpression> operands;
  bool operator==(const Union& other) const;
};

struct Complement {
  Box<ClassExpression> operand;
  bool operator==(const Complement& other) const;
};

struct ClassExpression {
  std::variant<NamedClass, Restriction, Intersection, Union, Complement> node;

  bool is_named() const noexcept { return std::holds_alternative<NamedClass>(node); }
  bool is_restriction() const noexcept {
    return std::holds_alternative<Restriction>(node);
  }
  const NamedClass* named() const { return std::get_if<NamedClass>(&node); }
  const Restriction* restriction() const { return std::get_if<Restriction>(&node); }

  bool operator==(const ClassExpression&) const = default;
};

ClassExpression named(PlaceholderKind kind, unsigned number);
ClassExpression named(PlaceholderId id);

struct AxiomShape {
  std::string id;
  AxiomKind kind = AxiomKind::sub_class_of;
  ClassExpression lhs;
  ClassExpression rhs;
  rdf::Graph source_graph;
};

// Removes `X rdf:type T` for placeholder IRIs X and T one of owl:Class,
// owl:ObjectProperty, owl:DatatypeProperty, owl:NamedIndividual.
rdf::Graph strip_declarations(const rdf::Graph& graph);

// Lifts the single class axiom of `graph`. Throws ShapeError.
AxiomShape extract_axiom_shape(const rdf::Graph& graph, std::string id);

// Renumbers placeholders by first occurrence (LHS before RHS, depth first,
// restriction property before filler), rewriting the source graph too.
AxiomShape canonicalize_placeholders(const AxiomShape& shape);

// Every placeholder occurrence in canonical traversal order.
std::vector<PlaceholderId> placeholder_occurrences(const AxiomShape& shape);
std::vector<PlaceholderId> placeholder_occurrences(const ClassExpression& expr);

using ConstructCounts = std::map<std::string, unsigned>;

// The OWL/RDFS constructs tallied per shape and per query template, as
// prefixed names ("owl:someValuesFrom").
const std::vector<std::string>& construct_inventory();

ConstructCounts expression_constructs(const ClassExpression& expr);
ConstructCounts shape_constructs(const AxiomShape& shape);

// Builds the Turtle graph of an AST, with declarations for every placeholder
// (the form shapes are published in).
rdf::Graph shape_to_graph(AxiomKind kind, const ClassExpression& lhs,
                          const ClassExpression& rhs);

}  // namespace cqgen
