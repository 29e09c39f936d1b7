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

#include "cqgen/rdf.hpp"

#include <algorithm>
#include <string>

#include "cqgen/errors.hpp"

namespace cqgen {

namespace {
std::string with_position(const std::string& message, std::size_t line,
                          std::size_t column) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) +
         ": " + message;
}
}  // namespace

ParseError::ParseError(Kind kind, std::string message, std::size_t line,
                       std::size_t column)
    : Error(with_position(message, line, column)),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(std::move(message)) {}

ShapeError::ShapeError(Kind kind, std::string message)
    : Error(std::move(message)), kind_(kind) {}

const char* to_string(ParseError::Kind kind) noexcept {
  switch (kind) {
    case ParseError::Kind::syntax: return "syntax error";
    case ParseError::Kind::unknown_prefix: return "unknown prefix";
    case ParseError::Kind::unsupported_feature: return "unsupported feature";
  }
  return "parse error";
}

const char* to_string(ShapeError::Kind kind) noexcept {
  switch (kind) {
    case ShapeError::Kind::no_axiom: return "no class axiom";
    case ShapeError::Kind::multiple_axioms: return "multiple class axioms";
    case ShapeError::Kind::unsupported_construct: return "unsupported construct";
    case ShapeError::Kind::dangling_blank_node: return "dangling blank node";
    case ShapeError::Kind::malformed_expression: return "malformed expression";
  }
  return "shape error";
}

}  // namespace cqgen

namespace cqgen::rdf {

namespace vocab {
std::string rdf(std::string_view local) { return std::string(ns::rdf) + std::string(local); }
std::string rdfs(std::string_view local) { return std::string(ns::rdfs) + std::string(local); }
std::string owl(std::string_view local) { return std::string(ns::owl) + std::string(local); }
std::string xsd(std::string_view local) { return std::string(ns::xsd) + std::string(local); }

const std::string rdf_type = rdf("type");
const std::string rdf_first = rdf("first");
const std::string rdf_rest = rdf("rest");
const std::string rdf_nil = rdf("nil");
const std::string rdfs_label = rdfs("label");
const std::string rdfs_sub_class_of = rdfs("subClassOf");
const std::string rdfs_range = rdfs("range");
const std::string rdfs_datatype = rdfs("Datatype");
const std::string owl_class = owl("Class");
const std::string owl_equivalent_class = owl("equivalentClass");
const std::string owl_restriction = owl("Restriction");
const std::string owl_object_property = owl("ObjectProperty");
const std::string owl_datatype_property = owl("DatatypeProperty");
const std::string owl_named_individual = owl("NamedIndividual");
const std::string owl_on_property = owl("onProperty");
const std::string owl_some_values_from = owl("someValuesFrom");
const std::string owl_all_values_from = owl("allValuesFrom");
const std::string owl_has_value = owl("hasValue");
const std::string owl_qualified_cardinality = owl("qualifiedCardinality");
const std::string owl_max_qualified_cardinality = owl("maxQualifiedCardinality");
const std::string owl_min_cardinality = owl("minCardinality");
const std::string owl_on_class = owl("onClass");
const std::string owl_on_data_range = owl("onDataRange");
const std::string owl_intersection_of = owl("intersectionOf");
const std::string owl_union_of = owl("unionOf");
const std::string owl_complement_of = owl("complementOf");
const std::string xsd_integer = xsd("integer");
}  // namespace vocab

Term Term::iri(std::string value) {
  return Term{TermKind::iri, std::move(value), {}, {}};
}

Term Term::blank(std::string label) {
  return Term{TermKind::blank, std::move(label), {}, {}};
}

Term Term::literal(std::string lexical, std::string datatype,
                   std::string language) {
  return Term{TermKind::literal, std::move(lexical), std::move(datatype),
              std::move(language)};
}

Term Term::variable(std::string name) {
  return Term{TermKind::variable, std::move(name), {}, {}};
}

std::string Term::to_string() const {
  switch (kind) {
    case TermKind::iri: return "<" + value + ">";
    case TermKind::blank: return "_:" + value;
    case TermKind::variable: return "?" + value;
    case TermKind::literal: {
      std::string out = "\"" + value + "\"";
      if (!language.empty()) out += "@" + language;
      if (!datatype.empty()) out += "^^<" + datatype + ">";
      return out;
    }
  }
  return value;
}

bool Graph::add(Triple triple) {
  if (!index_.insert(triple).second) return false;
  triples_.push_back(std::move(triple));
  return true;
}

bool Graph::add(Term subject, Term predicate, Term object) {
  return add(Triple{std::move(subject), std::move(predicate), std::move(object)});
}

bool Graph::contains(const Triple& triple) const {
  return index_.count(triple) != 0;
}

void Graph::bind_prefix(std::string prefix, std::string namespace_iri) {
  for (auto& [p, iri] : prefixes_) {
    if (p == prefix) {
      iri = std::move(namespace_iri);
      return;
    }
  }
  prefixes_.emplace_back(std::move(prefix), std::move(namespace_iri));
}

std::optional<std::string> Graph::namespace_of(std::string_view prefix) const {
  for (const auto& [p, iri] : prefixes_) {
    if (p == prefix) return iri;
  }
  return std::nullopt;
}

std::vector<Term> Graph::objects(const Term& subject,
                                 std::string_view predicate) const {
  std::vector<Term> out;
  for (const auto& t : triples_) {
    if (t.subject == subject && t.predicate.is_iri() &&
        t.predicate.value == predicate)
      out.push_back(t.object);
  }
  return out;
}

const PrefixMap& builtin_prefixes() {
  static const PrefixMap prefixes = {
      {"rdf", std::string(ns::rdf)},
      {"rdfs", std::string(ns::rdfs)},
      {"owl", std::string(ns::owl)},
      {"xsd", std::string(ns::xsd)},
  };
  return prefixes;
}

bool is_reserved_iri(std::string_view iri) {
  for (const auto& [_, ns] : builtin_prefixes()) {
    if (iri.substr(0, ns.size()) == ns) return true;
  }
  return false;
}

std::string_view local_name(std::string_view iri) {
  auto pos = iri.find_last_of("#/:");
  return pos == std::string_view::npos ? iri : iri.substr(pos + 1);
}

}  // namespace cqgen::rdf
