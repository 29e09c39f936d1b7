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

#include "cqgen/query_gen.hpp"

#include <algorithm>

#include "cqgen/errors.hpp"
#include "cqgen/text.hpp"

namespace cqgen {

namespace {

struct QtName {
  QuestionType qt;
  const char* name;
};

constexpr QtName kNames[] = {
    {QuestionType::ask, "ASK"},
    {QuestionType::select_lhs, "SELECT_LHS"},
    {QuestionType::select_rhs, "SELECT_RHS"},
    {QuestionType::select_verb, "SELECT_VERB"},
    {QuestionType::count_lhs, "COUNT_LHS"},
    {QuestionType::count_rhs, "COUNT_RHS"},
    {QuestionType::count_verb, "COUNT_VERB"},
};

bool is_axiom_predicate(const rdf::Term& p) {
  return p.is_iri() && (p.value == rdf::vocab::rdfs_sub_class_of ||
                        p.value == rdf::vocab::owl_equivalent_class);
}

const rdf::Triple& axiom_triple(const rdf::Graph& g) {
  for (const auto& t : g.triples()) {
    if (is_axiom_predicate(t.predicate)) return t;
  }
  throw InvariantError("query body has no class axiom");
}

// Position of the triple term to replace with ?x.
struct TargetSite {
  const rdf::Triple* triple = nullptr;
  bool subject = false;
};

TargetSite find_target(const rdf::Graph& body, const AxiomShape& shape,
                       QueryTarget target) {
  const rdf::Triple& axiom = axiom_triple(body);
  switch (target) {
    case QueryTarget::none:
      return {};
    case QueryTarget::lhs:
      return {&axiom, true};
    case QueryTarget::rhs:
      if (!shape.rhs.is_restriction()) return {&axiom, false};
      {
        const Restriction& r = *shape.rhs.restriction();
        std::string pred = constraint_predicate(r.constraint);
        if (r.constraint == ConstraintKind::qualified_cardinality ||
            r.constraint == ConstraintKind::max_qualified_cardinality) {
          pred = rdf::vocab::owl_on_class;
        }
        for (const auto& t : body.triples()) {
          if (t.subject == axiom.object && t.predicate.value == pred) return {&t, false};
        }
      }
      break;
    case QueryTarget::verb:
      for (const auto& t : body.triples()) {
        if (t.subject == axiom.object &&
            t.predicate.value == rdf::vocab::owl_on_property) {
          return {&t, false};
        }
      }
      break;
  }
  throw InvariantError("shape '" + shape.id + "' has no site for the query target");
}

std::string projection(QuestionType qt, CountSyntax syntax) {
  if (qt == QuestionType::ask) return "ASK WHERE {";
  if (!is_count(qt)) return "SELECT ?x WHERE {";
  return syntax == CountSyntax::compat ? "SELECT COUNT(?x) WHERE {"
                                      : "SELECT (COUNT(?x) AS ?n) WHERE {";
}

}  // namespace

const char* to_string(QuestionType qt) noexcept {
  for (const auto& n : kNames) {
    if (n.qt == qt) return n.name;
  }
  return "?";
}

std::optional<QuestionType> question_type_from_string(std::string_view s) {
  for (const auto& n : kNames) {
    if (s == n.name) return n.qt;
  }
  return std::nullopt;
}

bool is_count(QuestionType qt) noexcept {
  return qt == QuestionType::count_lhs || qt == QuestionType::count_rhs ||
         qt == QuestionType::count_verb;
}

QueryTarget target_of(QuestionType qt) noexcept {
  switch (qt) {
    case QuestionType::ask: return QueryTarget::none;
    case QuestionType::select_lhs:
    case QuestionType::count_lhs: return QueryTarget::lhs;
    case QuestionType::select_rhs:
    case QuestionType::count_rhs: return QueryTarget::rhs;
    case QuestionType::select_verb:
    case QuestionType::count_verb: return QueryTarget::verb;
  }
  return QueryTarget::none;
}

std::vector<QuestionType> eligible_question_types(const AxiomShape& shape,
                                                  const Segmentation& seg) {
  bool verb = false;
  if (seg.verb_is_property && seg.verb_property) {
    unsigned n = 0;
    for (const auto& id : placeholder_occurrences(shape)) {
      if (id == *seg.verb_property) ++n;
    }
    verb = n == 1;
  }
  std::vector<QuestionType> out;
  for (QuestionType qt : kAllQuestionTypes) {
    switch (target_of(qt)) {
      case QueryTarget::none: out.push_back(qt); break;
      case QueryTarget::lhs: if (seg.lhs_is_named) out.push_back(qt); break;
      case QueryTarget::rhs: if (seg.rhs_target_is_named) out.push_back(qt); break;
      case QueryTarget::verb: if (verb) out.push_back(qt); break;
    }
  }
  return out;
}

QueryTemplate generate_query_template(const AxiomShape& shape, QuestionType qt,
                                      CountSyntax count_syntax) {
  const Verbalization v = verbalize(shape);
  const auto eligible = eligible_question_types(shape, v.segmentation);
  if (std::find(eligible.begin(), eligible.end(), qt) == eligible.end()) {
    throw PreconditionError(std::string("question type ") + to_string(qt) +
                            " is not eligible for shape '" + shape.id + "'");
  }

  rdf::Graph source = shape.source_graph.empty()
                          ? shape_to_graph(shape.kind, shape.lhs, shape.rhs)
                          : shape.source_graph;
  rdf::Graph stripped = strip_declarations(source);

  const TargetSite site = find_target(stripped, shape, target_of(qt));
  rdf::Graph body;
  for (const auto& t : stripped.triples()) {
    if (&t != site.triple) {
      body.add(t);
      continue;
    }
    rdf::Triple replaced = t;
    (site.subject ? replaced.subject : replaced.object) = rdf::Term::variable("x");
    body.add(std::move(replaced));
  }

  rdf::WriterOptions options;
  options.compact = true;
  options.outer_predicates = {rdf::vocab::rdfs_sub_class_of,
                              rdf::vocab::owl_equivalent_class};
  options.render = [](const rdf::Term& t) -> std::optional<std::string> {
    if (!t.is_iri()) return std::nullopt;
    if (auto id = PlaceholderId::from_iri(t.value)) return id->token();
    return std::nullopt;
  };

  QueryTemplate out;
  out.shape_id = shape.id;
  out.question_type = qt;
  out.text = projection(qt, count_syntax) + rdf::write_statements(body, options) + "}";
  out.slots = text::bracketed_slots(out.text);
  return out;
}

std::vector<QueryTemplate> generate_query_templates(const AxiomShape& shape,
                                                    CountSyntax count_syntax) {
  const Verbalization v = verbalize(shape);
  std::vector<QueryTemplate> out;
  for (QuestionType qt : eligible_question_types(shape, v.segmentation)) {
    out.push_back(generate_query_template(shape, qt, count_syntax));
  }
  return out;
}

}  // namespace cqgen
