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

#include "cqgen/shape.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <string>

#include "cqgen/errors.hpp"

namespace cqgen {

using rdf::Term;
namespace vocab = rdf::vocab;

bool Restriction::operator==(const Restriction&) const = default;
bool Intersection::operator==(const Intersection&) const = default;
bool Union::operator==(const Union&) const = default;
bool Complement::operator==(const Complement&) const = default;

ClassExpression named(PlaceholderKind kind, unsigned number) {
  return ClassExpression{NamedClass{PlaceholderId{kind, number}}};
}

ClassExpression named(PlaceholderId id) {
  return ClassExpression{NamedClass{id}};
}

const char* to_string(AxiomKind kind) noexcept {
  return kind == AxiomKind::sub_class_of ? "subClassOf" : "equivalentClass";
}

const char* to_string(ConstraintKind kind) noexcept {
  switch (kind) {
    case ConstraintKind::some_values_from: return "someValuesFrom";
    case ConstraintKind::all_values_from: return "allValuesFrom";
    case ConstraintKind::has_value: return "hasValue";
    case ConstraintKind::qualified_cardinality: return "qualifiedCardinality";
    case ConstraintKind::max_qualified_cardinality: return "maxQualifiedCardinality";
    case ConstraintKind::min_cardinality: return "minCardinality";
  }
  return "?";
}

const std::string& constraint_predicate(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::some_values_from: return vocab::owl_some_values_from;
    case ConstraintKind::all_values_from: return vocab::owl_all_values_from;
    case ConstraintKind::has_value: return vocab::owl_has_value;
    case ConstraintKind::qualified_cardinality: return vocab::owl_qualified_cardinality;
    case ConstraintKind::max_qualified_cardinality:
      return vocab::owl_max_qualified_cardinality;
    case ConstraintKind::min_cardinality: return vocab::owl_min_cardinality;
  }
  return vocab::owl_some_values_from;
}

namespace {

bool is_qualified(ConstraintKind kind) {
  return kind == ConstraintKind::qualified_cardinality ||
         kind == ConstraintKind::max_qualified_cardinality;
}

bool is_declaration_type(const std::string& iri) {
  return iri == vocab::owl_class || iri == vocab::owl_object_property ||
         iri == vocab::owl_datatype_property || iri == vocab::owl_named_individual;
}

std::string short_name(const std::string& iri) {
  for (const auto& [prefix, ns] : rdf::builtin_prefixes()) {
    if (iri.compare(0, ns.size(), ns) == 0) return prefix + ":" + iri.substr(ns.size());
  }
  return "<" + iri + ">";
}

[[noreturn]] void unsupported(const std::string& what) {
  throw ShapeError(ShapeError::Kind::unsupported_construct, "unsupported construct: " + what);
}

[[noreturn]] void malformed(const std::string& what) {
  throw ShapeError(ShapeError::Kind::malformed_expression, "malformed class expression: " + what);
}

class Extractor {
 public:
  explicit Extractor(const rdf::Graph& graph) : graph_(graph) {
    const auto& triples = graph_.triples();
    consumed_.assign(triples.size(), false);
    for (std::size_t i = 0; i < triples.size(); ++i) {
      by_subject_[triples[i].subject].push_back(i);
    }
  }

  AxiomShape run(std::string id) {
    const auto& triples = graph_.triples();
    std::vector<std::size_t> axioms;
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto& p = triples[i].predicate.value;
      if (p == vocab::rdfs_sub_class_of || p == vocab::owl_equivalent_class)
        axioms.push_back(i);
    }
    if (axioms.empty()) {
      throw ShapeError(ShapeError::Kind::no_axiom,
                       "no rdfs:subClassOf or owl:equivalentClass axiom");
    }
    if (axioms.size() > 1) {
      throw ShapeError(ShapeError::Kind::multiple_axioms,
                       std::to_string(axioms.size()) + " class axioms, expected one");
    }
    const auto& axiom = triples[axioms.front()];
    consumed_[axioms.front()] = true;
    AxiomShape shape;
    shape.id = std::move(id);
    shape.kind = axiom.predicate.value == vocab::rdfs_sub_class_of
                     ? AxiomKind::sub_class_of
                     : AxiomKind::equivalent_class;
    shape.lhs = resolve_class(axiom.subject);
    shape.rhs = resolve_class(axiom.object);
    for (std::size_t i = 0; i < triples.size(); ++i) {
      if (!consumed_[i]) {
        const auto& t = triples[i];
        if (t.subject.is_blank() && !reached_.count(t.subject)) {
          throw ShapeError(ShapeError::Kind::dangling_blank_node,
                           "blank node _:" + t.subject.value +
                               " is not part of the class axiom");
        }
        unsupported(short_name(t.predicate.value) + " on " + t.subject.to_string());
      }
    }
    shape.source_graph = graph_;
    return shape;
  }

 private:
  std::vector<std::size_t> take(const Term& subject) {
    std::vector<std::size_t> out;
    auto it = by_subject_.find(subject);
    if (it == by_subject_.end()) return out;
    for (auto i : it->second) {
      if (!consumed_[i]) out.push_back(i);
    }
    return out;
  }

  PlaceholderId placeholder(const Term& term, const char* role) {
    if (!term.is_iri()) malformed(std::string(role) + " must be an IRI, found " + term.to_string());
    auto id = PlaceholderId::from_iri(term.value);
    if (!id) unsupported("non-placeholder IRI " + short_name(term.value) + " as " + role);
    return *id;
  }

  ClassExpression resolve_class(const Term& term) {
    if (term.is_iri()) {
      auto id = placeholder(term, "class");
      if (id.kind != PlaceholderKind::C) {
        malformed(id.slot() + " used in class position");
      }
      return named(id);
    }
    if (!term.is_blank()) malformed("literal in class position");
    if (!reached_.insert(term).second) malformed("blank node _:" + term.value + " shared");
    auto own = take(term);
    if (own.empty()) {
      throw ShapeError(ShapeError::Kind::dangling_blank_node,
                       "blank node _:" + term.value + " has no description");
    }
    const auto& triples = graph_.triples();
    std::map<std::string, std::vector<std::size_t>> by_pred;
    bool restriction_typed = false;
    for (auto i : own) {
      const auto& t = triples[i];
      if (t.predicate.value == vocab::rdf_type && t.object.is_iri() &&
          (t.object.value == vocab::owl_class || t.object.value == vocab::owl_restriction)) {
        restriction_typed |= t.object.value == vocab::owl_restriction;
        consumed_[i] = true;
        continue;
      }
      by_pred[t.predicate.value].push_back(i);
    }
    auto single = [&](const std::string& pred) -> const rdf::Triple* {
      auto it = by_pred.find(pred);
      if (it == by_pred.end()) return nullptr;
      if (it->second.size() != 1) malformed(short_name(pred) + " repeated");
      consumed_[it->second.front()] = true;
      return &triples[it->second.front()];
    };
    if (by_pred.count(vocab::owl_on_property) || restriction_typed) {
      return resolve_restriction(term, by_pred, single);
    }
    if (const auto* t = single(vocab::owl_intersection_of)) {
      expect_only(by_pred, vocab::owl_intersection_of);
      return ClassExpression{Intersection{operands(t->object, "owl:intersectionOf")}};
    }
    if (const auto* t = single(vocab::owl_union_of)) {
      expect_only(by_pred, vocab::owl_union_of);
      return ClassExpression{Union{operands(t->object, "owl:unionOf")}};
    }
    if (const auto* t = single(vocab::owl_complement_of)) {
      expect_only(by_pred, vocab::owl_complement_of);
      return ClassExpression{Complement{Box<ClassExpression>(resolve_class(t->object))}};
    }
    if (by_pred.empty()) malformed("blank node _:" + term.value + " is only typed");
    unsupported(short_name(by_pred.begin()->first));
  }

  void expect_only(const std::map<std::string, std::vector<std::size_t>>& by_pred,
                   const std::string& pred) {
    for (const auto& [p, _] : by_pred) {
      if (p != pred) unsupported(short_name(p) + " next to " + short_name(pred));
    }
  }

  template <class Single>
  ClassExpression resolve_restriction(
      const Term& node, const std::map<std::string, std::vector<std::size_t>>& by_pred,
      Single& single) {
    const auto* on_property = single(vocab::owl_on_property);
    if (!on_property) malformed("restriction _:" + node.value + " without owl:onProperty");
    Restriction r;
    r.property = placeholder(on_property->object, "property");
    if (!r.property.is_property()) malformed(r.property.slot() + " used as property");

    static const ConstraintKind kinds[] = {
        ConstraintKind::some_values_from, ConstraintKind::all_values_from,
        ConstraintKind::has_value, ConstraintKind::qualified_cardinality,
        ConstraintKind::max_qualified_cardinality, ConstraintKind::min_cardinality};
    const rdf::Triple* constraint = nullptr;
    for (auto kind : kinds) {
      if (const auto* t = single(constraint_predicate(kind))) {
        if (constraint) malformed("restriction _:" + node.value + " has two constraints");
        constraint = t;
        r.constraint = kind;
      }
    }
    if (!constraint) {
      for (const auto& [p, _] : by_pred) {
        if (p != vocab::owl_on_property && p != vocab::owl_on_class &&
            p != vocab::owl_on_data_range)
          unsupported(short_name(p));
      }
      malformed("restriction _:" + node.value + " without a constraint");
    }
    const auto* on_class = single(vocab::owl_on_class);
    const auto* on_range = single(vocab::owl_on_data_range);
    for (const auto& [p, idx] : by_pred) {
      for (auto i : idx) {
        if (!consumed_[i]) unsupported(short_name(p) + " inside a restriction");
      }
    }

    const bool data = r.is_data();
    if (is_qualified(r.constraint) || r.constraint == ConstraintKind::min_cardinality) {
      r.cardinality = cardinality(constraint->object);
    }
    if (is_qualified(r.constraint)) {
      const auto* qualifier = data ? on_range : on_class;
      if (!qualifier) {
        malformed(std::string("qualified cardinality without ") +
                  (data ? "owl:onDataRange" : "owl:onClass"));
      }
      if ((data ? on_class : on_range) != nullptr) {
        malformed("qualifier does not match the property kind");
      }
      r.filler = data ? Filler{datatype(qualifier->object)}
                      : Filler{Box<ClassExpression>(resolve_class(qualifier->object))};
    } else {
      if (on_class || on_range) malformed("owl:onClass/owl:onDataRange without qualified cardinality");
      switch (r.constraint) {
        case ConstraintKind::some_values_from:
        case ConstraintKind::all_values_from:
          r.filler = data ? Filler{datatype(constraint->object)}
                          : Filler{Box<ClassExpression>(resolve_class(constraint->object))};
          break;
        case ConstraintKind::has_value:
          r.filler = value(constraint->object, data);
          break;
        default:
          break;
      }
    }
    return ClassExpression{std::move(r)};
  }

  unsigned cardinality(const Term& t) {
    if (!t.is_literal()) malformed("cardinality must be a literal");
    unsigned n = 0;
    auto [end, ec] = std::from_chars(t.value.data(), t.value.data() + t.value.size(), n);
    if (ec != std::errc{} || end != t.value.data() + t.value.size()) {
      malformed("cardinality '" + t.value + "' is not a nonnegative integer");
    }
    return n;
  }

  PlaceholderId datatype(const Term& t) {
    auto id = placeholder(t, "datatype");
    if (id.kind != PlaceholderKind::DT) malformed(id.slot() + " used as datatype");
    return id;
  }

  Filler value(const Term& t, bool data) {
    if (data) {
      if (!t.is_literal()) malformed("data hasValue needs a literal");
      return t;
    }
    auto id = placeholder(t, "value");
    if (id.kind == PlaceholderKind::I) return id;
    if (id.kind == PlaceholderKind::C) return Box<ClassExpression>(named(id));
    malformed(id.slot() + " used as hasValue filler");
  }

  std::vector<ClassExpression> operands(const Term& head, const char* what) {
    std::vector<ClassExpression> out;
    Term cur = head;
    std::set<Term> seen;
    while (!(cur.is_iri() && cur.value == vocab::rdf_nil)) {
      if (!cur.is_blank() || !seen.insert(cur).second) {
        malformed(std::string(what) + " is not a well-formed list");
      }
      const rdf::Triple* first = nullptr;
      const rdf::Triple* rest = nullptr;
      for (auto i : take(cur)) {
        const auto& t = graph_.triples()[i];
        if (t.predicate.value == vocab::rdf_first && !first) {
          first = &t;
          consumed_[i] = true;
        } else if (t.predicate.value == vocab::rdf_rest && !rest) {
          rest = &t;
          consumed_[i] = true;
        } else {
          malformed(std::string(what) + " list node carries " + short_name(t.predicate.value));
        }
      }
      if (!first || !rest) malformed(std::string(what) + " list node incomplete");
      reached_.insert(cur);
      out.push_back(resolve_class(first->object));
      cur = rest->object;
    }
    if (out.size() < 2) malformed(std::string(what) + " needs at least two operands");
    return out;
  }

  const rdf::Graph& graph_;
  std::vector<bool> consumed_;
  std::map<Term, std::vector<std::size_t>> by_subject_;
  std::set<Term> reached_;
};

void collect(const ClassExpression& expr, std::vector<PlaceholderId>& out);

void collect_filler(const Filler& filler, std::vector<PlaceholderId>& out) {
  if (const auto* id = std::get_if<PlaceholderId>(&filler)) {
    out.push_back(*id);
  } else if (const auto* box = std::get_if<Box<ClassExpression>>(&filler)) {
    collect(**box, out);
  }
}

void collect(const ClassExpression& expr, std::vector<PlaceholderId>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NamedClass>) {
          out.push_back(node.id);
        } else if constexpr (std::is_same_v<T, Restriction>) {
          out.push_back(node.property);
          collect_filler(node.filler, out);
        } else if constexpr (std::is_same_v<T, Complement>) {
          collect(*node.operand, out);
        } else {
          for (const auto& op : node.operands) collect(op, out);
        }
      },
      expr.node);
}

ClassExpression renumber(const ClassExpression& expr,
                         const std::map<PlaceholderId, PlaceholderId>& m);

Filler renumber_filler(const Filler& filler,
                       const std::map<PlaceholderId, PlaceholderId>& m) {
  if (const auto* id = std::get_if<PlaceholderId>(&filler)) return m.at(*id);
  if (const auto* box = std::get_if<Box<ClassExpression>>(&filler)) {
    return Box<ClassExpression>(renumber(**box, m));
  }
  return filler;
}

ClassExpression renumber(const ClassExpression& expr,
                         const std::map<PlaceholderId, PlaceholderId>& m) {
  return std::visit(
      [&](const auto& node) -> ClassExpression {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NamedClass>) {
          return named(m.at(node.id));
        } else if constexpr (std::is_same_v<T, Restriction>) {
          Restriction r = node;
          r.property = m.at(node.property);
          r.filler = renumber_filler(node.filler, m);
          return ClassExpression{std::move(r)};
        } else if constexpr (std::is_same_v<T, Complement>) {
          return ClassExpression{Complement{Box<ClassExpression>(renumber(*node.operand, m))}};
        } else {
          T out;
          for (const auto& op : node.operands) out.operands.push_back(renumber(op, m));
          return ClassExpression{std::move(out)};
        }
      },
      expr.node);
}

void add_counts(ConstructCounts& into, const ConstructCounts& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

std::string prefixed(const std::string& iri) { return short_name(iri); }

// Graph construction for shape_to_graph.
class GraphBuilder {
 public:
  rdf::Graph graph;

  Term emit_class(const ClassExpression& expr) {
    return std::visit(
        [&](const auto& node) -> Term {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, NamedClass>) {
            return Term::iri(node.id.iri());
          } else if constexpr (std::is_same_v<T, Restriction>) {
            Term b = fresh();
            add(b, vocab::rdf_type, Term::iri(vocab::owl_restriction));
            add(b, vocab::owl_on_property, Term::iri(node.property.iri()));
            Term filler = emit_filler(node.filler);
            if (is_qualified(node.constraint) || node.constraint == ConstraintKind::min_cardinality) {
              add(b, constraint_predicate(node.constraint),
                  Term::literal(std::to_string(node.cardinality),
                                rdf::vocab::xsd("nonNegativeInteger")));
              if (is_qualified(node.constraint)) {
                add(b, node.is_data() ? vocab::owl_on_data_range : vocab::owl_on_class, filler);
              }
            } else {
              add(b, constraint_predicate(node.constraint), filler);
            }
            return b;
          } else if constexpr (std::is_same_v<T, Complement>) {
            Term b = fresh();
            add(b, vocab::rdf_type, Term::iri(vocab::owl_class));
            add(b, vocab::owl_complement_of, emit_class(*node.operand));
            return b;
          } else {
            Term b = fresh();
            add(b, vocab::rdf_type, Term::iri(vocab::owl_class));
            const auto& pred = std::is_same_v<T, Intersection> ? vocab::owl_intersection_of
                                                               : vocab::owl_union_of;
            Term head = fresh();
            add(b, pred, head);
            Term cur = head;
            for (std::size_t i = 0; i < node.operands.size(); ++i) {
              add(cur, vocab::rdf_first, emit_class(node.operands[i]));
              Term next = i + 1 == node.operands.size() ? Term::iri(vocab::rdf_nil) : fresh();
              add(cur, vocab::rdf_rest, next);
              cur = next;
            }
            return b;
          }
        },
        expr.node);
  }

  Term emit_filler(const Filler& filler) {
    if (const auto* id = std::get_if<PlaceholderId>(&filler)) return Term::iri(id->iri());
    if (const auto* lit = std::get_if<Term>(&filler)) return *lit;
    if (const auto* box = std::get_if<Box<ClassExpression>>(&filler)) return emit_class(**box);
    return Term::iri(vocab::rdf_nil);
  }

  void add(const Term& s, const std::string& p, const Term& o) {
    graph.add(s, Term::iri(p), o);
  }

 private:
  Term fresh() { return Term::blank("b" + std::to_string(++counter_)); }
  std::size_t counter_ = 0;
};

}  // namespace

rdf::Graph strip_declarations(const rdf::Graph& graph) {
  return graph.filtered([](const rdf::Triple& t) {
    return !(t.subject.is_iri() && PlaceholderId::from_iri(t.subject.value) &&
             t.predicate.value == vocab::rdf_type && t.object.is_iri() &&
             is_declaration_type(t.object.value));
  });
}

AxiomShape extract_axiom_shape(const rdf::Graph& graph, std::string id) {
  AxiomShape shape = Extractor(strip_declarations(graph)).run(std::move(id));
  shape.source_graph = graph;
  return shape;
}

std::vector<PlaceholderId> placeholder_occurrences(const ClassExpression& expr) {
  std::vector<PlaceholderId> out;
  collect(expr, out);
  return out;
}

std::vector<PlaceholderId> placeholder_occurrences(const AxiomShape& shape) {
  std::vector<PlaceholderId> out;
  collect(shape.lhs, out);
  collect(shape.rhs, out);
  return out;
}

AxiomShape canonicalize_placeholders(const AxiomShape& shape) {
  std::map<PlaceholderId, PlaceholderId> mapping;
  std::map<PlaceholderKind, unsigned> next;
  for (const auto& id : placeholder_occurrences(shape)) {
    if (!mapping.count(id)) mapping[id] = PlaceholderId{id.kind, ++next[id.kind]};
  }
  AxiomShape out;
  out.id = shape.id;
  out.kind = shape.kind;
  out.lhs = renumber(shape.lhs, mapping);
  out.rhs = renumber(shape.rhs, mapping);

  std::map<std::string, std::string> iri_map;
  for (const auto& [from, to] : mapping) iri_map[from.iri()] = to.iri();
  // Declarations of placeholders the axiom never uses would collide with the
  // new numbering.
  auto unused = [&](const Term& t) {
    return t.is_iri() && PlaceholderId::from_iri(t.value) && !iri_map.count(t.value);
  };
  out.source_graph = shape.source_graph
                         .filtered([&](const rdf::Triple& t) {
                           return !unused(t.subject) && !unused(t.object);
                         })
                         .mapped([&](const Term& t) {
                           if (!t.is_iri()) return t;
                           auto it = iri_map.find(t.value);
                           return it == iri_map.end() ? t : Term::iri(it->second);
                         });
  return out;
}

const std::vector<std::string>& construct_inventory() {
  static const std::vector<std::string> inventory = {
      "owl:Restriction",      "owl:onProperty",
      "owl:intersectionOf",   "rdfs:subClassOf",
      "owl:equivalentClass",  "owl:someValuesFrom",
      "owl:qualifiedCardinality", "owl:hasValue",
      "owl:unionOf",          "owl:allValuesFrom",
      "owl:maxQualifiedCardinality", "owl:complementOf",
      "owl:minCardinality",   "owl:onClass",
      "owl:onDataRange",
  };
  return inventory;
}

ConstructCounts expression_constructs(const ClassExpression& expr) {
  ConstructCounts counts;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Restriction>) {
          ++counts["owl:Restriction"];
          ++counts["owl:onProperty"];
          ++counts[prefixed(constraint_predicate(node.constraint))];
          if (is_qualified(node.constraint)) {
            ++counts[node.is_data() ? "owl:onDataRange" : "owl:onClass"];
          }
          if (const auto* box = std::get_if<Box<ClassExpression>>(&node.filler)) {
            add_counts(counts, expression_constructs(**box));
          }
        } else if constexpr (std::is_same_v<T, Intersection>) {
          ++counts["owl:intersectionOf"];
          for (const auto& op : node.operands) add_counts(counts, expression_constructs(op));
        } else if constexpr (std::is_same_v<T, Union>) {
          ++counts["owl:unionOf"];
          for (const auto& op : node.operands) add_counts(counts, expression_constructs(op));
        } else if constexpr (std::is_same_v<T, Complement>) {
          ++counts["owl:complementOf"];
          add_counts(counts, expression_constructs(*node.operand));
        }
      },
      expr.node);
  return counts;
}

ConstructCounts shape_constructs(const AxiomShape& shape) {
  ConstructCounts counts;
  ++counts[shape.kind == AxiomKind::sub_class_of ? "rdfs:subClassOf" : "owl:equivalentClass"];
  add_counts(counts, expression_constructs(shape.lhs));
  add_counts(counts, expression_constructs(shape.rhs));
  return counts;
}

rdf::Graph shape_to_graph(AxiomKind kind, const ClassExpression& lhs,
                          const ClassExpression& rhs) {
  GraphBuilder builder;
  std::vector<PlaceholderId> ids = placeholder_occurrences(lhs);
  for (const auto& id : placeholder_occurrences(rhs)) ids.push_back(id);
  std::set<PlaceholderId> declared;
  for (const auto& id : ids) {
    if (!declared.insert(id).second) continue;
    const std::string* type = nullptr;
    switch (id.kind) {
      case PlaceholderKind::C: type = &vocab::owl_class; break;
      case PlaceholderKind::I: type = &vocab::owl_named_individual; break;
      case PlaceholderKind::OP: type = &vocab::owl_object_property; break;
      case PlaceholderKind::DP: type = &vocab::owl_datatype_property; break;
      case PlaceholderKind::DT: break;
    }
    if (type) builder.add(Term::iri(id.iri()), vocab::rdf_type, Term::iri(*type));
  }
  // Reading order: LHS triples, the axiom triple, then RHS triples.
  Term subject = builder.emit_class(lhs);
  rdf::Graph out = builder.graph;
  std::size_t lhs_end = out.size();
  Term object = builder.emit_class(rhs);
  const auto& pred = kind == AxiomKind::sub_class_of ? vocab::rdfs_sub_class_of
                                                     : vocab::owl_equivalent_class;
  out.add(subject, Term::iri(pred), object);
  const auto& all = builder.graph.triples();
  for (std::size_t i = lhs_end; i < all.size(); ++i) out.add(all[i]);
  return out;
}

}  // namespace cqgen
