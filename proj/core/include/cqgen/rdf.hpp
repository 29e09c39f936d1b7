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

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cqgen::rdf {

namespace ns {
inline constexpr std::string_view rdf =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
}  // namespace ns

// Full IRIs of the vocabulary the toolkit inspects.
namespace vocab {
std::string rdf(std::string_view local);
std::string rdfs(std::string_view local);
std::string owl(std::string_view local);
std::string xsd(std::string_view local);

extern const std::string rdf_type;
extern const std::string rdf_first;
extern const std::string rdf_rest;
extern const std::string rdf_nil;
extern const std::string rdfs_label;
extern const std::string rdfs_sub_class_of;
extern const std::string rdfs_range;
extern const std::string rdfs_datatype;
extern const std::string owl_class;
extern const std::string owl_equivalent_class;
extern const std::string owl_restriction;
extern const std::string owl_object_property;
extern const std::string owl_datatype_property;
extern const std::string owl_named_individual;
extern const std::string owl_on_property;
extern const std::string owl_some_values_from;
extern const std::string owl_all_values_from;
extern const std::string owl_has_value;
extern const std::string owl_qualified_cardinality;
extern const std::string owl_max_qualified_cardinality;
extern const std::string owl_min_cardinality;
extern const std::string owl_on_class;
extern const std::string owl_on_data_range;
extern const std::string owl_intersection_of;
extern const std::string owl_union_of;
extern const std::string owl_complement_of;
extern const std::string xsd_integer;
}  // namespace vocab

// `variable` only occurs in query patterns parsed from SPARQL.
enum class TermKind { iri, blank, literal, variable };

struct Term {
  TermKind kind = TermKind::iri;
  std::string value;
  std::string datatype;  // literals only; empty for plain/language literals
  std::string language;  // literals only

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = {},
                      std::string language = {});
  static Term variable(std::string name);

  bool is_iri() const noexcept { return kind == TermKind::iri; }
  bool is_blank() const noexcept { return kind == TermKind::blank; }
  bool is_literal() const noexcept { return kind == TermKind::literal; }
  bool is_variable() const noexcept { return kind == TermKind::variable; }

  // N-Triples-like rendering, used in diagnostics and as a sort key.
  std::string to_string() const;

  auto operator<=>(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

using PrefixMap = std::vector<std::pair<std::string, std::string>>;

// Ordered, duplicate-free set of triples. Insertion order is document order
// and is what every downstream numbering relies on.
class Graph {
 public:
  Graph() = default;

  // Returns false (and leaves the graph unchanged) for a duplicate.
  bool add(Triple triple);
  bool add(Term subject, Term predicate, Term object);

  const std::vector<Triple>& triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  bool contains(const Triple& triple) const;

  // Declared prefixes in declaration order; rebinding replaces in place.
  const PrefixMap& prefixes() const noexcept { return prefixes_; }
  void bind_prefix(std::string prefix, std::string namespace_iri);
  std::optional<std::string> namespace_of(std::string_view prefix) const;

  std::vector<Term> objects(const Term& subject,
                            std::string_view predicate) const;

  // Copy with every triple for which `keep` returns true, prefixes preserved.
  template <class Pred>
  Graph filtered(Pred keep) const {
    Graph out;
    out.prefixes_ = prefixes_;
    for (const auto& t : triples_) {
      if (keep(t)) out.add(t);
    }
    return out;
  }

  // Applies `rewrite` to each term position and rebuilds the graph.
  template <class Fn>
  Graph mapped(Fn rewrite) const {
    Graph out;
    out.prefixes_ = prefixes_;
    for (const auto& t : triples_) {
      out.add(Triple{rewrite(t.subject), rewrite(t.predicate),
                     rewrite(t.object)});
    }
    return out;
  }

  bool operator==(const Graph& other) const {
    return triples_ == other.triples_;
  }

 private:
  std::vector<Triple> triples_;
  std::set<Triple> index_;
  PrefixMap prefixes_;
};

// rdf, rdfs, owl and xsd; always known to the parsers.
const PrefixMap& builtin_prefixes();

bool is_reserved_iri(std::string_view iri);

// Local name: the part after the last '#', '/' or ':'.
std::string_view local_name(std::string_view iri);

// Parses the Turtle subset described in the README. Throws ParseError.
Graph parse_turtle(std::string_view document);

// Canonical Turtle rendering: builtin + declared prefix directives, one
// statement per subject, blank nodes with a single incoming reference folded
// into `[...]` and well-formed lists into `(...)`.
std::string serialize_turtle(const Graph& graph);

// Layout knobs for write_statements.
struct WriterOptions {
  // Query-body layout: `[a owl:Restriction; owl:onProperty <OP1>]`,
  // statements joined by " . " and no trailing dot. Otherwise Turtle layout,
  // one statement per line terminated by " .".
  bool compact = false;
  // Predicates that stay outside the brackets when a root blank node is
  // written as `[...] p o`.
  std::vector<std::string> outer_predicates;
  // Optional override of term rendering (e.g. placeholder IRIs as `<C1>`).
  std::function<std::optional<std::string>(const Term&)> render;
};

// Writes the statements of `graph` (no prefix directives). Subjects and
// predicates are emitted in first-appearance order.
std::string write_statements(const Graph& graph, const WriterOptions& options);

// True when a bijection on blank labels maps one graph onto the other.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace cqgen::rdf
