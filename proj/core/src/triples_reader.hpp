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

// Parser for Turtle-style triple blocks, shared by the Turtle document reader
// and the SPARQL pattern reader.

#pragma once

#include <map>
#include <string>

#include "cqgen/rdf.hpp"
#include "lexer.hpp"

namespace cqgen::detail {

class TriplesReader {
 public:
  enum class Mode { turtle, sparql };

  TriplesReader(Lexer& lexer, rdf::Graph& graph, Mode mode);

  // True when the next token can start a `triples` production.
  bool at_triples_start();
  // subject predicateObjectList | blankNodePropertyList predicateObjectList?
  void read_triples();
  // `@prefix p: <ns> .` or `PREFIX p: <ns>` (the keyword already consumed).
  void read_prefix_body(bool turtle_style);

  Lexer& lexer() { return lexer_; }

 private:
  rdf::Term read_subject();
  rdf::Term read_predicate();
  void read_predicate_object_list(const rdf::Term& subject);
  void read_object_list(const rdf::Term& subject, const rdf::Term& predicate);
  // Emits subject-predicate-object as soon as the object term is known, then
  // descends into nested property lists and collections.
  void read_object(const rdf::Term& subject, const rdf::Term& predicate);
  rdf::Term read_iri_or_pname(const Token& token);
  rdf::Term read_literal();
  rdf::Term fresh_blank();
  rdf::Term labelled_blank(const std::string& label);
  void read_property_list_body(const rdf::Term& node);
  void emit(const rdf::Term& s, const rdf::Term& p, const rdf::Term& o);

  Lexer& lexer_;
  rdf::Graph& graph_;
  Mode mode_;
  std::size_t blank_counter_ = 0;
  std::map<std::string, std::string> labels_;
};

}  // namespace cqgen::detail
