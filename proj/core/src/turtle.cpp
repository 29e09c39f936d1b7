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

#include <string>

#include "cqgen/errors.hpp"
#include "cqgen/rdf.hpp"
#include "lexer.hpp"
#include "triples_reader.hpp"

namespace cqgen::detail {

using rdf::Term;

TriplesReader::TriplesReader(Lexer& lexer, rdf::Graph& graph, Mode mode)
    : lexer_(lexer), graph_(graph), mode_(mode) {}

bool TriplesReader::at_triples_start() {
  switch (lexer_.peek().type) {
    case TokenType::iri_ref:
    case TokenType::prefixed_name:
    case TokenType::blank_label:
    case TokenType::lbracket:
    case TokenType::lparen:
      return true;
    case TokenType::variable:
      return mode_ == Mode::sparql;
    default:
      return false;
  }
}

void TriplesReader::read_prefix_body(bool turtle_style) {
  Token name = lexer_.expect(TokenType::prefixed_name, "prefix name");
  if (name.text.back() != ':' ||
      name.text.find(':') != name.text.size() - 1) {
    lexer_.fail(name, "malformed prefix name '" + name.text + "'");
  }
  Token iri = lexer_.expect(TokenType::iri_ref, "namespace IRI");
  graph_.bind_prefix(name.text.substr(0, name.text.size() - 1), iri.text);
  if (turtle_style) lexer_.expect(TokenType::dot, "'.' after @prefix");
}

Term TriplesReader::fresh_blank() {
  return Term::blank("b" + std::to_string(++blank_counter_));
}

Term TriplesReader::labelled_blank(const std::string& label) {
  auto [it, inserted] = labels_.try_emplace(label);
  if (inserted) it->second = fresh_blank().value;
  return Term::blank(it->second);
}

void TriplesReader::emit(const Term& s, const Term& p, const Term& o) {
  graph_.add(s, p, o);
}

Term TriplesReader::read_iri_or_pname(const Token& token) {
  if (token.type == TokenType::iri_ref) {
    if (mode_ == Mode::turtle && token.text.find(':') == std::string::npos) {
      lexer_.fail(token, "relative IRI <" + token.text + "> needs @base",
                  ParseError::Kind::unsupported_feature);
    }
    return Term::iri(token.text);
  }
  auto colon = token.text.find(':');
  std::string prefix = token.text.substr(0, colon);
  auto ns = graph_.namespace_of(prefix);
  if (!ns) {
    for (const auto& [p, iri] : rdf::builtin_prefixes()) {
      if (p == prefix) ns = iri;
    }
  }
  if (!ns) {
    lexer_.fail(token, "unknown prefix '" + prefix + ":'",
                ParseError::Kind::unknown_prefix);
  }
  return Term::iri(*ns + token.text.substr(colon + 1));
}

Term TriplesReader::read_literal() {
  Token tok = lexer_.next();
  switch (tok.type) {
    case TokenType::integer:
      return Term::literal(tok.text, rdf::vocab::xsd_integer);
    case TokenType::decimal:
      return Term::literal(tok.text, rdf::vocab::xsd("decimal"));
    case TokenType::double_:
      return Term::literal(tok.text, rdf::vocab::xsd("double"));
    case TokenType::word:
      return Term::literal(tok.text, rdf::vocab::xsd("boolean"));
    case TokenType::string:
      break;
    default:
      lexer_.fail(tok, "expected literal");
  }
  if (lexer_.peek().type == TokenType::lang_tag) {
    return Term::literal(tok.text, {}, lexer_.next().text);
  }
  if (lexer_.accept(TokenType::datatype_mark)) {
    Token dt = lexer_.next();
    if (dt.type != TokenType::iri_ref && dt.type != TokenType::prefixed_name) {
      lexer_.fail(dt, "expected datatype IRI after '^^'");
    }
    return Term::literal(tok.text, read_iri_or_pname(dt).value);
  }
  return Term::literal(tok.text);
}

Term TriplesReader::read_subject() {
  const Token& t = lexer_.peek();
  switch (t.type) {
    case TokenType::iri_ref:
    case TokenType::prefixed_name:
      return read_iri_or_pname(lexer_.next());
    case TokenType::blank_label:
      return labelled_blank(lexer_.next().text);
    case TokenType::variable:
      if (mode_ == Mode::sparql) return Term::variable(lexer_.next().text);
      break;
    default:
      break;
  }
  lexer_.fail(t, "expected subject, found " + std::string(to_string(t.type)));
}

Term TriplesReader::read_predicate() {
  const Token& t = lexer_.peek();
  if (t.type == TokenType::word && t.text == "a") {
    lexer_.next();
    return Term::iri(rdf::vocab::rdf_type);
  }
  if (t.type == TokenType::iri_ref || t.type == TokenType::prefixed_name) {
    return read_iri_or_pname(lexer_.next());
  }
  if (t.type == TokenType::variable && mode_ == Mode::sparql) {
    return Term::variable(lexer_.next().text);
  }
  if (t.type == TokenType::other && (t.text == "^" || t.text == "|" ||
                                     t.text == "/")) {
    lexer_.fail(t, "property paths are not supported",
                ParseError::Kind::unsupported_feature);
  }
  if (t.type == TokenType::lbrace && mode_ == Mode::turtle) {
    // TriG: `<graph> { ... }`
    lexer_.fail(t, "named graphs are not supported", ParseError::Kind::unsupported_feature);
  }
  lexer_.fail(t, "expected predicate, found " +
                     (t.type == TokenType::end ? std::string("end of input")
                                               : "'" + t.text + "'"));
}

void TriplesReader::read_triples() {
  if (lexer_.peek().type == TokenType::lbracket) {
    lexer_.next();
    Term node = fresh_blank();
    if (!lexer_.accept(TokenType::rbracket)) {
      read_property_list_body(node);
      lexer_.expect(TokenType::rbracket, "']'");
      // `[ ... ] .` is a complete statement.
      const Token& t = lexer_.peek();
      if (t.type == TokenType::dot || t.type == TokenType::rbrace ||
          t.type == TokenType::end)
        return;
    }
    read_predicate_object_list(node);
    return;
  }
  if (lexer_.peek().type == TokenType::lparen) {
    // A collection as subject.
    lexer_.next();
    Term head = fresh_blank();
    Term node = head;
    if (lexer_.accept(TokenType::rparen)) {
      read_predicate_object_list(Term::iri(rdf::vocab::rdf_nil));
      return;
    }
    while (true) {
      read_object(node, Term::iri(rdf::vocab::rdf_first));
      if (lexer_.accept(TokenType::rparen)) {
        emit(node, Term::iri(rdf::vocab::rdf_rest), Term::iri(rdf::vocab::rdf_nil));
        break;
      }
      Term next = fresh_blank();
      emit(node, Term::iri(rdf::vocab::rdf_rest), next);
      node = next;
    }
    read_predicate_object_list(head);
    return;
  }
  Term subject = read_subject();
  read_predicate_object_list(subject);
}

void TriplesReader::read_property_list_body(const Term& node) {
  read_predicate_object_list(node);
}

void TriplesReader::read_predicate_object_list(const Term& subject) {
  Term predicate = read_predicate();
  read_object_list(subject, predicate);
  while (lexer_.accept(TokenType::semicolon)) {
    // Repeated or trailing ';' is allowed.
    while (lexer_.accept(TokenType::semicolon)) {
    }
    const Token& t = lexer_.peek();
    if (t.type == TokenType::dot || t.type == TokenType::rbracket ||
        t.type == TokenType::rbrace || t.type == TokenType::end)
      return;
    predicate = read_predicate();
    read_object_list(subject, predicate);
  }
}

void TriplesReader::read_object_list(const Term& subject,
                                     const Term& predicate) {
  read_object(subject, predicate);
  while (lexer_.accept(TokenType::comma)) read_object(subject, predicate);
}

void TriplesReader::read_object(const Term& subject, const Term& predicate) {
  const Token& t = lexer_.peek();
  switch (t.type) {
    case TokenType::iri_ref:
    case TokenType::prefixed_name:
      emit(subject, predicate, read_iri_or_pname(lexer_.next()));
      return;
    case TokenType::blank_label:
      emit(subject, predicate, labelled_blank(lexer_.next().text));
      return;
    case TokenType::variable:
      if (mode_ != Mode::sparql) break;
      emit(subject, predicate, Term::variable(lexer_.next().text));
      return;
    case TokenType::string:
    case TokenType::integer:
    case TokenType::decimal:
    case TokenType::double_:
      emit(subject, predicate, read_literal());
      return;
    case TokenType::word:
      if (t.text == "true" || t.text == "false") {
        emit(subject, predicate, read_literal());
        return;
      }
      break;
    case TokenType::lbracket: {
      lexer_.next();
      Term node = fresh_blank();
      emit(subject, predicate, node);
      if (!lexer_.accept(TokenType::rbracket)) {
        read_property_list_body(node);
        lexer_.expect(TokenType::rbracket, "']'");
      }
      return;
    }
    case TokenType::lparen: {
      lexer_.next();
      if (lexer_.accept(TokenType::rparen)) {
        emit(subject, predicate, Term::iri(rdf::vocab::rdf_nil));
        return;
      }
      Term node = fresh_blank();
      emit(subject, predicate, node);
      while (true) {
        read_object(node, Term::iri(rdf::vocab::rdf_first));
        if (lexer_.accept(TokenType::rparen)) {
          emit(node, Term::iri(rdf::vocab::rdf_rest),
               Term::iri(rdf::vocab::rdf_nil));
          return;
        }
        if (lexer_.peek().type == TokenType::end) {
          lexer_.fail(lexer_.peek(), "unterminated collection");
        }
        Term next = fresh_blank();
        emit(node, Term::iri(rdf::vocab::rdf_rest), next);
        node = next;
      }
    }
    default:
      break;
  }
  lexer_.fail(t, "expected object, found " +
                     (t.type == TokenType::end ? std::string("end of input")
                                               : "'" + t.text + "'"));
}

}  // namespace cqgen::detail

namespace cqgen::rdf {

using detail::Lexer;
using detail::TokenType;
using detail::TriplesReader;

Graph parse_turtle(std::string_view document) {
  Graph graph;
  Lexer lexer(document);
  TriplesReader reader(lexer, graph, TriplesReader::Mode::turtle);
  while (lexer.peek().type != TokenType::end) {
    const detail::Token& t = lexer.peek();
    if (t.type == TokenType::at_keyword) {
      detail::Token directive = lexer.next();
      if (directive.text == "prefix") {
        reader.read_prefix_body(true);
      } else if (directive.text == "base") {
        lexer.fail(directive, "@base is not supported",
                   ParseError::Kind::unsupported_feature);
      } else {
        lexer.fail(directive, "unknown directive @" + directive.text);
      }
      continue;
    }
    if (lexer.accept_keyword("PREFIX")) {
      reader.read_prefix_body(false);
      continue;
    }
    if (lexer.peek_keyword("BASE")) {
      lexer.fail(t, "BASE is not supported",
                 ParseError::Kind::unsupported_feature);
    }
    if (lexer.peek_keyword("GRAPH") || t.type == TokenType::lbrace) {
      lexer.fail(t, "named graphs and quads are not supported",
                 ParseError::Kind::unsupported_feature);
    }
    if (t.type == TokenType::variable) {
      lexer.fail(t, "variables are not allowed in Turtle");
    }
    if (!reader.at_triples_start()) {
      lexer.fail(t, "expected a statement, found '" + t.text + "'");
    }
    reader.read_triples();
    const detail::Token& end = lexer.peek();
    if (end.type == TokenType::iri_ref || end.type == TokenType::prefixed_name ||
        end.type == TokenType::blank_label) {
      // Fourth term before the dot: N-Quads style.
      lexer.fail(end, "quads are not supported",
                 ParseError::Kind::unsupported_feature);
    }
    lexer.expect(TokenType::dot, "'.' at end of statement");
  }
  return graph;
}

}  // namespace cqgen::rdf
