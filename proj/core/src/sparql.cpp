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

#include "cqgen/sparql.hpp"

#include "cqgen/errors.hpp"
#include "lexer.hpp"
#include "triples_reader.hpp"

namespace cqgen {

namespace {

using detail::Lexer;
using detail::Token;
using detail::TokenType;
using detail::TriplesReader;

class QueryReader {
 public:
  explicit QueryReader(std::string_view text)
      : lexer_(text), reader_(lexer_, query_.pattern, TriplesReader::Mode::sparql) {}

  SparqlQuery run() {
    while (lexer_.accept_keyword("PREFIX")) reader_.read_prefix_body(false);
    if (lexer_.peek_keyword("BASE")) unsupported(lexer_.peek(), "BASE");
    if (lexer_.accept_keyword("ASK")) {
      query_.form = SparqlQuery::Form::ask;
    } else if (lexer_.accept_keyword("SELECT")) {
      query_.form = SparqlQuery::Form::select;
      read_projection();
    } else {
      const Token& t = lexer_.peek();
      for (const char* form : {"CONSTRUCT", "DESCRIBE"}) {
        if (lexer_.peek_keyword(form)) unsupported(t, form);
      }
      lexer_.fail(t, "expected ASK or SELECT");
    }
    if (lexer_.peek_keyword("FROM")) unsupported(lexer_.peek(), "FROM");
    lexer_.accept_keyword("WHERE");
    read_group();
    const Token& t = lexer_.peek();
    if (t.type != TokenType::end) {
      for (const char* mod : {"ORDER", "GROUP", "HAVING", "LIMIT", "OFFSET", "VALUES"}) {
        if (lexer_.peek_keyword(mod)) unsupported(t, mod);
      }
      lexer_.fail(t, "unexpected '" + t.text + "' after the query pattern");
    }
    return std::move(query_);
  }

 private:
  [[noreturn]] void unsupported(const Token& at, const std::string& what) {
    lexer_.fail(at, what + " is not supported", ParseError::Kind::unsupported_feature);
  }

  std::string read_count() {
    // after COUNT
    lexer_.expect(TokenType::lparen, "'(' after COUNT");
    if (lexer_.accept_keyword("DISTINCT")) query_.distinct = true;
    if (lexer_.peek().type == TokenType::star) unsupported(lexer_.peek(), "COUNT(*)");
    Token v = lexer_.expect(TokenType::variable, "variable in COUNT");
    lexer_.expect(TokenType::rparen, "')' after COUNT argument");
    query_.count = true;
    return v.text;
  }

  void read_projection() {
    if (lexer_.accept_keyword("DISTINCT") || lexer_.accept_keyword("REDUCED")) {
      query_.distinct = true;
    }
    if (lexer_.accept(TokenType::star)) {
      query_.select_all = true;
      return;
    }
    while (true) {
      const Token& t = lexer_.peek();
      if (t.type == TokenType::variable) {
        query_.projection.push_back(lexer_.next().text);
      } else if (lexer_.accept_keyword("COUNT")) {
        query_.projection.push_back(read_count());
      } else if (t.type == TokenType::lparen) {
        lexer_.next();
        if (!lexer_.accept_keyword("COUNT")) unsupported(lexer_.peek(), "projection expression");
        query_.projection.push_back(read_count());
        if (!lexer_.accept_keyword("AS")) lexer_.fail(lexer_.peek(), "expected AS");
        lexer_.expect(TokenType::variable, "alias variable");
        lexer_.expect(TokenType::rparen, "')' closing the projection");
      } else {
        break;
      }
    }
    if (query_.projection.empty()) lexer_.fail(lexer_.peek(), "empty projection");
  }

  void read_group() {
    lexer_.expect(TokenType::lbrace, "'{'");
    while (true) {
      const Token& t = lexer_.peek();
      if (t.type == TokenType::rbrace) {
        lexer_.next();
        return;
      }
      if (t.type == TokenType::end) lexer_.fail(t, "unterminated group pattern");
      if (t.type == TokenType::lbrace) {
        read_group();
        while (lexer_.accept_keyword("UNION")) {
          query_.uses_union = true;
          read_group();
        }
        lexer_.accept(TokenType::dot);
        continue;
      }
      for (const char* kw : {"FILTER", "OPTIONAL", "MINUS", "BIND", "VALUES", "SERVICE",
                             "GRAPH"}) {
        if (lexer_.peek_keyword(kw)) unsupported(t, kw);
      }
      if (!reader_.at_triples_start()) {
        lexer_.fail(t, "unexpected '" + t.text + "' in group pattern");
      }
      reader_.read_triples();
      if (!lexer_.accept(TokenType::dot) && lexer_.peek().type != TokenType::rbrace &&
          lexer_.peek().type != TokenType::lbrace && lexer_.peek().type != TokenType::word) {
        lexer_.fail(lexer_.peek(), "expected '.' or '}'");
      }
    }
  }

  SparqlQuery query_;
  Lexer lexer_;
  TriplesReader reader_;
};

}  // namespace

SparqlQuery parse_sparql(std::string_view query) { return QueryReader(query).run(); }

}  // namespace cqgen
