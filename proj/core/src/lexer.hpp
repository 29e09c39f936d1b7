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

// Tokenizer shared by the Turtle and SPARQL readers.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "cqgen/errors.hpp"

namespace cqgen::detail {

enum class TokenType {
  end,
  iri_ref,        // <...>          text: the IRI
  prefixed_name,  // pfx:local      text: "pfx:local"
  blank_label,    // _:x            text: "x"
  variable,       // ?x / $x        text: "x"
  string,         // "..."          text: unescaped lexical form
  integer,
  decimal,
  double_,
  lang_tag,       // @en after a string
  at_keyword,     // @prefix, @base
  word,           // a, PREFIX, SELECT, true, ...
  dot,
  semicolon,
  comma,
  lbracket,
  rbracket,
  lparen,
  rparen,
  lbrace,
  rbrace,
  datatype_mark,  // ^^
  star,
  other,
};

struct Token {
  TokenType type = TokenType::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input);

  const Token& peek();
  Token next();
  // Consumes the next token when it has the given type.
  bool accept(TokenType type);
  // Consumes a word token equal (case-insensitively) to `keyword`.
  bool accept_keyword(std::string_view keyword);
  bool peek_keyword(std::string_view keyword);
  Token expect(TokenType type, std::string_view what);

  [[noreturn]] void fail(const Token& at, std::string message,
                         ParseError::Kind kind = ParseError::Kind::syntax) const;

 private:
  Token scan();
  void skip_space_and_comments();
  char cur() const { return pos_ < input_.size() ? input_[pos_] : '\0'; }
  char at(std::size_t off) const {
    return pos_ + off < input_.size() ? input_[pos_ + off] : '\0';
  }
  void advance(std::size_t n = 1);
  std::string read_string(const Token& start);
  std::string read_iri(const Token& start);
  std::string read_name();

  std::string_view input_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  bool has_peek_ = false;
  Token peeked_;
  TokenType last_type_ = TokenType::end;
};

const char* to_string(TokenType type) noexcept;

}  // namespace cqgen::detail
