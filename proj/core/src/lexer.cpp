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

#include "lexer.hpp"

#include <cctype>
#include <string>

namespace cqgen::detail {
namespace {

bool is_name_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || u >= 0x80;
}

bool is_name_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == ':' ||
         c == '%' || u >= 0x80;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

}  // namespace

Lexer::Lexer(std::string_view input) : input_(input) {
  // UTF-8 byte order mark.
  if (input_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
}

const Token& Lexer::peek() {
  if (!has_peek_) {
    peeked_ = scan();
    has_peek_ = true;
  }
  return peeked_;
}

Token Lexer::next() {
  Token t = peek();
  has_peek_ = false;
  last_type_ = t.type;
  return t;
}

bool Lexer::accept(TokenType type) {
  if (peek().type != type) return false;
  next();
  return true;
}

bool Lexer::peek_keyword(std::string_view keyword) {
  const Token& t = peek();
  return t.type == TokenType::word && iequals(t.text, keyword);
}

bool Lexer::accept_keyword(std::string_view keyword) {
  if (!peek_keyword(keyword)) return false;
  next();
  return true;
}

Token Lexer::expect(TokenType type, std::string_view what) {
  const Token& t = peek();
  if (t.type != type) {
    fail(t, "expected " + std::string(what) + ", found " +
                (t.type == TokenType::end ? std::string("end of input")
                                          : "'" + t.text + "'"));
  }
  return next();
}

void Lexer::fail(const Token& at, std::string message,
                 ParseError::Kind kind) const {
  throw ParseError(kind, std::move(message), at.line, at.column);
}

void Lexer::advance(std::size_t n) {
  for (std::size_t i = 0; i < n && pos_ < input_.size(); ++i) {
    if (input_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(input_[pos_]) & 0xC0) != 0x80) {
      ++column_;
    }
    ++pos_;
  }
}

void Lexer::skip_space_and_comments() {
  while (pos_ < input_.size()) {
    char c = cur();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
    } else if (c == '#') {
      while (pos_ < input_.size() && cur() != '\n') advance();
    } else {
      break;
    }
  }
}

std::string Lexer::read_iri(const Token& start) {
  advance();  // <
  std::string out;
  while (true) {
    char c = cur();
    if (c == '\0' && pos_ >= input_.size()) fail(start, "unterminated IRI");
    if (c == '>') {
      advance();
      return out;
    }
    if (c == ' ' || c == '\n' || c == '\t' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`') {
      fail(start, "invalid character in IRI");
    }
    if (c == '\\') {
      char kind = at(1);
      std::size_t len = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
      if (len == 0) fail(start, "invalid escape in IRI");
      auto hex = std::string(input_.substr(pos_ + 2, len));
      if (hex.size() != len) fail(start, "truncated escape in IRI");
      append_utf8(out, std::stoul(hex, nullptr, 16));
      advance(2 + len);
      continue;
    }
    out += c;
    advance();
  }
}

std::string Lexer::read_string(const Token& start) {
  char quote = cur();
  bool long_form = at(1) == quote && at(2) == quote;
  advance(long_form ? 3 : 1);
  std::string out;
  while (true) {
    if (pos_ >= input_.size()) fail(start, "unterminated string literal");
    char c = cur();
    if (long_form) {
      if (c == quote && at(1) == quote && at(2) == quote) {
        advance(3);
        return out;
      }
    } else {
      if (c == quote) {
        advance();
        return out;
      }
      if (c == '\n' || c == '\r') fail(start, "newline in string literal");
    }
    if (c == '\\') {
      char e = at(1);
      switch (e) {
        case 't': out += '\t'; break;
        case 'b': out += '\b'; break;
        case 'n': out += '\n'; break;
        case 'r': out += '\r'; break;
        case 'f': out += '\f'; break;
        case '"': out += '"'; break;
        case '\'': out += '\''; break;
        case '\\': out += '\\'; break;
        case 'u':
        case 'U': {
          std::size_t len = e == 'u' ? 4 : 8;
          auto hex = std::string(input_.substr(pos_ + 2, len));
          if (hex.size() != len) fail(start, "truncated escape in string");
          append_utf8(out, std::stoul(hex, nullptr, 16));
          advance(len);
          break;
        }
        default:
          fail(start, "invalid escape in string literal");
      }
      advance(2);
      continue;
    }
    out += c;
    advance();
  }
}

std::string Lexer::read_name() {
  std::size_t begin = pos_;
  while (pos_ < input_.size() && is_name_char(cur())) advance();
  // A trailing '.' terminates the statement, not the name.
  while (pos_ > begin && input_[pos_ - 1] == '.') {
    --pos_;
    --column_;
  }
  return std::string(input_.substr(begin, pos_ - begin));
}

Token Lexer::scan() {
  skip_space_and_comments();
  Token t;
  t.line = line_;
  t.column = column_;
  if (pos_ >= input_.size()) {
    t.type = TokenType::end;
    return t;
  }
  char c = cur();
  auto single = [&](TokenType type) {
    t.type = type;
    t.text = std::string(1, c);
    advance();
    return t;
  };
  switch (c) {
    case '.':
      if (!std::isdigit(static_cast<unsigned char>(at(1))))
        return single(TokenType::dot);
      break;
    case ';': return single(TokenType::semicolon);
    case ',': return single(TokenType::comma);
    case '[': return single(TokenType::lbracket);
    case ']': return single(TokenType::rbracket);
    case '(': return single(TokenType::lparen);
    case ')': return single(TokenType::rparen);
    case '{': return single(TokenType::lbrace);
    case '}': return single(TokenType::rbrace);
    case '*': return single(TokenType::star);
    case '<':
      t.type = TokenType::iri_ref;
      t.text = read_iri(t);
      return t;
    case '"':
    case '\'':
      t.type = TokenType::string;
      t.text = read_string(t);
      return t;
    case '^':
      if (at(1) == '^') {
        advance(2);
        t.type = TokenType::datatype_mark;
        t.text = "^^";
        return t;
      }
      return single(TokenType::other);
    case '@': {
      advance();
      std::size_t begin = pos_;
      while (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '-')
        advance();
      t.text = std::string(input_.substr(begin, pos_ - begin));
      if (t.text.empty()) fail(t, "dangling '@'");
      t.type = last_type_ == TokenType::string ? TokenType::lang_tag
                                               : TokenType::at_keyword;
      return t;
    }
    case '?':
    case '$': {
      advance();
      std::size_t begin = pos_;
      while (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_')
        advance();
      t.text = std::string(input_.substr(begin, pos_ - begin));
      if (t.text.empty()) fail(t, "empty variable name");
      t.type = TokenType::variable;
      return t;
    }
    case '_':
      if (at(1) == ':') {
        advance(2);
        t.type = TokenType::blank_label;
        t.text = read_name();
        if (t.text.empty()) fail(t, "empty blank node label");
        return t;
      }
      break;
    default:
      break;
  }
  if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
      c == '.') {
    std::size_t begin = pos_;
    if (c == '+' || c == '-') advance();
    bool digits = false;
    while (std::isdigit(static_cast<unsigned char>(cur()))) {
      advance();
      digits = true;
    }
    t.type = TokenType::integer;
    if (cur() == '.' && std::isdigit(static_cast<unsigned char>(at(1)))) {
      advance();
      while (std::isdigit(static_cast<unsigned char>(cur()))) advance();
      digits = true;
      t.type = TokenType::decimal;
    }
    if ((cur() == 'e' || cur() == 'E') && digits) {
      std::size_t save = pos_;
      advance();
      if (cur() == '+' || cur() == '-') advance();
      if (std::isdigit(static_cast<unsigned char>(cur()))) {
        while (std::isdigit(static_cast<unsigned char>(cur()))) advance();
        t.type = TokenType::double_;
      } else {
        column_ -= pos_ - save;
        pos_ = save;
      }
    }
    if (!digits) fail(t, "malformed number");
    t.text = std::string(input_.substr(begin, pos_ - begin));
    return t;
  }
  if (is_name_start(c) || c == ':') {
    t.text = read_name();
    t.type = t.text.find(':') != std::string::npos ? TokenType::prefixed_name
                                                   : TokenType::word;
    return t;
  }
  return single(TokenType::other);
}

const char* to_string(TokenType type) noexcept {
  switch (type) {
    case TokenType::end: return "end of input";
    case TokenType::iri_ref: return "IRI";
    case TokenType::prefixed_name: return "prefixed name";
    case TokenType::blank_label: return "blank node label";
    case TokenType::variable: return "variable";
    case TokenType::string: return "string";
    case TokenType::integer: return "integer";
    case TokenType::decimal: return "decimal";
    case TokenType::double_: return "double";
    case TokenType::lang_tag: return "language tag";
    case TokenType::at_keyword: return "directive";
    case TokenType::word: return "keyword";
    case TokenType::dot: return "'.'";
    case TokenType::semicolon: return "';'";
    case TokenType::comma: return "','";
    case TokenType::lbracket: return "'['";
    case TokenType::rbracket: return "']'";
    case TokenType::lparen: return "'('";
    case TokenType::rparen: return "')'";
    case TokenType::lbrace: return "'{'";
    case TokenType::rbrace: return "'}'";
    case TokenType::datatype_mark: return "'^^'";
    case TokenType::star: return "'*'";
    case TokenType::other: return "character";
  }
  return "token";
}

}  // namespace cqgen::detail
