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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cqgen {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised while reading Turtle, SPARQL or one of the config formats. Line and
// column are 1-based; 0 means "unknown".
class ParseError : public Error {
 public:
  enum class Kind { syntax, unknown_prefix, unsupported_feature };

  ParseError(Kind kind, std::string message, std::size_t line = 0,
             std::size_t column = 0);

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  // The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

// Raised when a graph cannot be lifted into an axiom shape.
class ShapeError : public Error {
 public:
  enum class Kind {
    no_axiom,
    multiple_axioms,
    unsupported_construct,
    dangling_blank_node,
    malformed_expression
  };

  ShapeError(Kind kind, std::string message);

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// A caller broke a documented precondition (ineligible question type,
// spo_to_ss on an SS verbalization, missing slot, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

const char* to_string(ParseError::Kind kind) noexcept;
const char* to_string(ShapeError::Kind kind) noexcept;

}  // namespace cqgen
