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
#include <optional>
#include <string>
#include <string_view>

namespace cqgen {

enum class PlaceholderKind { C, I, OP, DP, DT };

inline constexpr std::string_view kPlaceholderNamespace = "http://example.ns#";

const char* to_string(PlaceholderKind kind) noexcept;
std::optional<PlaceholderKind> placeholder_kind_from_string(std::string_view s);

// A typed artificial IRI such as http://example.ns#OP1.
struct PlaceholderId {
  PlaceholderKind kind = PlaceholderKind::C;
  unsigned number = 1;

  // "OP1"
  std::string slot() const;
  // "<OP1>", the token used inside query templates.
  std::string token() const;
  // "http://example.ns#OP1"
  std::string iri() const;

  // Accepts the full IRI form only.
  static std::optional<PlaceholderId> from_iri(std::string_view iri);
  // Accepts the bare slot form "OP1".
  static std::optional<PlaceholderId> from_slot(std::string_view slot);

  bool is_property() const noexcept {
    return kind == PlaceholderKind::OP || kind == PlaceholderKind::DP;
  }

  auto operator<=>(const PlaceholderId&) const = default;
};

}  // namespace cqgen
