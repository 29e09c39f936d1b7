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

#include "cqgen/placeholder.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace cqgen {

const char* to_string(PlaceholderKind kind) noexcept {
  switch (kind) {
    case PlaceholderKind::C: return "C";
    case PlaceholderKind::I: return "I";
    case PlaceholderKind::OP: return "OP";
    case PlaceholderKind::DP: return "DP";
    case PlaceholderKind::DT: return "DT";
  }
  return "?";
}

std::optional<PlaceholderKind> placeholder_kind_from_string(std::string_view s) {
  if (s == "C") return PlaceholderKind::C;
  if (s == "I") return PlaceholderKind::I;
  if (s == "OP") return PlaceholderKind::OP;
  if (s == "DP") return PlaceholderKind::DP;
  if (s == "DT") return PlaceholderKind::DT;
  return std::nullopt;
}

std::string PlaceholderId::slot() const {
  return to_string(kind) + std::to_string(number);
}

std::string PlaceholderId::token() const { return "<" + slot() + ">"; }

std::string PlaceholderId::iri() const {
  return std::string(kPlaceholderNamespace) + slot();
}

std::optional<PlaceholderId> PlaceholderId::from_slot(std::string_view slot) {
  std::size_t split = 0;
  while (split < slot.size() &&
         std::isupper(static_cast<unsigned char>(slot[split])))
    ++split;
  auto kind = placeholder_kind_from_string(slot.substr(0, split));
  auto digits = slot.substr(split);
  if (!kind || digits.empty() || digits.front() == '0') return std::nullopt;
  unsigned number = 0;
  auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), number);
  if (ec != std::errc{} || end != digits.data() + digits.size() || number == 0)
    return std::nullopt;
  return PlaceholderId{*kind, number};
}

std::optional<PlaceholderId> PlaceholderId::from_iri(std::string_view iri) {
  if (iri.substr(0, kPlaceholderNamespace.size()) != kPlaceholderNamespace)
    return std::nullopt;
  return from_slot(iri.substr(kPlaceholderNamespace.size()));
}

}  // namespace cqgen
