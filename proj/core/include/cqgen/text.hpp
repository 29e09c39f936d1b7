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

// Small text helpers shared by the generators and the coverage matcher.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cqgen/placeholder.hpp"

namespace cqgen::text {

// Collapses whitespace runs to one space and trims both ends.
std::string normalize_whitespace(std::string_view s);

std::vector<std::string> split_words(std::string_view s);

std::string to_lower(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// Distinct slots of a CQ text (bare words such as "OP1"), first occurrence
// order.
std::vector<PlaceholderId> bare_slots(std::string_view s);

// Distinct slots of a query text (tokens such as "<OP1>"), first occurrence
// order.
std::vector<PlaceholderId> bracketed_slots(std::string_view s);

// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::uint64_t fnv1a(std::string_view data);
std::string hex_digest(std::string_view data);

// Reads a whole file; throws cqgen::Error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace cqgen::text
