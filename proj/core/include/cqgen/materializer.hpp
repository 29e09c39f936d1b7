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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cqgen/dataset.hpp"
#include "cqgen/placeholder.hpp"
#include "cqgen/rdf.hpp"

namespace cqgen {

struct VocabEntry {
  std::string iri;
  std::string label;

  bool operator==(const VocabEntry&) const = default;
  auto operator<=>(const VocabEntry&) const = default;
};

struct Vocabulary {
  std::vector<VocabEntry> classes;
  std::vector<VocabEntry> object_properties;
  std::vector<VocabEntry> data_properties;
  std::vector<VocabEntry> individuals;
  std::vector<VocabEntry> datatypes;
  // IRI subjects with no recognized rdf:type.
  std::size_t skipped = 0;

  const std::vector<VocabEntry>& bucket(PlaceholderKind kind) const;
  bool empty() const;
};

// "executesCode" -> "executes code"; all-caps tokens keep their case.
std::string label_from_local_name(std::string_view local);

Vocabulary extract_vocabulary(const rdf::Graph& graph);

using Assignment = std::map<PlaceholderId, VocabEntry>;

// Slots of the pair: CQ slots, then query-only slots.
std::vector<PlaceholderId> pair_slots(const TemplatePair& pair);

// Kind-respecting injective assignments. When the whole space fits in
// `limit` it is enumerated in order; otherwise `limit` distinct assignments
// are drawn with a generator seeded by `seed`. Throws PreconditionError
// when a bucket cannot supply the slots of its kind.
std::vector<Assignment> enumerate_assignments(const TemplatePair& pair,
                                              const Vocabulary& vocab,
                                              std::size_t limit, std::uint64_t seed);

// `plural` is `base` except that "be" becomes "are".
enum class VerbForm { third_singular, base, plural };

// base form -> third person singular, on top of the orthographic rules.
struct VerbExceptions {
  std::map<std::string, std::string> third_singular;
};

// Built-in irregulars (have, be, do, go).
const VerbExceptions& default_verb_exceptions();

// Lines `base -> 3sg`; '#' comments. Throws ParseError.
VerbExceptions parse_verb_exceptions(std::string_view document);

// Inflects the first token of a property label.
std::string inflect_verb(std::string_view label, VerbForm form,
                         const VerbExceptions& exceptions = default_verb_exceptions());

struct MaterializedPair {
  std::string pair_id;
  Assignment assignment;
  std::string cq_text;
  std::string query_text;

  bool operator==(const MaterializedPair&) const = default;
};

// Fills a CQ text: labels for slots, verb agreement, a/an, capital first
// letter. Throws PreconditionError on an unassigned slot.
std::string materialize_cq(std::string_view cq_text, const Assignment& a,
                           const VerbExceptions& exceptions = default_verb_exceptions());

// Replaces `<C1>`-style tokens with `<iri>`.
std::string materialize_query(std::string_view query_text, const Assignment& a);

MaterializedPair fill_templates(const TemplatePair& pair, const Assignment& a,
                                const VerbExceptions& exceptions = default_verb_exceptions());

struct MaterializeResult {
  std::vector<MaterializedPair> pairs;
  // pair id -> reason
  std::vector<std::pair<std::string, std::string>> skipped;
};

// Per-pair seeds are derived from `seed` and the pair id.
MaterializeResult materialize_dataset(const Dataset& d, const Vocabulary& vocab,
                                      std::size_t limit, std::uint64_t seed,
                                      const VerbExceptions& exceptions =
                                          default_verb_exceptions());

// One JSON line {pair_id, cq, query, assignment}.
std::string to_json_line(const MaterializedPair& m);

}  // namespace cqgen
