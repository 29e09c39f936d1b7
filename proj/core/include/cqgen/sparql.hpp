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

// Reader for the SPARQL subset used by query templates and query corpora:
// ASK / SELECT with one group graph pattern, COUNT projections and UNION.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cqgen/rdf.hpp"

namespace cqgen {

struct SparqlQuery {
  enum class Form { ask, select };

  Form form = Form::ask;
  bool distinct = false;
  bool select_all = false;
  // Projected variable names without '?'. For a COUNT projection this is the
  // counted variable.
  std::vector<std::string> projection;
  bool count = false;
  // All triples of the WHERE clause, UNION branches merged.
  rdf::Graph pattern;
  bool uses_union = false;
};

// Throws ParseError (unsupported_feature for FILTER, OPTIONAL, property
// paths and other constructs outside the subset).
SparqlQuery parse_sparql(std::string_view query);

}  // namespace cqgen
