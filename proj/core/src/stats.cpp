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

#include <cctype>
#include <cstdio>
#include <set>

#include "cqgen/dataset.hpp"
#include "cqgen/shape.hpp"
#include "cqgen/text.hpp"
#include "json_compat.hpp"

namespace cqgen {

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool mentions(const std::string& haystack, const std::string& token) {
  std::size_t pos = 0;
  while ((pos = haystack.find(token, pos)) != std::string::npos) {
    const bool left_ok = pos == 0 || !(name_char(haystack[pos - 1]) || haystack[pos - 1] == ':');
    const std::size_t end = pos + token.size();
    const bool right_ok = end == haystack.size() || !name_char(haystack[end]);
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

StatsReport compute_stats(const Dataset& d) {
  std::map<std::string, std::set<std::string>> cq_to_queries;
  std::map<std::string, std::set<std::string>> query_to_cqs;
  std::map<std::string, std::set<QuestionType>> cq_types;
  std::map<QuestionType, std::set<std::string>> query_types;

  for (const auto& q : d.unpaired_queries) {
    const std::string qt = text::normalize_whitespace(q.text);
    query_to_cqs[qt];
    query_types[q.question_type].insert(qt);
  }
  for (const auto& p : d.pairs) {
    const std::string qt = text::normalize_whitespace(p.query.text);
    const std::string ct = text::normalize_whitespace(p.cq.text);
    query_to_cqs[qt].insert(ct);
    cq_to_queries[ct].insert(qt);
    cq_types[ct].insert(p.question_type);
    query_types[p.question_type].insert(qt);
  }

  StatsReport s;
  s.pairs = d.pairs.size();
  s.distinct_cq_templates = cq_to_queries.size();
  s.distinct_query_templates = query_to_cqs.size();
  std::size_t fan = 0;
  for (const auto& [q, cqs] : query_to_cqs) fan += cqs.size();
  if (s.distinct_query_templates) {
    s.avg_cq_per_query_bucket_mean =
        static_cast<double>(fan) / static_cast<double>(s.distinct_query_templates);
    s.ratio_global = static_cast<double>(s.distinct_cq_templates) /
                     static_cast<double>(s.distinct_query_templates);
  }
  if (s.distinct_cq_templates) {
    // Every pair edge is counted once from each side.
    s.avg_query_per_cq =
        static_cast<double>(fan) / static_cast<double>(s.distinct_cq_templates);
  }
  for (QuestionType qt : kAllQuestionTypes) {
    s.question_type_histogram[qt] = 0;
    s.query_type_histogram[qt] = query_types[qt].size();
  }
  for (const auto& [cq, types] : cq_types) {
    for (QuestionType qt : types) ++s.question_type_histogram[qt];
    if (types.size() > 1) ++s.cq_texts_in_multiple_types;
  }
  for (const auto& name : construct_inventory()) {
    ConstructCount c;
    c.total = s.distinct_query_templates;
    for (const auto& [q, cqs] : query_to_cqs) {
      if (mentions(q, name)) ++c.templates;
    }
    s.construct_counts.emplace_back(name, c);
  }
  return s;
}

std::string stats_to_json(const StatsReport& s) {
  Json hist = Json::object();
  Json qhist = Json::object();
  for (const auto& [qt, n] : s.question_type_histogram) hist[to_string(qt)] = n;
  for (const auto& [qt, n] : s.query_type_histogram) qhist[to_string(qt)] = n;
  Json constructs = Json::object();
  for (const auto& [name, c] : s.construct_counts) {
    constructs[name] = Json{{"templates", c.templates}, {"total", c.total}};
  }
  Json j{{"pairs", s.pairs},
         {"distinct_cq_templates", s.distinct_cq_templates},
         {"distinct_query_templates", s.distinct_query_templates},
         {"avg_cq_per_query_bucket_mean", s.avg_cq_per_query_bucket_mean},
         {"avg_query_per_cq", s.avg_query_per_cq},
         {"ratio_global", s.ratio_global},
         {"question_type_histogram", hist},
         {"query_type_histogram", qhist},
         {"cq_texts_in_multiple_types", s.cq_texts_in_multiple_types},
         {"construct_counts", constructs}};
  return j.dump(2) + "\n";
}

std::string stats_to_markdown(const StatsReport& s) {
  std::string out;
  out += "| Summary | Value |\n|---|---:|\n";
  out += "| Distinct CQ templates | " + std::to_string(s.distinct_cq_templates) + " |\n";
  out += "| Distinct query templates | " + std::to_string(s.distinct_query_templates) + " |\n";
  out += "| CQ templates per query template (bucket mean) | " +
         fixed(s.avg_cq_per_query_bucket_mean, 2) + " |\n";
  out += "| CQ templates per query template (global ratio) | " +
         fixed(s.ratio_global, 2) + " |\n";
  out += "| Query templates per CQ template | " + fixed(s.avg_query_per_cq, 2) + " |\n";

  out += "\n| Construct | Query templates | Share |\n|---|---:|---:|\n";
  for (const auto& [name, c] : s.construct_counts) {
    const double pct = c.total ? 100.0 * static_cast<double>(c.templates) /
                                     static_cast<double>(c.total)
                               : 0.0;
    out += "| " + name + " | " + std::to_string(c.templates) + "/" +
           std::to_string(c.total) + " | " + fixed(pct, 2) + "% |\n";
  }

  out += "\n| Question type | CQ templates | Query templates |\n|---|---:|---:|\n";
  for (QuestionType qt : kAllQuestionTypes) {
    auto get = [&](const std::map<QuestionType, std::size_t>& m) {
      auto it = m.find(qt);
      return it == m.end() ? std::size_t{0} : it->second;
    };
    out += std::string("| ") + to_string(qt) + " | " +
           std::to_string(get(s.question_type_histogram)) + " | " +
           std::to_string(get(s.query_type_histogram)) + " |\n";
  }
  return out;
}

}  // namespace cqgen
