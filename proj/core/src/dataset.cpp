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

#include "cqgen/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <tuple>

#include "cqgen/errors.hpp"
#include "cqgen/text.hpp"
#include "json_compat.hpp"

namespace cqgen {

namespace {

constexpr std::string_view kHeader = "# cqgen dataset v1 ";

using Bucket = std::pair<std::string, QuestionType>;

std::vector<std::string> slot_names(const std::vector<PlaceholderId>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) out.push_back(id.slot());
  return out;
}

std::vector<PlaceholderId> slot_ids(const Json& j) {
  std::vector<PlaceholderId> out;
  for (const auto& s : j) {
    auto id = PlaceholderId::from_slot(s.get<std::string>());
    if (!id) throw Error("bad slot '" + s.get<std::string>() + "'");
    out.push_back(*id);
  }
  return out;
}

const char* axiom_name(AxiomKind k) {
  return k == AxiomKind::sub_class_of ? "subclass" : "equivalence";
}

Json meta_json(const DatasetMeta& m) {
  return Json{{"rules_digest", m.rules_digest},
              {"synonyms_digest", m.synonyms_digest},
              {"manifest_digest", m.manifest_digest},
              {"compat_count", m.compat_count}};
}

Json pair_json(const TemplatePair& p) {
  Json choices = Json::object();
  for (const auto& [k, v] : p.cq.synonym_choices) choices[k] = v;
  return Json{{"pair_id", p.pair_id},
              {"shape_id", p.shape_id},
              {"question_type", to_string(p.question_type)},
              {"relation_class", to_string(p.cq.relation_class)},
              {"axiom_kind", axiom_name(p.cq.axiom_kind)},
              {"cq_template", p.cq.text},
              {"query_template", p.query.text},
              {"rule_id", p.cq.rule_id},
              {"synonym_choices", choices},
              {"slots", Json{{"cq", slot_names(p.cq.slots)},
                             {"query", slot_names(p.query.slots)}}}};
}

Json query_json(const QueryTemplate& q) {
  return Json{{"record", "query"},
              {"shape_id", q.shape_id},
              {"question_type", to_string(q.question_type)},
              {"query_template", q.text},
              {"slots", Json{{"query", slot_names(q.slots)}}}};
}

QuestionType question_type(const Json& j) {
  auto qt = question_type_from_string(j.at("question_type").get<std::string>());
  if (!qt) throw Error("unknown question_type");
  return *qt;
}

}  // namespace

std::string make_pair_id(const std::string& shape_id, QuestionType qt,
                         const std::string& cq_text, const std::string& query_text) {
  std::string key = shape_id;
  for (const std::string& part : {std::string(to_string(qt)), cq_text, query_text}) {
    key += '\x1f';
    key += part;
  }
  return "p" + text::hex_digest(key);
}

Dataset build_pairs(const std::vector<CQTemplate>& cqs,
                    const std::vector<QueryTemplate>& queries, DatasetMeta meta) {
  std::map<Bucket, std::vector<const CQTemplate*>> by_bucket;
  for (const auto& cq : cqs) by_bucket[{cq.shape_id, cq.question_type}].push_back(&cq);

  Dataset d;
  d.meta = std::move(meta);
  std::set<std::string> ids;
  for (const auto& q : queries) {
    auto it = by_bucket.find({q.shape_id, q.question_type});
    if (it == by_bucket.end()) {
      d.unpaired_queries.push_back(q);
      continue;
    }
    for (const CQTemplate* cq : it->second) {
      TemplatePair p;
      p.pair_id = make_pair_id(q.shape_id, q.question_type, cq->text, q.text);
      if (!ids.insert(p.pair_id).second) continue;
      p.shape_id = q.shape_id;
      p.question_type = q.question_type;
      p.cq = *cq;
      p.query = q;
      d.pairs.push_back(std::move(p));
    }
  }
  std::stable_sort(d.pairs.begin(), d.pairs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.shape_id, a.question_type, a.cq.text, a.query.text) <
           std::tie(b.shape_id, b.question_type, b.cq.text, b.query.text);
  });
  std::stable_sort(d.unpaired_queries.begin(), d.unpaired_queries.end(),
                   [](const auto& a, const auto& b) {
                     return std::tie(a.shape_id, a.question_type, a.text) <
                            std::tie(b.shape_id, b.question_type, b.text);
                   });
  return d;
}

void write_dataset(const Dataset& d, std::ostream& out) {
  out << kHeader << meta_json(d.meta).dump() << '\n';
  for (const auto& p : d.pairs) out << pair_json(p).dump() << '\n';
  for (const auto& q : d.unpaired_queries) out << query_json(q).dump() << '\n';
}

void write_dataset(const Dataset& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  write_dataset(d, out);
  if (!out) throw Error("write to '" + path + "' failed");
}

Dataset read_dataset(std::istream& in) {
  Dataset d;
  std::string line;
  std::size_t n = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::normalize_whitespace(line).empty()) continue;
    try {
      if (!header) {
        if (!text::starts_with(line, kHeader)) throw Error("missing dataset header");
        Json m = Json::parse(line.substr(kHeader.size()));
        d.meta.rules_digest = m.at("rules_digest").get<std::string>();
        d.meta.synonyms_digest = m.at("synonyms_digest").get<std::string>();
        d.meta.manifest_digest = m.at("manifest_digest").get<std::string>();
        d.meta.compat_count = m.at("compat_count").get<bool>();
        header = true;
        continue;
      }
      Json j = Json::parse(line);
      if (j.value("record", "") == "query") {
        QueryTemplate q;
        q.shape_id = j.at("shape_id").get<std::string>();
        q.question_type = question_type(j);
        q.text = j.at("query_template").get<std::string>();
        q.slots = slot_ids(j.at("slots").at("query"));
        d.unpaired_queries.push_back(std::move(q));
        continue;
      }
      TemplatePair p;
      p.pair_id = j.at("pair_id").get<std::string>();
      p.shape_id = j.at("shape_id").get<std::string>();
      p.question_type = question_type(j);
      auto rc = relation_class_from_string(j.at("relation_class").get<std::string>());
      if (!rc) throw Error("unknown relation_class");
      const std::string axiom = j.at("axiom_kind").get<std::string>();
      if (axiom != "subclass" && axiom != "equivalence") throw Error("unknown axiom_kind");

      p.cq.shape_id = p.shape_id;
      p.cq.question_type = p.question_type;
      p.cq.relation_class = *rc;
      p.cq.axiom_kind =
          axiom == "subclass" ? AxiomKind::sub_class_of : AxiomKind::equivalent_class;
      p.cq.text = j.at("cq_template").get<std::string>();
      p.cq.rule_id = j.at("rule_id").get<std::string>();
      for (const auto& [k, v] : j.at("synonym_choices").items()) {
        p.cq.synonym_choices[k] = v.get<std::string>();
      }
      p.cq.slots = slot_ids(j.at("slots").at("cq"));

      p.query.shape_id = p.shape_id;
      p.query.question_type = p.question_type;
      p.query.text = j.at("query_template").get<std::string>();
      p.query.slots = slot_ids(j.at("slots").at("query"));
      d.pairs.push_back(std::move(p));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(ParseError::Kind::syntax,
                       std::string("malformed dataset record: ") + e.what(), n, 1);
    }
  }
  if (!header) throw ParseError(ParseError::Kind::syntax, "missing dataset header", 1, 1);
  return d;
}

Dataset read_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_dataset(in);
}

}  // namespace cqgen
