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

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include "cqgen/dataset.hpp"
#include "cqgen/errors.hpp"
#include "cqgen/pipeline.hpp"
#include "json_support.hpp"
#include "support.hpp"

namespace cqgen {
namespace {

using QT = QuestionType;

CQTemplate cq(const std::string& shape, QT qt, const std::string& text) {
  CQTemplate t;
  t.shape_id = shape;
  t.question_type = qt;
  t.relation_class = RelationClass::SPO;
  t.text = text;
  t.rule_id = "r";
  t.slots = text::bare_slots(text);
  return t;
}

QueryTemplate query(const std::string& shape, QT qt, const std::string& text) {
  QueryTemplate q;
  q.shape_id = shape;
  q.question_type = qt;
  q.text = text;
  q.slots = text::bracketed_slots(text);
  return q;
}

Dataset three_pairs() {
  std::vector<CQTemplate> cqs = {cq("s1", QT::ask, "Does C1 OP1 C2?"),
                                 cq("s1", QT::ask, "Does every C1 OP1 C2?"),
                                 cq("s2", QT::select_lhs, "What OP1 C2?")};
  cqs[1].synonym_choices = {{"What", "Which"}};
  std::vector<QueryTemplate> qs = {
      query("s1", QT::ask, "ASK WHERE {<C1> rdfs:subClassOf <C2>}"),
      query("s2", QT::select_lhs, "SELECT ?x WHERE {?x rdfs:subClassOf <C2>}"),
      query("s2", QT::count_lhs, "SELECT (COUNT(?x) AS ?n) WHERE {?x rdfs:subClassOf <C2>}")};
  DatasetMeta meta{"r", "s", "m", true};
  return build_pairs(cqs, qs, meta);
}

TEST(PairId, FnvVectors) {
  // Published FNV-1a 64-bit test vectors.
  EXPECT_EQ(text::fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(text::fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(text::fnv1a("foobar"), 0x85944171f73967e8ULL);
  EXPECT_EQ(text::hex_digest("a"), "af63dc4c8601ec8c");
}

TEST(PairId, StableAndSensitiveToEveryField) {
  const std::string id = make_pair_id("s", QT::ask, "c", "q");
  EXPECT_EQ(id.size(), 17u);
  EXPECT_EQ(id[0], 'p');
  EXPECT_EQ(id, make_pair_id("s", QT::ask, "c", "q"));
  EXPECT_EQ(id, "p" + text::hex_digest("s\x1f" "ASK\x1f" "c\x1f" "q"));
  EXPECT_NE(id, make_pair_id("t", QT::ask, "c", "q"));
  EXPECT_NE(id, make_pair_id("s", QT::select_lhs, "c", "q"));
  EXPECT_NE(id, make_pair_id("s", QT::ask, "d", "q"));
  EXPECT_NE(id, make_pair_id("s", QT::ask, "c", "r"));
}

TEST(BuildPairs, CartesianInsideBucket) {
  std::vector<CQTemplate> cqs;
  for (int i = 0; i < 4; ++i) cqs.push_back(cq("s", QT::ask, "Q" + std::to_string(i) + "?"));
  Dataset d = build_pairs(cqs, {query("s", QT::ask, "ASK WHERE {}")});
  EXPECT_EQ(d.pairs.size(), 4u);
  EXPECT_TRUE(d.unpaired_queries.empty());
}

TEST(BuildPairs, EmptyBucketKeepsQuery) {
  Dataset d = build_pairs({cq("s", QT::ask, "Q?")},
                          {query("s", QT::ask, "ASK WHERE {}"),
                           query("s", QT::select_lhs, "SELECT ?x WHERE {?x a <C1>}")});
  EXPECT_EQ(d.pairs.size(), 1u);
  ASSERT_EQ(d.unpaired_queries.size(), 1u);
  EXPECT_EQ(compute_stats(d).distinct_query_templates, 2u);
}

TEST(BuildPairs, BucketsAreIndependent) {
  std::vector<CQTemplate> cqs;
  std::vector<QueryTemplate> qs;
  for (std::string s : {"a", "b"}) {
    cqs.push_back(cq(s, QT::ask, s + " one?"));
    cqs.push_back(cq(s, QT::ask, s + " two?"));
    qs.push_back(query(s, QT::ask, "ASK WHERE {<" + s + ">}"));
  }
  Dataset d = build_pairs(cqs, qs);
  EXPECT_EQ(d.pairs.size(), 4u);
  for (const auto& p : d.pairs) {
    EXPECT_EQ(p.cq.shape_id, p.shape_id);
    EXPECT_EQ(p.query.shape_id, p.shape_id);
    EXPECT_EQ(p.cq.question_type, p.question_type);
    EXPECT_EQ(p.query.question_type, p.question_type);
  }
}

TEST(BuildPairs, RepeatedCombinationKeepsFirstProvenance) {
  auto first = cq("s", QT::ask, "Q?");
  auto second = first;
  second.rule_id = "other";
  Dataset d = build_pairs({first, second}, {query("s", QT::ask, "ASK WHERE {}")});
  ASSERT_EQ(d.pairs.size(), 1u);
  EXPECT_EQ(d.pairs[0].cq.rule_id, "r");
}

TEST(BuildPairs, SortedWithUniqueIds) {
  Dataset d = three_pairs();
  std::set<std::string> ids;
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    EXPECT_TRUE(ids.insert(d.pairs[i].pair_id).second);
    if (i) {
      const auto& a = d.pairs[i - 1];
      const auto& b = d.pairs[i];
      EXPECT_LE(std::tie(a.shape_id, a.question_type, a.cq.text),
                std::tie(b.shape_id, b.question_type, b.cq.text));
    }
  }
}

TEST(DatasetFile, RoundTrip) {
  Dataset d = three_pairs();
  ASSERT_EQ(d.pairs.size(), 3u);
  std::stringstream buf;
  write_dataset(d, buf);
  EXPECT_EQ(read_dataset(buf), d);
}

TEST(DatasetFile, EmptyDatasetIsHeaderOnly) {
  std::stringstream buf;
  write_dataset(Dataset{}, buf);
  const std::string s = buf.str();
  EXPECT_TRUE(text::starts_with(s, "# cqgen dataset v1 "));
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 1);
  EXPECT_EQ(read_dataset(buf), Dataset{});
}

TEST(DatasetFile, TruncatedLineIsNamed) {
  std::stringstream buf;
  write_dataset(three_pairs(), buf);
  std::string s = buf.str();
  s.resize(s.size() - 20);
  std::stringstream broken(s);
  try {
    read_dataset(broken);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
  }
}

TEST(DatasetFile, MissingHeader) {
  std::stringstream buf("{\"pair_id\":\"p\"}\n");
  EXPECT_THROW(read_dataset(buf), ParseError);
  std::stringstream empty("");
  EXPECT_THROW(read_dataset(empty), ParseError);
}

TEST(Stats, FourCqsOneQuery) {
  std::vector<CQTemplate> cqs;
  for (int i = 0; i < 4; ++i) cqs.push_back(cq("s", QT::ask, "Q" + std::to_string(i) + "?"));
  StatsReport s = compute_stats(build_pairs(cqs, {query("s", QT::ask, "ASK WHERE {}")}));
  EXPECT_EQ(s.pairs, 4u);
  EXPECT_EQ(s.distinct_cq_templates, 4u);
  EXPECT_EQ(s.distinct_query_templates, 1u);
  EXPECT_DOUBLE_EQ(s.avg_cq_per_query_bucket_mean, 4.0);
  EXPECT_DOUBLE_EQ(s.avg_query_per_cq, 1.0);
  EXPECT_DOUBLE_EQ(s.ratio_global, 4.0);
  EXPECT_EQ(s.question_type_histogram.at(QT::ask), 4u);
}

TEST(Stats, EmptyDataset) {
  StatsReport s = compute_stats(Dataset{});
  EXPECT_EQ(s.pairs, 0u);
  EXPECT_EQ(s.distinct_cq_templates, 0u);
  EXPECT_EQ(s.distinct_query_templates, 0u);
  EXPECT_EQ(s.avg_cq_per_query_bucket_mean, 0.0);
  EXPECT_EQ(s.avg_query_per_cq, 0.0);
  EXPECT_EQ(s.ratio_global, 0.0);
  EXPECT_EQ(s.construct_counts.size(), construct_inventory().size());
}

TEST(Stats, WhitespaceIsNormalizedBeforeCounting) {
  Dataset d = build_pairs({cq("s", QT::ask, "Q  one?"), cq("t", QT::ask, "Q one?")},
                          {query("s", QT::ask, "ASK WHERE {}"),
                           query("t", QT::ask, "ASK  WHERE {}")});
  StatsReport s = compute_stats(d);
  EXPECT_EQ(s.distinct_cq_templates, 1u);
  EXPECT_EQ(s.distinct_query_templates, 1u);
}

TEST(Stats, MarkdownHasTheThreeTables) {
  const std::string md = stats_to_markdown(compute_stats(three_pairs()));
  EXPECT_NE(md.find("| Summary |"), std::string::npos);
  EXPECT_NE(md.find("| Construct |"), std::string::npos);
  EXPECT_NE(md.find("| Question type |"), std::string::npos);
}

TEST(Stats, ShippedCorpusInvariants) {
  Dataset d = testing::shipped_generation().dataset;
  StatsReport s = compute_stats(d);
  EXPECT_LE(s.distinct_query_templates, s.pairs + d.unpaired_queries.size());
  EXPECT_LE(s.distinct_cq_templates, s.pairs);
  // Recount the per-type histogram from raw pairs.
  std::map<QT, std::set<std::string>> per_type;
  for (const auto& p : d.pairs) per_type[p.question_type].insert(text::normalize_whitespace(p.cq.text));
  std::size_t sum = 0;
  for (const auto& [qt, set] : per_type) {
    EXPECT_EQ(s.question_type_histogram.at(qt), set.size());
    sum += set.size();
  }
  EXPECT_EQ(sum, s.distinct_cq_templates + s.cq_texts_in_multiple_types);
}

TEST(Stats, MatchesIndependentRecount) {
  testing::TempDir dir;
  write_dataset(testing::shipped_generation().dataset, (dir / "ds.jsonl").string());
  const std::string cmd = std::string(CQGEN_PYTHON) + " " +
                          (testing::source_dir() / "tests/oracle/recount_stats.py").string() +
                          " " + (dir / "ds.jsonl").string() + " > " + (dir / "oracle.json").string();
  ASSERT_EQ(std::system(cmd.c_str()), 0) << cmd;
  auto oracle = nlohmann::json::parse(testing::slurp(dir / "oracle.json"));
  auto ours = nlohmann::json::parse(
      stats_to_json(compute_stats(read_dataset((dir / "ds.jsonl").string()))));
  EXPECT_EQ(ours, oracle) << ours.dump(2) << "\n---\n" << oracle.dump(2);
}

}  // namespace
}  // namespace cqgen
