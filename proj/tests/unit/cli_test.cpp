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

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "cqgen/dataset.hpp"
#include "json_support.hpp"
#include "support.hpp"

namespace cqgen {
namespace {

using testing::run_cli;

std::string data(const std::string& name) { return (testing::data_dir() / name).string(); }

testing::CliRun generate_into(const testing::TempDir& dir, const std::string& shapes,
                              const std::string& out = "ds.jsonl") {
  return run_cli({"generate", "--shapes", shapes, "--rules", data("rules.cfg"), "--synonyms",
                  data("synonyms.cfg"), "--out", (dir / out).string(), "--report",
                  (dir / "skips.txt").string()});
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"generate", "--shapes", "x"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"materialize", "--dataset", "a", "--ontology", "b", "--limit", "many"}).code,
            cli::kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
}

TEST(Cli, InputErrors) {
  testing::TempDir dir;
  EXPECT_EQ(generate_into(dir, (dir / "missing").string()).code, cli::kInputError);
  testing::spit(dir / "bad.jsonl", "not a dataset\n");
  auto r = run_cli({"stats", "--dataset", (dir / "bad.jsonl").string()});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("bad.jsonl"), std::string::npos);
  testing::spit(dir / "rules.cfg", "id = x\n");
  r = run_cli({"generate", "--shapes", testing::shapes_dir().string(), "--rules",
               (dir / "rules.cfg").string(), "--synonyms", data("synonyms.cfg")});
  EXPECT_EQ(r.code, cli::kInputError);
}

TEST(Cli, UndeclaredMarkerIsAnInputError) {
  testing::TempDir dir;
  testing::spit(dir / "rules.cfg",
                "id = r1\nrelation = SPO\naxiom = subclass\ntype = ASK\n"
                "template = Does {LHS} [never] {VERB} {RHS}?\n");
  auto r = run_cli({"generate", "--shapes", testing::shapes_dir().string(), "--rules",
                    (dir / "rules.cfg").string(), "--synonyms", data("synonyms.cfg")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("[never]"), std::string::npos);
}

TEST(Cli, SingleHasValueShape) {
  testing::TempDir dir;
  std::filesystem::create_directories(dir / "shapes");
  std::filesystem::copy_file(testing::shapes_dir() / "has_value_class.ttl",
                             dir / "shapes" / "has_value_class.ttl");
  auto r = generate_into(dir, (dir / "shapes").string());
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  Dataset d = read_dataset((dir / "ds.jsonl").string());
  std::set<std::string> queries;
  bool found = false;
  for (const auto& p : d.pairs) {
    queries.insert(p.query.text);
    if (p.question_type == QuestionType::ask && p.cq.text == "Does C2 OP1 C1?") found = true;
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(queries.size(), 7u);
  EXPECT_NE(testing::slurp(dir / "skips.txt").find("warnings:"), std::string::npos);
}

TEST(Cli, RerunsAreByteIdentical) {
  testing::TempDir dir;
  ASSERT_EQ(generate_into(dir, testing::shapes_dir().string(), "a.jsonl").code, cli::kOk);
  ASSERT_EQ(generate_into(dir, testing::shapes_dir().string(), "b.jsonl").code, cli::kOk);
  EXPECT_EQ(testing::slurp(dir / "a.jsonl"), testing::slurp(dir / "b.jsonl"));

  const std::string onto = data("ontology/sample.ttl");
  for (const char* name : {"m1.jsonl", "m2.jsonl"}) {
    auto r = run_cli({"materialize", "--dataset", (dir / "a.jsonl").string(), "--ontology", onto,
                      "--seed", "5", "--limit", "2", "--out", (dir / name).string()});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
  }
  const std::string m1 = testing::slurp(dir / "m1.jsonl");
  EXPECT_FALSE(m1.empty());
  EXPECT_EQ(m1, testing::slurp(dir / "m2.jsonl"));
  std::istringstream lines(m1);
  std::string line;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("cq") && j.contains("query") && j.contains("assignment"));
  }
}

TEST(Cli, StatsAndMarkdown) {
  testing::TempDir dir;
  ASSERT_EQ(generate_into(dir, testing::shapes_dir().string()).code, cli::kOk);
  auto r = run_cli({"stats", "--dataset", (dir / "ds.jsonl").string(), "--markdown",
                    (dir / "stats.md").string()});
  ASSERT_EQ(r.code, cli::kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j.at("pairs").get<std::size_t>(), 0u);
  EXPECT_NE(testing::slurp(dir / "stats.md").find("| Question type |"), std::string::npos);
}

TEST(Cli, CoverageOfNothingSucceeds) {
  testing::TempDir dir;
  ASSERT_EQ(generate_into(dir, testing::shapes_dir().string()).code, cli::kOk);
  testing::spit(dir / "empty.rq", "");
  auto r = run_cli({"coverage", "--dataset", (dir / "ds.jsonl").string(), "--queries",
                    (dir / "empty.rq").string(), "--report", (dir / "cov.json").string()});
  EXPECT_EQ(r.code, cli::kOk);
  auto j = nlohmann::json::parse(testing::slurp(dir / "cov.json"));
  EXPECT_EQ(j.at("queries").at("total"), 0);
}

TEST(Cli, Verbalize) {
  auto r = run_cli({"verbalize", "--shapes", testing::shapes_dir().string()});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(static_cast<std::size_t>(std::count(r.out.begin(), r.out.end(), '\n')),
            list_shape_files(testing::shapes_dir().string()).size());
}

}  // namespace
}  // namespace cqgen
