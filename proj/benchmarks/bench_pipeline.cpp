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

#include <benchmark/benchmark.h>

#include <string>

#include "cqgen/coverage.hpp"
#include "cqgen/pipeline.hpp"
#include "cqgen/text.hpp"

namespace {

const std::string kData = std::string(CQGEN_SOURCE_DIR) + "/data";

void BM_ParseTurtle(benchmark::State& state) {
  const std::string doc = cqgen::text::read_file(kData + "/ontology/sample.ttl");
  for (auto _ : state) benchmark::DoNotOptimize(cqgen::rdf::parse_turtle(doc));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * doc.size()));
}
BENCHMARK(BM_ParseTurtle);

void BM_LoadShapes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cqgen::load_shape_corpus(kData + "/shapes"));
}
BENCHMARK(BM_LoadShapes);

void BM_Generate(benchmark::State& state) {
  const auto corpus = cqgen::load_shape_corpus(kData + "/shapes");
  const auto rules = cqgen::parse_rules(cqgen::text::read_file(kData + "/rules.cfg"));
  const auto syn = cqgen::parse_synonyms(cqgen::text::read_file(kData + "/synonyms.cfg"));
  for (auto _ : state) {
    auto r = cqgen::generate_dataset(corpus.shapes, rules, syn, cqgen::CountSyntax::standard);
    benchmark::DoNotOptimize(r.dataset.pairs.size());
  }
}
BENCHMARK(BM_Generate)->Unit(benchmark::kMillisecond);

void BM_CanonicalizeQuery(benchmark::State& state) {
  const std::string q =
      "PREFIX ex: <http://example.org/>\n"
      "SELECT (COUNT(?p) AS ?count) WHERE { ex:Cow rdfs:subClassOf [ owl:onProperty ?p ; "
      "owl:someValuesFrom ex:Grass ; a owl:Restriction ] }";
  for (auto _ : state) benchmark::DoNotOptimize(cqgen::canonicalize_query(q));
}
BENCHMARK(BM_CanonicalizeQuery);

}  // namespace

BENCHMARK_MAIN();
