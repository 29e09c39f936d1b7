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
#include <string>

#include "cqgen/errors.hpp"
#include "cqgen/materializer.hpp"
#include "json_support.hpp"
#include "support.hpp"

namespace cqgen {
namespace {

using QT = QuestionType;
constexpr auto C = PlaceholderKind::C;
constexpr auto OP = PlaceholderKind::OP;

Vocabulary vocab_from(const std::string& turtle) {
  return extract_vocabulary(rdf::parse_turtle("@prefix ex: <http://ex.org/> .\n" + turtle));
}

Assignment assign(std::initializer_list<std::pair<std::string, std::string>> slots) {
  Assignment a;
  for (const auto& [slot, label] : slots) {
    a[*PlaceholderId::from_slot(slot)] = VocabEntry{"http://ex.org/" + label, label};
  }
  return a;
}

TemplatePair pair_of(const std::string& cq_text, const std::string& query_text) {
  TemplatePair p;
  p.pair_id = "ptest";
  p.shape_id = "s";
  p.cq.text = cq_text;
  p.cq.slots = text::bare_slots(cq_text);
  p.query.text = query_text;
  p.query.slots = text::bracketed_slots(query_text);
  return p;
}

Vocabulary small_vocab() {
  return vocab_from(
      "ex:A a owl:Class . ex:B a owl:Class . ex:D a owl:Class .\n"
      "ex:p a owl:ObjectProperty . ex:q a owl:ObjectProperty .");
}

TEST(Vocabulary, LabelledClass) {
  Vocabulary v = vocab_from("ex:Computer a owl:Class; rdfs:label \"computer\" .");
  EXPECT_EQ(v.classes, (std::vector<VocabEntry>{{"http://ex.org/Computer", "computer"}}));
}

TEST(Vocabulary, LabelFromLocalName) {
  Vocabulary v = vocab_from("ex:executesCode a owl:ObjectProperty .");
  ASSERT_EQ(v.object_properties.size(), 1u);
  EXPECT_EQ(v.object_properties[0].label, "executes code");
}

TEST(Vocabulary, Empty) {
  EXPECT_TRUE(vocab_from("").empty());
  EXPECT_EQ(vocab_from("").skipped, 0u);
}

TEST(Vocabulary, PrefersEnglishAmongLabels) {
  Vocabulary v = vocab_from(
      "ex:Dog a owl:Class; rdfs:label \"Hund\"@de, \"dog\"@en .\n"
      "ex:Cat a owl:Class; rdfs:label \"Katze\"@de .");
  ASSERT_EQ(v.classes.size(), 2u);
  EXPECT_EQ(v.classes[0].label, "dog");
  EXPECT_EQ(v.classes[1].label, "Katze");
}

TEST(Vocabulary, BucketsAndSkipped) {
  Vocabulary v = vocab_from(
      "ex:A a owl:Class . ex:A a owl:Class . ex:p a owl:ObjectProperty .\n"
      "ex:age a owl:DatatypeProperty; rdfs:range xsd:integer .\n"
      "ex:i a owl:NamedIndividual . ex:T a rdfs:Datatype . ex:x rdfs:comment \"?\" .");
  EXPECT_EQ(v.classes.size(), 1u);
  EXPECT_EQ(v.object_properties.size(), 1u);
  EXPECT_EQ(v.data_properties.size(), 1u);
  EXPECT_EQ(v.individuals.size(), 1u);
  EXPECT_EQ(v.datatypes.size(), 2u);
  EXPECT_EQ(v.bucket(PlaceholderKind::DT)[1].iri, rdf::vocab::xsd_integer);
  EXPECT_EQ(v.skipped, 1u);
}

TEST(LabelFromLocalName, Splitting) {
  EXPECT_EQ(label_from_local_name("executesCode"), "executes code");
  EXPECT_EQ(label_from_local_name("has_part"), "has part");
  EXPECT_EQ(label_from_local_name("is-part-of"), "is part of");
  EXPECT_EQ(label_from_local_name("ISO_Code"), "ISO code");
  EXPECT_EQ(label_from_local_name("HTTPServer"), "HTTP server");
  EXPECT_EQ(label_from_local_name("Animal"), "animal");
}

TEST(Enumerate, CountsInjectionsByBruteForce) {
  auto p = pair_of("Does C1 OP1 C2?", "ASK WHERE {<C1> <OP1> <C2>}");
  Vocabulary v = small_vocab();
  auto got = enumerate_assignments(p, v, 100, 0);
  std::set<Assignment> expected;
  for (const auto& c1 : v.classes)
    for (const auto& op : v.object_properties)
      for (const auto& c2 : v.classes)
        if (c1.iri != c2.iri)
          expected.insert({{{C, 1}, c1}, {{OP, 1}, op}, {{C, 2}, c2}});
  EXPECT_EQ(expected.size(), 12u);
  EXPECT_EQ(got.size(), 12u);
  EXPECT_EQ(std::set<Assignment>(got.begin(), got.end()), expected);
}

TEST(Enumerate, LimitOneIsDeterministic) {
  auto p = pair_of("Does C1 OP1 C2?", "ASK WHERE {<C1> <OP1> <C2>}");
  auto a = enumerate_assignments(p, small_vocab(), 1, 42);
  auto b = enumerate_assignments(p, small_vocab(), 1, 42);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a, b);
}

TEST(Enumerate, SampledAssignmentsAreDistinctAndInjective) {
  std::string onto;
  for (int i = 0; i < 30; ++i) onto += "ex:K" + std::to_string(i) + " a owl:Class .\n";
  onto += "ex:p a owl:ObjectProperty .";
  Vocabulary v = vocab_from(onto);
  auto p = pair_of("Does C1 OP1 C2 or C3?", "ASK WHERE {<C1> <OP1> <C2>, <C3>}");
  auto a = enumerate_assignments(p, v, 50, 7);
  EXPECT_EQ(a.size(), 50u);
  EXPECT_EQ(std::set<Assignment>(a.begin(), a.end()).size(), 50u);
  for (const auto& x : a) {
    std::set<std::string> iris;
    for (const auto& [id, e] : x) iris.insert(e.iri);
    EXPECT_EQ(iris.size(), x.size());
  }
  EXPECT_EQ(a, enumerate_assignments(p, v, 50, 7));
  EXPECT_NE(a, enumerate_assignments(p, v, 50, 8));
}

TEST(Enumerate, MissingKindThrows) {
  auto p = pair_of("Does C1 OP1 C2?", "ASK WHERE {<C1> <OP1> <C2>}");
  EXPECT_THROW(enumerate_assignments(p, vocab_from("ex:A a owl:Class . ex:B a owl:Class ."), 10, 0),
               PreconditionError);
}

TEST(Enumerate, KindDiscipline) {
  auto p = pair_of("Does C1 OP1 C2?", "ASK WHERE {<C1> <OP1> <C2>}");
  Vocabulary v = small_vocab();
  for (const auto& a : enumerate_assignments(p, v, 100, 0)) {
    for (const auto& [id, e] : a) {
      const auto& b = v.bucket(id.kind);
      EXPECT_NE(std::find(b.begin(), b.end(), e), b.end());
    }
  }
}

TEST(Inflect, OrthographicRules) {
  EXPECT_EQ(inflect_verb("execute", VerbForm::third_singular), "executes");
  EXPECT_EQ(inflect_verb("eats", VerbForm::base), "eat");
  EXPECT_EQ(inflect_verb("carries out", VerbForm::base), "carry out");
  EXPECT_EQ(inflect_verb("carry out", VerbForm::third_singular), "carries out");
  EXPECT_EQ(inflect_verb("teaches", VerbForm::base), "teach");
  EXPECT_EQ(inflect_verb("teach", VerbForm::third_singular), "teaches");
  EXPECT_EQ(inflect_verb("play", VerbForm::third_singular), "plays");
  EXPECT_EQ(inflect_verb("go", VerbForm::third_singular), "goes");
  EXPECT_EQ(inflect_verb("has part", VerbForm::base), "have part");
  EXPECT_EQ(inflect_verb("is part of", VerbForm::plural), "are part of");
  EXPECT_EQ(inflect_verb("is part of", VerbForm::third_singular), "is part of");
  EXPECT_EQ(inflect_verb("eats", VerbForm::plural), "eat");
}

TEST(Inflect, ExceptionsFile) {
  VerbExceptions e = parse_verb_exceptions("# irregular\nfocus -> focuses\ncan → can\n");
  EXPECT_EQ(inflect_verb("focuses on", VerbForm::base, e), "focus on");
  EXPECT_EQ(inflect_verb("focus on", VerbForm::third_singular, e), "focuses on");
  EXPECT_EQ(inflect_verb("can", VerbForm::third_singular, e), "can");
  EXPECT_EQ(inflect_verb("has", VerbForm::base, e), "have");
  EXPECT_THROW(parse_verb_exceptions("focus focuses"), ParseError);
  EXPECT_THROW(parse_verb_exceptions("focus on -> focuses on"), ParseError);
}

TEST(MaterializeCq, StatementFrame) {
  EXPECT_EQ(materialize_cq("Every C1 OP1 C2",
                           assign({{"C1", "computer"}, {"OP1", "executes"}, {"C2", "code"}})),
            "Every computer executes code");
}

TEST(MaterializeCq, AskWithDoSupport) {
  EXPECT_EQ(materialize_cq("Does every C1 OP1 C2?",
                           assign({{"C1", "animal"}, {"OP1", "eats"}, {"C2", "grass"}})),
            "Does every animal eat grass?");
}

TEST(MaterializeCq, Agreement) {
  auto a = assign({{"C1", "animal"}, {"OP1", "eats"}, {"C2", "grass"}});
  EXPECT_EQ(materialize_cq("What OP1 a C2?", a), "What eats a grass?");
  EXPECT_EQ(materialize_cq("What things OP1 C2?", a), "What things eat grass?");
  EXPECT_EQ(materialize_cq("How many things does C1 OP1?", a), "How many things does animal eat?");
  EXPECT_EQ(materialize_cq("Is every C1 something that OP1 C2?", a),
            "Is every animal something that eats grass?");
  auto b = assign({{"C1", "leaf"}, {"OP1", "is part of"}});
  EXPECT_EQ(materialize_cq("What things does C1 OP1?", b), "What things is leaf part of?");
  EXPECT_EQ(materialize_cq("Which things OP1 a C1?", b), "Which things are part of a leaf?");
}

TEST(MaterializeCq, Articles) {
  auto a = assign({{"C1", "apple"}, {"C2", "university"}, {"C3", "tree"}, {"C4", "hour"}});
  EXPECT_EQ(materialize_cq("Is a C3 a C1?", a), "Is a tree an apple?");
  EXPECT_EQ(materialize_cq("an C1 or an C2 or a C4?", a), "An apple or a university or an hour?");
}

TEST(MaterializeCq, UnassignedSlotThrows) {
  EXPECT_THROW(materialize_cq("Is C1 a C2?", assign({{"C1", "x"}})), PreconditionError);
}

TEST(MaterializeQuery, PureSubstitution) {
  Assignment a = {{{C, 1}, {"http://x/x", "x"}}, {{OP, 1}, {"http://x/y", "y"}},
                  {{C, 2}, {"http://x/z", "z"}}};
  EXPECT_EQ(materialize_query("ASK WHERE {<C1> rdfs:subClassOf [a owl:Restriction; "
                              "owl:onProperty <OP1>; owl:someValuesFrom <C2>]}",
                              a),
            "ASK WHERE {<http://x/x> rdfs:subClassOf [a owl:Restriction; "
            "owl:onProperty <http://x/y>; owl:someValuesFrom <http://x/z>]}");
  EXPECT_THROW(materialize_query("ASK WHERE {<C3> a owl:Class}", a), PreconditionError);
}

TEST(MaterializeDataset, DeterministicAndComplete) {
  Dataset d;
  d.pairs.push_back(pair_of("Does C1 OP1 C2?", "ASK WHERE {<C1> <OP1> <C2>}"));
  d.pairs.push_back(pair_of("Is C1 OP1 I1?", "ASK WHERE {<C1> <OP1> <I1>}"));
  d.pairs[1].pair_id = "pother";
  Vocabulary v = small_vocab();
  auto r1 = materialize_dataset(d, v, 5, 3);
  auto r2 = materialize_dataset(d, v, 5, 3);
  EXPECT_EQ(r1.pairs, r2.pairs);
  EXPECT_EQ(r1.pairs.size(), 5u);
  ASSERT_EQ(r1.skipped.size(), 1u);
  EXPECT_EQ(r1.skipped[0].first, "pother");
  for (const auto& m : r1.pairs) {
    EXPECT_TRUE(text::bare_slots(m.cq_text).empty());
    EXPECT_EQ(m.query_text.find("<C"), std::string::npos);
    auto j = nlohmann::json::parse(to_json_line(m));
    EXPECT_EQ(j.at("pair_id"), m.pair_id);
    EXPECT_EQ(j.at("cq"), m.cq_text);
  }
}

}  // namespace
}  // namespace cqgen
