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

#include <string>

#include "cqgen/errors.hpp"
#include "cqgen/rdf.hpp"
#include "support.hpp"

namespace cqgen {
namespace {

using rdf::Graph;
using rdf::Term;
namespace vocab = rdf::vocab;

const std::string kHasValueListing = R"(<http://example.ns#OP1> a owl:ObjectProperty .
<http://example.ns#C1> a owl:Class .

<http://example.ns#C2> a owl:Class; rdfs:subClassOf [
    a owl:Restriction;
    owl:onProperty <http://example.ns#OP1>;
    owl:hasValue <http://example.ns#C1>; ] .
)";

Term ex(const std::string& local) { return Term::iri("http://example.ns#" + local); }

ParseError::Kind parse_error_kind(const std::string& doc) {
  try {
    rdf::parse_turtle(doc);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << doc;
  return ParseError::Kind::syntax;
}

TEST(Turtle, SingleDeclaration) {
  Graph g = rdf::parse_turtle("<http://example.ns#C1> a owl:Class .");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.triples()[0].predicate, Term::iri(vocab::rdf_type));
  EXPECT_EQ(g.triples()[0].object, Term::iri(vocab::owl_class));
}

TEST(Turtle, EmptyDocument) {
  EXPECT_TRUE(rdf::parse_turtle("").empty());
  EXPECT_TRUE(rdf::parse_turtle("  # only a comment\n").empty());
}

TEST(Turtle, HasValueListingExpandsToHandCountedTriples) {
  // Written out by hand from the listing, one triple per line.
  Graph expected;
  const Term b = Term::blank("r");
  expected.add(ex("OP1"), Term::iri(vocab::rdf_type), Term::iri(vocab::owl_object_property));
  expected.add(ex("C1"), Term::iri(vocab::rdf_type), Term::iri(vocab::owl_class));
  expected.add(ex("C2"), Term::iri(vocab::rdf_type), Term::iri(vocab::owl_class));
  expected.add(ex("C2"), Term::iri(vocab::rdfs_sub_class_of), b);
  expected.add(b, Term::iri(vocab::rdf_type), Term::iri(vocab::owl_restriction));
  expected.add(b, Term::iri(vocab::owl_on_property), ex("OP1"));
  expected.add(b, Term::iri(vocab::owl_has_value), ex("C1"));

  Graph g = rdf::parse_turtle(kHasValueListing);
  EXPECT_EQ(g.size(), expected.size());
  EXPECT_EQ(g.size(), 7u);
  EXPECT_TRUE(rdf::isomorphic(g, expected));
}

TEST(Turtle, DocumentOrderIsKept) {
  Graph g = rdf::parse_turtle(kHasValueListing);
  EXPECT_EQ(g.triples()[0].subject, ex("OP1"));
  EXPECT_EQ(g.triples()[1].subject, ex("C1"));
  EXPECT_EQ(g.triples()[3].predicate, Term::iri(vocab::rdfs_sub_class_of));
}

TEST(Turtle, DuplicatesCollapse) {
  Graph g = rdf::parse_turtle("@prefix ex: <http://x/> .\nex:a ex:b ex:c . ex:a ex:b ex:c , ex:c .");
  EXPECT_EQ(g.size(), 1u);
}

TEST(Turtle, PrefixesAndLiterals) {
  Graph g = rdf::parse_turtle(R"(@prefix ex: <http://x/> .
PREFIX y: <http://y/>
ex:s ex:p "plain", "hi"@en, "5"^^xsd:integer, 7, 2.5, 1e3, true, y:o .)");
  ASSERT_EQ(g.size(), 8u);
  const auto& t = g.triples();
  EXPECT_EQ(t[0].object, Term::literal("plain"));
  EXPECT_EQ(t[1].object, Term::literal("hi", "", "en"));
  EXPECT_EQ(t[2].object, Term::literal("5", vocab::xsd_integer));
  EXPECT_EQ(t[3].object, Term::literal("7", vocab::xsd_integer));
  EXPECT_EQ(t[4].object.datatype, vocab::xsd("decimal"));
  EXPECT_EQ(t[5].object.datatype, vocab::xsd("double"));
  EXPECT_EQ(t[6].object, Term::literal("true", vocab::xsd("boolean")));
  EXPECT_EQ(t[7].object, Term::iri("http://y/o"));
}

TEST(Turtle, StringEscapes) {
  Graph g = rdf::parse_turtle(R"(<http://x/s> <http://x/p> "a\"b\\c\nd" .)");
  EXPECT_EQ(g.triples()[0].object.value, "a\"b\\c\nd");
}

TEST(Turtle, CollectionOfNElementsGivesTwoNListTriples) {
  for (int n = 1; n <= 5; ++n) {
    std::string items;
    for (int i = 0; i < n; ++i) items += " <http://x/i" + std::to_string(i) + ">";
    Graph g = rdf::parse_turtle("<http://x/s> <http://x/p> (" + items + " ) .");
    int first = 0, rest = 0, nil = 0;
    for (const auto& t : g.triples()) {
      first += t.predicate.value == vocab::rdf_first;
      rest += t.predicate.value == vocab::rdf_rest;
      nil += t.object.value == vocab::rdf_nil;
    }
    EXPECT_EQ(first, n);
    EXPECT_EQ(rest, n);
    EXPECT_EQ(nil, 1);
    EXPECT_EQ(g.size(), static_cast<std::size_t>(2 * n + 1));
  }
}

TEST(Turtle, EmptyCollectionIsNil) {
  Graph g = rdf::parse_turtle("<http://x/s> <http://x/p> () .");
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.triples()[0].object, Term::iri(vocab::rdf_nil));
}

TEST(Turtle, BlankLabelsFollowDocumentOrder) {
  const std::string doc = "_:z <http://x/p> [ <http://x/q> _:y ] .";
  Graph a = rdf::parse_turtle(doc);
  Graph b = rdf::parse_turtle(doc);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.triples()[0].subject, Term::blank("b1"));
  EXPECT_EQ(a.triples()[0].object, Term::blank("b2"));
  EXPECT_EQ(a.triples()[1].object, Term::blank("b3"));
}

TEST(Turtle, ErrorKinds) {
  EXPECT_EQ(parse_error_kind("@base <http://x/> ."), ParseError::Kind::unsupported_feature);
  EXPECT_EQ(parse_error_kind("<rel> <http://x/p> <http://x/o> ."),
            ParseError::Kind::unsupported_feature);
  EXPECT_EQ(parse_error_kind("<http://x/s> <http://x/p> <http://x/o> <http://x/g> ."),
            ParseError::Kind::unsupported_feature);
  EXPECT_EQ(parse_error_kind("<http://x/g> { <http://x/s> <http://x/p> <http://x/o> . }"),
            ParseError::Kind::unsupported_feature);
  EXPECT_EQ(parse_error_kind("<http://x/s> ^<http://x/p> <http://x/o> ."),
            ParseError::Kind::unsupported_feature);
  EXPECT_EQ(parse_error_kind("foo:s <http://x/p> <http://x/o> ."),
            ParseError::Kind::unknown_prefix);
  EXPECT_EQ(parse_error_kind("<http://x/s> <http://x/p> <http://x/o>"), ParseError::Kind::syntax);
  EXPECT_EQ(parse_error_kind("<http://x/s> <http://x/p> ( <http://x/o> ."),
            ParseError::Kind::syntax);
  EXPECT_EQ(parse_error_kind("<http://x/s> <http://x/p> \"open ."), ParseError::Kind::syntax);
  EXPECT_EQ(parse_error_kind("?x <http://x/p> <http://x/o> ."), ParseError::Kind::syntax);
}

TEST(Turtle, ErrorPositionIsOneBased) {
  try {
    rdf::parse_turtle("<http://x/s> <http://x/p> <http://x/o> .\n  foo:bar <http://x/p> 1 .");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(Serializer, EmptyGraphHasOnlyPrefixes) {
  const std::string out = rdf::serialize_turtle(Graph{});
  std::size_t pos = 0;
  while (pos < out.size()) {
    auto end = out.find('\n', pos);
    EXPECT_TRUE(text::starts_with(out.substr(pos, end - pos), "@prefix "));
    pos = end + 1;
  }
}

TEST(Serializer, SingleTripleIsOneStatementLine) {
  Graph g;
  g.add(Term::iri("http://x/s"), Term::iri("http://x/p"), Term::iri("http://x/o"));
  const std::string body = rdf::write_statements(g, {});
  EXPECT_EQ(body, "<http://x/s> <http://x/p> <http://x/o> .\n");
}

TEST(Serializer, HasValueListingRoundTrips) {
  Graph g = rdf::parse_turtle(kHasValueListing);
  Graph back = rdf::parse_turtle(rdf::serialize_turtle(g));
  EXPECT_TRUE(rdf::isomorphic(g, back));
}

TEST(Serializer, CompactLayoutWithRenderer) {
  Graph g = rdf::parse_turtle(
      "<http://example.ns#C1> rdfs:subClassOf [a owl:Restriction; owl:onProperty "
      "<http://example.ns#OP1>; owl:someValuesFrom <http://example.ns#C2>] .");
  rdf::WriterOptions opt;
  opt.compact = true;
  opt.render = [](const Term& t) -> std::optional<std::string> {
    if (auto id = PlaceholderId::from_iri(t.value)) return id->token();
    return std::nullopt;
  };
  EXPECT_EQ(rdf::write_statements(g, opt),
            "<C1> rdfs:subClassOf [a owl:Restriction; owl:onProperty <OP1>; "
            "owl:someValuesFrom <C2>]");
}

TEST(Serializer, SharedAndCyclicBlanksKeepLabels) {
  Graph g = rdf::parse_turtle(
      "_:a <http://x/p> _:b . _:c <http://x/p> _:b . _:b <http://x/q> _:a .");
  Graph back = rdf::parse_turtle(rdf::serialize_turtle(g));
  EXPECT_TRUE(rdf::isomorphic(g, back));
}

TEST(Isomorphism, DistinguishesStructure) {
  Graph a = rdf::parse_turtle("_:x <http://x/p> _:y . _:y <http://x/p> _:x .");
  Graph b = rdf::parse_turtle("_:x <http://x/p> _:x . _:y <http://x/p> _:y .");
  Graph c = rdf::parse_turtle("_:m <http://x/p> _:n . _:n <http://x/p> _:m .");
  EXPECT_FALSE(rdf::isomorphic(a, b));
  EXPECT_TRUE(rdf::isomorphic(a, c));
  EXPECT_FALSE(rdf::isomorphic(a, Graph{}));
}

TEST(Vocabulary, ReservedAndLocalNames) {
  EXPECT_TRUE(rdf::is_reserved_iri(vocab::owl_class));
  EXPECT_TRUE(rdf::is_reserved_iri(vocab::xsd_integer));
  EXPECT_FALSE(rdf::is_reserved_iri("http://example.ns#C1"));
  EXPECT_EQ(rdf::local_name("http://example.ns#C1"), "C1");
  EXPECT_EQ(rdf::local_name("http://x/a/b"), "b");
}

TEST(Placeholder, Forms) {
  PlaceholderId id{PlaceholderKind::OP, 3};
  EXPECT_EQ(id.slot(), "OP3");
  EXPECT_EQ(id.token(), "<OP3>");
  EXPECT_EQ(id.iri(), "http://example.ns#OP3");
  EXPECT_EQ(PlaceholderId::from_iri(id.iri()), id);
  EXPECT_EQ(PlaceholderId::from_slot("OP3"), id);
  EXPECT_EQ(PlaceholderId::from_slot("DT12")->number, 12u);
  EXPECT_FALSE(PlaceholderId::from_slot("OP"));
  EXPECT_FALSE(PlaceholderId::from_slot("X1"));
  EXPECT_FALSE(PlaceholderId::from_slot("C0x"));
  EXPECT_FALSE(PlaceholderId::from_iri("http://other.ns#C1"));
  EXPECT_TRUE(id.is_property());
  EXPECT_FALSE((PlaceholderId{PlaceholderKind::DT, 1}).is_property());
}

}  // namespace
}  // namespace cqgen
