// Copyright 2026 The spolink Authors.
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

#include "spolink/ntriples.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "generators.h"

namespace spolink::ntriples {
namespace {

std::string ReadData(const std::string& name) {
  std::ifstream in(std::string(SPOLINK_TEST_DATA_DIR) + "/" + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ParseError ErrorOf(std::string_view line) {
  auto r = ParseLine(line, 1);
  EXPECT_TRUE(std::holds_alternative<ParseError>(r)) << line;
  return std::holds_alternative<ParseError>(r) ? std::get<ParseError>(r)
                                               : ParseError{};
}

TEST(ParseDocument, NTriplesDraftPublisherLine) {
  auto r = ParseDocument(
      "<http://www.w3.org/2001/sw/RDFCore/ntriples/> "
      "<http://purl.org/dc/elements/1.1/publisher> <http://www.w3.org/> .");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.graph.size(), 1u);
  EXPECT_EQ(r.graph.begin()->object, Term::Iri("http://www.w3.org/"));
}

TEST(ParseDocument, NTriplesDraftHasExactTerms) {
  auto r = ParseDocument(ReadData("ntriples_draft.nt"));
  ASSERT_TRUE(r.ok());
  const Term subject = Term::Iri("http://www.w3.org/2001/sw/RDFCore/ntriples/");
  const Term creator = Term::Iri("http://purl.org/dc/elements/1.1/creator");
  Graph expected{
      {subject, creator, Term::Literal("Dave Beckett")},
      {subject, creator, Term::Literal("Art Barstow")},
      {subject, Term::Iri("http://purl.org/dc/elements/1.1/publisher"),
       Term::Iri("http://www.w3.org/")}};
  EXPECT_EQ(r.graph, expected);
}

TEST(ParseDocument, EmptyInputIsEmptyGraph) {
  auto r = ParseDocument("");
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.graph.empty());
}

TEST(ParseDocument, DuplicateLinesCollapse) {
  std::string line = "<http://a/> <http://b/> <http://c/> .\n";
  auto r = ParseDocument(line + line);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.graph.size(), 1u);
}

TEST(ParseDocument, TwoTermsIsTermCountError) {
  auto r = ParseDocument("<a> <b> .");
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].category, ErrorCategory::kTermCount);
  EXPECT_EQ(r.errors[0].line, 1);
}

TEST(ParseDocument, CrlfAndRecovery) {
  auto r = ParseDocument(ReadData("malformed.nt"));
  EXPECT_EQ(r.graph.size(), 1u);
  ASSERT_EQ(r.errors.size(), 2u);
  EXPECT_EQ(r.errors[0].line, 2);
  EXPECT_EQ(r.errors[0].category, ErrorCategory::kTermCount);
  EXPECT_EQ(r.errors[1].line, 3);
  EXPECT_EQ(r.errors[1].category, ErrorCategory::kBadIri);

  auto crlf = ParseDocument("<http://a/> <http://b/> \"x\" .\r\n\r\n");
  EXPECT_TRUE(crlf.ok());
  EXPECT_EQ(crlf.graph.begin()->object, Term::Literal("x"));
}

TEST(ParseLine, CommentAndBlank) {
  EXPECT_TRUE(std::holds_alternative<Comment>(ParseLine("# a comment", 1)));
  EXPECT_TRUE(std::holds_alternative<Comment>(ParseLine("   # indented", 1)));
  EXPECT_TRUE(std::holds_alternative<Blank>(ParseLine("", 1)));
  EXPECT_TRUE(std::holds_alternative<Blank>(ParseLine(" \t ", 1)));
}

TEST(ParseLine, PlainLiteralObject) {
  auto r = ParseLine(
      "<http://www.w3.org/2001/sw/RDFCore/ntriples/> "
      "<http://purl.org/dc/elements/1.1/creator> \"Dave Beckett\" .",
      1);
  ASSERT_TRUE(std::holds_alternative<Triple>(r));
  const Term& o = std::get<Triple>(r).object;
  EXPECT_TRUE(o.IsLiteral());
  EXPECT_EQ(o.lexical, "Dave Beckett");
  EXPECT_FALSE(o.language.has_value());
  EXPECT_FALSE(o.datatype.has_value());
}

TEST(ParseLine, BlankNodeSubject) {
  auto r = ParseLine("_:p1 <http://ex.org/bornOn> \"21st of April\" .", 1);
  ASSERT_TRUE(std::holds_alternative<Triple>(r));
  EXPECT_EQ(std::get<Triple>(r).subject, Term::BlankNode("p1"));
}

TEST(ParseLine, LiteralSuffixesAndEscapes) {
  auto r = ParseLine(
      R"(<http://a/> <http://b/> "x\"y\\z\n\t\ré\U0001F600"@en-GB .)", 1);
  ASSERT_TRUE(std::holds_alternative<Triple>(r));
  const Term& o = std::get<Triple>(r).object;
  EXPECT_EQ(o.lexical, "x\"y\\z\n\t\r\xC3\xA9\xF0\x9F\x98\x80");
  EXPECT_EQ(o.language, "en-GB");

  auto typed = ParseLine(
      R"(<http://a/> <http://b/> "5"^^<http://www.w3.org/2001/XMLSchema#int>.)",
      1);
  ASSERT_TRUE(std::holds_alternative<Triple>(typed));
  EXPECT_EQ(std::get<Triple>(typed).object.datatype,
            "http://www.w3.org/2001/XMLSchema#int");
}

TEST(ParseLine, ErrorCategories) {
  EXPECT_EQ(ErrorOf("<http://a/ b> <http://b/> <http://c/> .").category,
            ErrorCategory::kBadIri);
  EXPECT_EQ(ErrorOf("<> <http://b/> <http://c/> .").category,
            ErrorCategory::kBadIri);
  EXPECT_EQ(ErrorOf("<http://a/> <http://b/> <http://c/").category,
            ErrorCategory::kBadIri);
  EXPECT_EQ(ErrorOf("\"lit\" <http://b/> <http://c/> .").category,
            ErrorCategory::kBadIri);
  EXPECT_EQ(ErrorOf("<http://a/> _:b <http://c/> .").category,
            ErrorCategory::kBadIri);
  EXPECT_EQ(ErrorOf("<http://a/> <http://b/> \"open .").category,
            ErrorCategory::kBadLiteral);
  EXPECT_EQ(ErrorOf("<http://a/> <http://b/> \"x\"@ .").category,
            ErrorCategory::kBadLiteral);
  EXPECT_EQ(ErrorOf("<http://a/> <http://b/> \"x\"^<http://t/> .").category,
            ErrorCategory::kBadLiteral);
  EXPECT_EQ(ErrorOf("_:1abc <http://b/> <http://c/> .").category,
            ErrorCategory::kBadBlankNode);
  EXPECT_EQ(ErrorOf("_:a-b <http://b/> <http://c/> .").category,
            ErrorCategory::kBadBlankNode);
  EXPECT_EQ(ErrorOf("<http://a/> <http://b/> <http://c/>").category,
            ErrorCategory::kMissingDot);
  EXPECT_EQ(ErrorOf("<http://a/> <http://b/> <http://c/> <http://d/> .")
                .category,
            ErrorCategory::kTermCount);
  EXPECT_EQ(ErrorOf("<http://a/> <http://b/> <http://c/> . junk").category,
            ErrorCategory::kTermCount);
  EXPECT_EQ(ErrorOf(R"(<http://a/> <http://b/> "\q" .)").category,
            ErrorCategory::kBadEscape);
  EXPECT_EQ(ErrorOf(R"(<http://a/> <http://b/> "\u12" .)").category,
            ErrorCategory::kBadEscape);
  EXPECT_EQ(ErrorOf(R"(<http://a/> <http://b/> "\uD800" .)").category,
            ErrorCategory::kBadEscape);
  EXPECT_EQ(ErrorOf(R"(<http://a/\n> <http://b/> "x" .)").category,
            ErrorCategory::kBadEscape);
  // An escape may not smuggle a forbidden character into an IRI.
  EXPECT_EQ(ErrorOf(R"(<http://a/\u0020> <http://b/> "x" .)").category,
            ErrorCategory::kBadIri);
}

TEST(ParseLine, ErrorColumnsPointInsideTheLine) {
  const std::string line = "<http://a/> <http://b/> <http://c/>";
  auto e = ErrorOf(line);
  EXPECT_EQ(e.line, 1);
  EXPECT_GE(e.column, 1);
  EXPECT_LE(e.column, static_cast<int>(line.size()));

  auto bad_pred = ErrorOf("<http://a/> \"p\" <http://c/> .");
  EXPECT_EQ(bad_pred.column, 13);
}

TEST(Serialize, EmptyGraph) { EXPECT_EQ(Serialize(Graph{}), ""); }

TEST(Serialize, NTriplesDraftSorted) {
  auto g = ParseDocument(ReadData("ntriples_draft.nt")).graph;
  const std::string out = Serialize(g);
  EXPECT_EQ(out,
            "<http://www.w3.org/2001/sw/RDFCore/ntriples/> "
            "<http://purl.org/dc/elements/1.1/creator> \"Art Barstow\" .\n"
            "<http://www.w3.org/2001/sw/RDFCore/ntriples/> "
            "<http://purl.org/dc/elements/1.1/creator> \"Dave Beckett\" .\n"
            "<http://www.w3.org/2001/sw/RDFCore/ntriples/> "
            "<http://purl.org/dc/elements/1.1/publisher> "
            "<http://www.w3.org/> .\n");
}

TEST(Serialize, MinimalEscaping) {
  Graph g{{Term::Iri("http://a/"), Term::Iri("http://b/"),
           Term::Literal("q\"b\\n\nr\rt\t\xC3\xA9")}};
  EXPECT_EQ(Serialize(g),
            "<http://a/> <http://b/> \"q\\\"b\\\\n\\nr\\rt\t\xC3\xA9\" .\n");
}

TEST(SerializeProperty, RoundTripAndIdempotence) {
  testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = testing::RandomGraph(rng, 20);
    const std::string text = Serialize(g);
    auto reparsed = ParseDocument(text);
    ASSERT_TRUE(reparsed.ok()) << text;
    ASSERT_EQ(reparsed.graph, g) << text;
    ASSERT_EQ(Serialize(reparsed.graph), text);
  }
}

TEST(ParseDocumentProperty, ErrorRecovery) {
  const std::vector<std::string> kBroken = {
      "<http://a/> <http://b/> .", "<http://a/> <http://b/> <http://c/>",
      "\"x\" <http://b/> <http://c/> .", "_:9 <http://b/> <http://c/> .",
      R"(<http://a/> <http://b/> "\z" .)"};
  testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Graph g = testing::RandomGraph(rng, 12);
    std::vector<std::string> lines;
    std::istringstream in(Serialize(g));
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    std::vector<std::string> doc;
    std::vector<int> broken_lines;
    std::size_t next = 0;
    while (next < lines.size() || broken_lines.size() < 2) {
      if (testing::Uniform(rng, 0, 2) == 0 || next >= lines.size()) {
        doc.push_back(kBroken[testing::Uniform(rng, 0, kBroken.size() - 1)]);
        broken_lines.push_back(static_cast<int>(doc.size()));
      } else {
        doc.push_back(lines[next++]);
      }
    }
    std::string text;
    for (const auto& l : doc) text += l + "\n";
    auto r = ParseDocument(text);
    ASSERT_EQ(r.errors.size(), broken_lines.size()) << text;
    for (std::size_t k = 0; k < broken_lines.size(); ++k) {
      EXPECT_EQ(r.errors[k].line, broken_lines[k]);
    }
    EXPECT_EQ(r.graph, g);
  }
}

}  // namespace
}  // namespace spolink::ntriples
