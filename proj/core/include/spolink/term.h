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

#ifndef SPOLINK_TERM_H_
#define SPOLINK_TERM_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spolink {

enum class TermKind { kIri, kLiteral, kBlankNode };

// An RDF term. For IRIs `lexical` is the IRI text without angle brackets,
// for blank nodes it is the label without the "_:" prefix.
struct Term {
  TermKind kind = TermKind::kIri;
  std::string lexical;
  // Literal only; at most one of the two is set.
  std::optional<std::string> language;
  std::optional<std::string> datatype;

  static Term Iri(std::string iri);
  static Term BlankNode(std::string label);
  static Term Literal(std::string lexical);
  static Term LangLiteral(std::string lexical, std::string language);
  static Term TypedLiteral(std::string lexical, std::string datatype);

  bool IsIri() const { return kind == TermKind::kIri; }
  bool IsLiteral() const { return kind == TermKind::kLiteral; }
  bool IsBlankNode() const { return kind == TermKind::kBlankNode; }

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

// Thrown by the Term factories when a term would violate its invariants.
class InvalidTerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool IsValidIri(std::string_view iri);
bool IsValidBlankLabel(std::string_view label);
bool IsValidLanguageTag(std::string_view tag);

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  // Validates the subject/predicate position constraints.
  static Triple Make(Term subject, Term predicate, Term object);

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// A finite set of triples. Inserting a duplicate is a no-op.
class Graph {
 public:
  using Storage = std::set<Triple>;
  using const_iterator = Storage::const_iterator;

  Graph() = default;
  Graph(std::initializer_list<Triple> triples);

  bool Insert(Triple t) { return triples_.insert(std::move(t)).second; }
  bool Contains(const Triple& t) const { return triples_.contains(t); }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }

  bool HasBlankNodes() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Storage triples_;
};

}  // namespace spolink

#endif  // SPOLINK_TERM_H_
