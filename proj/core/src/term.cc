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

#include "spolink/term.h"

#include <algorithm>
#include <functional>
#include <utility>

namespace spolink {
namespace {

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

void HashCombine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

bool IsValidIri(std::string_view iri) {
  if (iri.empty()) return false;
  return std::none_of(iri.begin(), iri.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20) return true;
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        return true;
      default:
        return false;
    }
  });
}

bool IsValidBlankLabel(std::string_view label) {
  if (label.empty() || !IsAsciiAlpha(label.front())) return false;
  return std::all_of(label.begin(), label.end(),
                     [](char c) { return IsAsciiAlpha(c) || IsAsciiDigit(c); });
}

bool IsValidLanguageTag(std::string_view tag) {
  // [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
  std::size_t i = 0;
  while (i < tag.size() && IsAsciiAlpha(tag[i])) ++i;
  if (i == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    std::size_t start = ++i;
    while (i < tag.size() && (IsAsciiAlpha(tag[i]) || IsAsciiDigit(tag[i]))) ++i;
    if (i == start) return false;
  }
  return true;
}

Term Term::Iri(std::string iri) {
  if (!IsValidIri(iri)) throw InvalidTerm("invalid IRI: <" + iri + ">");
  return Term{TermKind::kIri, std::move(iri), std::nullopt, std::nullopt};
}

Term Term::BlankNode(std::string label) {
  if (!IsValidBlankLabel(label)) {
    throw InvalidTerm("invalid blank node label: _:" + label);
  }
  return Term{TermKind::kBlankNode, std::move(label), std::nullopt,
              std::nullopt};
}

Term Term::Literal(std::string lexical) {
  return Term{TermKind::kLiteral, std::move(lexical), std::nullopt,
              std::nullopt};
}

Term Term::LangLiteral(std::string lexical, std::string language) {
  if (!IsValidLanguageTag(language)) {
    throw InvalidTerm("invalid language tag: @" + language);
  }
  return Term{TermKind::kLiteral, std::move(lexical), std::move(language),
              std::nullopt};
}

Term Term::TypedLiteral(std::string lexical, std::string datatype) {
  if (!IsValidIri(datatype)) {
    throw InvalidTerm("invalid datatype IRI: <" + datatype + ">");
  }
  return Term{TermKind::kLiteral, std::move(lexical), std::nullopt,
              std::move(datatype)};
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t seed = static_cast<std::size_t>(t.kind);
  HashCombine(seed, std::hash<std::string>{}(t.lexical));
  if (t.language) HashCombine(seed, std::hash<std::string>{}(*t.language) ^ 1);
  if (t.datatype) HashCombine(seed, std::hash<std::string>{}(*t.datatype) ^ 2);
  return seed;
}

Triple Triple::Make(Term subject, Term predicate, Term object) {
  if (subject.IsLiteral()) throw InvalidTerm("literal in subject position");
  if (!predicate.IsIri()) throw InvalidTerm("predicate must be an IRI");
  return Triple{std::move(subject), std::move(predicate), std::move(object)};
}

Graph::Graph(std::initializer_list<Triple> triples) {
  for (const auto& t : triples) triples_.insert(t);
}

bool Graph::HasBlankNodes() const {
  return std::any_of(triples_.begin(), triples_.end(), [](const Triple& t) {
    return t.subject.IsBlankNode() || t.object.IsBlankNode();
  });
}

}  // namespace spolink
