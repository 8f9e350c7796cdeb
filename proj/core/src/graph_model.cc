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

#include "spolink/graph_model.h"

#include <cstdio>
#include <unordered_set>

namespace spolink {

SymbolId SymbolTable::Intern(const Term& t) {
  auto [it, inserted] =
      ids_.try_emplace(t, static_cast<SymbolId>(terms_.size()));
  if (inserted) terms_.push_back(t);
  return it->second;
}

std::optional<SymbolId> SymbolTable::Find(const Term& t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

SymbolId SymbolTable::IdOf(const Term& t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) throw std::out_of_range("term not interned");
  return it->second;
}

const Term& SymbolTable::TermOf(SymbolId id) const {
  return terms_.at(ToIndex(id));
}

void SymbolTable::InternAll(const Graph& g) {
  for (const auto& t : g) {
    Intern(t.subject);
    Intern(t.predicate);
    Intern(t.object);
  }
}

Graph ReifyBlankNodes(const Graph& g, std::string_view scheme) {
  if (scheme.empty() || (scheme.back() != '/' && scheme.back() != '#') ||
      !IsValidIri(scheme)) {
    throw std::invalid_argument("skolem scheme must be an IRI prefix ending "
                                "in '/' or '#': " + std::string(scheme));
  }

  std::unordered_set<std::string> iris;
  for (const auto& t : g) {
    for (const Term* term : {&t.subject, &t.predicate, &t.object}) {
      if (term->IsIri()) iris.insert(term->lexical);
    }
  }

  auto skolemize = [&](const Term& term) -> Term {
    if (!term.IsBlankNode()) return term;
    std::string iri = std::string(scheme) + term.lexical;
    if (iris.contains(iri)) {
      throw SkolemCollision("skolem IRI <" + iri +
                            "> already occurs in the graph");
    }
    return Term{TermKind::kIri, std::move(iri), std::nullopt, std::nullopt};
  };

  Graph out;
  for (const auto& t : g) {
    out.Insert(Triple{skolemize(t.subject), t.predicate, skolemize(t.object)});
  }
  return out;
}

std::string DocumentSkolemScheme(std::string_view base,
                                 std::string_view document_content) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (char c : document_content) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(hash));
  std::string scheme(base);
  if (!scheme.empty() && scheme.back() != '/' && scheme.back() != '#') {
    scheme += '/';
  }
  scheme += hex;
  scheme += '/';
  return scheme;
}

LabeledMultigraph::NodeId LabeledMultigraph::AddNode(const Term& t) {
  auto [it, inserted] = node_index_.try_emplace(t, nodes_.size());
  if (inserted) nodes_.push_back(t);
  return it->second;
}

std::optional<LabeledMultigraph::NodeId> LabeledMultigraph::NodeOf(
    const Term& t) const {
  auto it = node_index_.find(t);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

LabeledMultigraph::NodeLabel LabeledMultigraph::Label(NodeId n) const {
  const Term& t = nodes_.at(n);
  NodeLabel label{t.lexical, std::nullopt, std::nullopt};
  if (t.IsLiteral()) {
    label.datatype = t.datatype;
    label.language = t.language;
  }
  return label;
}

LabeledMultigraph ProjectMultigraph(const Graph& g) {
  LabeledMultigraph mg;
  for (const auto& t : g) {
    auto source = mg.AddNode(t.subject);
    auto target = mg.AddNode(t.object);
    mg.edges_.push_back({source, target, t.predicate});
  }
  return mg;
}

}  // namespace spolink
