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

#ifndef SPOLINK_GRAPH_MODEL_H_
#define SPOLINK_GRAPH_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spolink/term.h"

namespace spolink {

// Dense per-table identifier of an interned term.
enum class SymbolId : std::uint32_t {};

constexpr std::uint32_t ToIndex(SymbolId id) {
  return static_cast<std::uint32_t>(id);
}

// Bijection between distinct terms and dense ids 0, 1, 2, ...
// Mutation (Intern) must not overlap with concurrent reads.
class SymbolTable {
 public:
  SymbolId Intern(const Term& t);
  std::optional<SymbolId> Find(const Term& t) const;
  // Throws std::out_of_range for a term that was never interned.
  SymbolId IdOf(const Term& t) const;
  const Term& TermOf(SymbolId id) const;  // throws std::out_of_range

  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  void InternAll(const Graph& g);

 private:
  std::unordered_map<Term, SymbolId, TermHash> ids_;
  std::vector<Term> terms_;
};

class SkolemCollision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Replaces every blank node `_:L` by the IRI `scheme + L`. `scheme` must be a
// valid IRI prefix ending in '/' or '#' (std::invalid_argument otherwise).
// Throws SkolemCollision when `scheme + L` already occurs as an IRI in `g`.
Graph ReifyBlankNodes(const Graph& g, std::string_view scheme);

// Per-document skolem prefix: `<base><16 hex digits of FNV-1a(content)>/`.
std::string DocumentSkolemScheme(std::string_view base,
                                 std::string_view document_content);

// Directed, edge- and node-labeled multigraph of a triple set. One node per
// term in subject or object position, one edge per triple.
class LabeledMultigraph {
 public:
  using NodeId = std::size_t;
  using EdgeId = std::size_t;

  struct NodeLabel {
    std::string lexical;
    std::optional<std::string> datatype;  // literals with a datatype only
    std::optional<std::string> language;  // language-tagged literals only

    friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
  };

  struct Edge {
    NodeId source;
    NodeId target;
    Term label;  // the predicate
  };

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Term& NodeTerm(NodeId n) const { return nodes_.at(n); }
  NodeLabel Label(NodeId n) const;
  const Edge& EdgeAt(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<NodeId> NodeOf(const Term& t) const;

  friend LabeledMultigraph ProjectMultigraph(const Graph& g);

 private:
  NodeId AddNode(const Term& t);

  std::vector<Term> nodes_;
  std::unordered_map<Term, NodeId, TermHash> node_index_;
  std::vector<Edge> edges_;
};

LabeledMultigraph ProjectMultigraph(const Graph& g);

}  // namespace spolink

#endif  // SPOLINK_GRAPH_MODEL_H_
