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

#ifndef SPOLINK_RELATE_H_
#define SPOLINK_RELATE_H_

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spolink/graph_model.h"
#include "spolink/term.h"

namespace spolink {

using SymbolSet = std::set<SymbolId>;

// Symbols found in subject, predicate and object position of a graph.
struct ComponentSets {
  SymbolSet sub;
  SymbolSet pred;
  SymbolSet obj;
};

// Every term of `g` must already be interned (std::out_of_range otherwise).
ComponentSets BuildComponentSets(const Graph& g, const SymbolTable& table);

enum class RelationKind {
  kIdentical,
  kSSPP,
  kOOPP,
  kSPForward,
  kSPBackward,
  kWeakSS,
  kWeakPP,
  kWeakOO,
  kDisjoint,
};
inline constexpr std::size_t kRelationKindCount = 9;

// "Identical", "SSPP", "OOPP", "SP_forward", "SP_backward", "WeakSS",
// "WeakPP", "WeakOO", "Disjoint".
std::string_view KindName(RelationKind kind);
std::optional<RelationKind> KindFromName(std::string_view name);

// Ordered component pairs (first graph's component, second graph's
// component). The last two are diagnostic only and never decide a kind.
enum class ComponentPair {
  kSubSub,
  kPredPred,
  kObjObj,
  kSubObj,
  kObjSub,
  kSubPred,
  kPredSub,
  kObjPred,
  kPredObj,
};
inline constexpr std::size_t kComponentPairCount = 9;

std::string_view PairName(ComponentPair pair);  // e.g. "sub-pred"

struct Witness {
  ComponentPair pair;
  SymbolSet symbols;  // never empty

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct RelationReport {
  RelationKind kind = RelationKind::kDisjoint;
  // The non-empty intersections the kind requires.
  std::vector<Witness> witnesses;
  // Overlaps that a strict reading of `kind` forbids, plus any object/
  // predicate overlaps.
  std::vector<std::string> violated;
  // True when no kind matched strictly and precedence picked one.
  bool ambiguous = false;

  SymbolSet WitnessUnion() const;

  friend bool operator==(const RelationReport&,
                         const RelationReport&) = default;
};

// Precedence: Identical > SSPP > OOPP > SP_forward > SP_backward > WeakSS >
// WeakPP > WeakOO > Disjoint. Pure.
RelationReport ClassifyPair(const ComponentSets& a, const ComponentSets& b,
                            const Graph& a_triples, const Graph& b_triples);

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Score per relation kind, each in [0, 1].
class ScoringConfig {
 public:
  static ScoringConfig Defaults();

  // JSON object mapping kind names to numbers in [0, 1]. Unknown keys and
  // out-of-range values raise ConfigError; missing keys keep defaults.
  static ScoringConfig FromJsonText(std::string_view text);
  static ScoringConfig FromFile(const std::string& path);

  double Score(RelationKind kind) const {
    return scores_[static_cast<std::size_t>(kind)];
  }
  void Set(RelationKind kind, double score);

 private:
  std::array<double, kRelationKindCount> scores_{};
};

double RelationScore(RelationKind kind, const ScoringConfig& config);

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct LinkEdge {
  std::size_t from;
  std::size_t to;
  RelationReport report;
  double score;
};

struct LinkGraph {
  std::vector<std::string> nodes;
  std::vector<LinkEdge> edges;  // sorted by (from, to), no Disjoint edges
};

// All graphs must be interned in `table` beforehand.
LinkGraph RelateAll(const std::vector<NamedGraph>& graphs,
                    const SymbolTable& table, const ScoringConfig& config);

}  // namespace spolink

#endif  // SPOLINK_RELATE_H_
