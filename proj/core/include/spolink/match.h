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

#ifndef SPOLINK_MATCH_H_
#define SPOLINK_MATCH_H_

#include <string>
#include <vector>

#include "spolink/belief.h"
#include "spolink/graph_model.h"
#include "spolink/relate.h"
#include "spolink/term.h"

namespace spolink {

inline constexpr double kDefaultThreshold = 0.5;

struct RelationMass {
  std::string source;  // "graph" or "triple[i,j]"
  RelationKind kind;
  std::vector<SymbolId> focus;
  double mass;
};

struct MatchResult {
  double belief = 0.0;
  Frame frame;
  Subset target = 0;  // symbols of the second graph's URI sequence
  double threshold = kDefaultThreshold;
  bool established = false;  // belief >= threshold
  double conflict = 0.0;
  std::vector<RelationMass> per_relation;
};

// Degree of belief that the second graph's URI sequence is supported by the
// evidence relating the two graphs. Evidence is the whole-graph relation plus
// one relation per cross-graph triple pair that is not Disjoint; repeated
// (kind, focus) evidence counts once. Both graphs must be free of blank
// nodes and not both empty; threshold must lie in (0, 1]. Throws
// BeliefError (kFrameTooLarge, kTotalConflict) and MiningError
// (kBlankNodePresent).
MatchResult MatchGraphs(const Graph& g1, const Graph& g2, SymbolTable& table,
                        const ScoringConfig& scoring,
                        double threshold = kDefaultThreshold);

}  // namespace spolink

#endif  // SPOLINK_MATCH_H_
