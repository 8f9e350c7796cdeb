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

#include "spolink/match.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "spolink/patterns.h"

namespace spolink {

MatchResult MatchGraphs(const Graph& g1, const Graph& g2, SymbolTable& table,
                        const ScoringConfig& scoring, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in (0, 1]");
  }
  auto seq1 = UriSequence(g1, table);
  auto seq2 = UriSequence(g2, table);

  std::set<SymbolId> universe(seq1.symbols.begin(), seq1.symbols.end());
  universe.insert(seq2.symbols.begin(), seq2.symbols.end());
  if (universe.empty()) throw std::invalid_argument("both graphs are empty");

  MatchResult result;
  result.frame = Frame({universe.begin(), universe.end()});
  result.threshold = threshold;
  result.target = result.frame.SubsetOf(seq2.symbols);

  std::vector<EvidenceItem> items;
  std::set<std::pair<RelationKind, Subset>> seen;
  auto add = [&](std::string source, const RelationReport& report) {
    const auto witnesses = report.WitnessUnion();
    const Subset focus =
        result.frame.SubsetOf({witnesses.begin(), witnesses.end()});
    const double score = RelationScore(report.kind, scoring);
    if (focus == 0 || score == 0.0) return;
    if (!seen.emplace(report.kind, focus).second) return;
    items.push_back({source, focus, score});
    result.per_relation.push_back({std::move(source), report.kind,
                                   result.frame.Members(focus), score});
  };

  add("graph", ClassifyPair(BuildComponentSets(g1, table),
                            BuildComponentSets(g2, table), g1, g2));
  std::size_t i = 0;
  for (const auto& t1 : g1) {
    Graph left{t1};
    auto left_sets = BuildComponentSets(left, table);
    std::size_t j = 0;
    for (const auto& t2 : g2) {
      Graph right{t2};
      auto report = ClassifyPair(left_sets, BuildComponentSets(right, table),
                                 left, right);
      if (report.kind != RelationKind::kDisjoint) {
        add("triple[" + std::to_string(i) + "," + std::to_string(j) + "]",
            report);
      }
      ++j;
    }
    ++i;
  }

  auto combination = CombineEvidence(result.frame, items);
  result.conflict = combination.conflict;
  result.belief = BeliefFromMass(combination.combined, result.target);
  result.established = result.belief >= threshold;
  return result;
}

}  // namespace spolink
