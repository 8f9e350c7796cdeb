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

#include "spolink/relate.h"

#include <algorithm>
#include <cstdint>
#include <iterator>

namespace spolink {
namespace {

using Mask = std::uint16_t;

constexpr Mask Bit(ComponentPair p) {
  return static_cast<Mask>(1u << static_cast<unsigned>(p));
}

constexpr Mask kSS = Bit(ComponentPair::kSubSub);
constexpr Mask kPP = Bit(ComponentPair::kPredPred);
constexpr Mask kOO = Bit(ComponentPair::kObjObj);
constexpr Mask kSO = Bit(ComponentPair::kSubObj);
constexpr Mask kOS = Bit(ComponentPair::kObjSub);
constexpr Mask kSP = Bit(ComponentPair::kSubPred);
constexpr Mask kPS = Bit(ComponentPair::kPredSub);
// The seven overlaps that take part in classification.
constexpr Mask kDeciding = kSS | kPP | kOO | kSO | kOS | kSP | kPS;

struct Rule {
  RelationKind kind;
  Mask required;
  Mask forbidden;
};

constexpr std::array<Rule, 8> kRules = {{
    {RelationKind::kSSPP, kSS | kPP, kOO | kSO | kOS},
    {RelationKind::kOOPP, kOO | kPP, kSS | kSO | kOS},
    {RelationKind::kSPForward, kSP, kSS | kOO | kPP},
    {RelationKind::kSPBackward, kPS, kSS | kOO | kPP},
    {RelationKind::kWeakSS, kSS, kDeciding & ~kSS},
    {RelationKind::kWeakPP, kPP, kDeciding & ~kPP},
    {RelationKind::kWeakOO, kOO, kDeciding & ~kOO},
    {RelationKind::kDisjoint, 0, kDeciding},
}};

std::set<Term> SubjectsOf(const Graph& g) {
  std::set<Term> out;
  for (const auto& t : g) out.insert(t.subject);
  return out;
}

std::set<Term> PredicatesOf(const Graph& g) {
  std::set<Term> out;
  for (const auto& t : g) out.insert(t.predicate);
  return out;
}

std::vector<Term> TermIntersection(const std::set<Term>& x,
                                   const std::set<Term>& y) {
  std::vector<Term> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::back_inserter(out));
  return out;
}

// When a's subjects meet b's predicates AND b's subjects meet a's
// predicates, only one direction may be reported. The larger overlap wins;
// equal sizes fall back to comparing the overlapping terms, the greater list
// being the forward one. Term order keeps the answer independent of
// interning order, and swapping the arguments swaps the answer.
bool ForwardWinsBidirectional(const Graph& a, const Graph& b) {
  auto forward = TermIntersection(SubjectsOf(a), PredicatesOf(b));
  auto backward = TermIntersection(SubjectsOf(b), PredicatesOf(a));
  if (forward.size() != backward.size()) {
    return forward.size() > backward.size();
  }
  return forward > backward;
}

SymbolSet Intersect(const SymbolSet& x, const SymbolSet& y) {
  SymbolSet out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                        std::inserter(out, out.end()));
  return out;
}

constexpr std::array<std::string_view, kRelationKindCount> kKindNames = {
    "Identical", "SSPP",   "OOPP",   "SP_forward", "SP_backward",
    "WeakSS",    "WeakPP", "WeakOO", "Disjoint"};

constexpr std::array<std::string_view, kComponentPairCount> kPairNames = {
    "sub-sub",  "pred-pred", "obj-obj",  "sub-obj", "obj-sub",
    "sub-pred", "pred-sub",  "obj-pred", "pred-obj"};

}  // namespace

std::string_view KindName(RelationKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<RelationKind> KindFromName(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<RelationKind>(i);
  }
  return std::nullopt;
}

std::string_view PairName(ComponentPair pair) {
  return kPairNames[static_cast<std::size_t>(pair)];
}

ComponentSets BuildComponentSets(const Graph& g, const SymbolTable& table) {
  ComponentSets sets;
  for (const auto& t : g) {
    sets.sub.insert(table.IdOf(t.subject));
    sets.pred.insert(table.IdOf(t.predicate));
    sets.obj.insert(table.IdOf(t.object));
  }
  return sets;
}

SymbolSet RelationReport::WitnessUnion() const {
  SymbolSet out;
  for (const auto& w : witnesses) out.insert(w.symbols.begin(), w.symbols.end());
  return out;
}

RelationReport ClassifyPair(const ComponentSets& a, const ComponentSets& b,
                            const Graph& a_triples, const Graph& b_triples) {
  std::array<SymbolSet, kComponentPairCount> overlap = {
      Intersect(a.sub, b.sub),   Intersect(a.pred, b.pred),
      Intersect(a.obj, b.obj),   Intersect(a.sub, b.obj),
      Intersect(a.obj, b.sub),   Intersect(a.sub, b.pred),
      Intersect(a.pred, b.sub),  Intersect(a.obj, b.pred),
      Intersect(a.pred, b.obj)};
  Mask mask = 0;
  for (std::size_t i = 0; i < overlap.size(); ++i) {
    if (!overlap[i].empty()) mask |= static_cast<Mask>(1u << i);
  }

  RelationReport report;
  auto add_witnesses = [&](Mask bits) {
    for (std::size_t i = 0; i < overlap.size(); ++i) {
      if ((bits >> i) & 1u) {
        report.witnesses.push_back(
            {static_cast<ComponentPair>(i), overlap[i]});
      }
    }
  };
  auto add_violations = [&](Mask bits) {
    for (std::size_t i = 0; i < overlap.size(); ++i) {
      if ((bits >> i) & 1u) {
        report.violated.emplace_back(PairName(static_cast<ComponentPair>(i)));
      }
    }
  };
  const Mask diagnostic = mask & (Bit(ComponentPair::kObjPred) |
                                  Bit(ComponentPair::kPredObj));

  if (a_triples == b_triples) {
    report.kind = RelationKind::kIdentical;
    add_witnesses(mask & (kSS | kPP | kOO));
    add_violations(diagnostic);
    return report;
  }

  // Sub-pred overlaps in both directions select a single direction; the
  // other one is masked out of the rule evaluation but kept as a witness.
  Mask rule_mask = mask;
  Mask extra_witness = 0;
  if ((mask & kSP) && (mask & kPS)) {
    bool forward = ForwardWinsBidirectional(a_triples, b_triples);
    rule_mask &= static_cast<Mask>(~(forward ? kPS : kSP));
    extra_witness = forward ? kPS : kSP;
  }
  auto is_sp = [](RelationKind k) {
    return k == RelationKind::kSPForward || k == RelationKind::kSPBackward;
  };
  auto witnesses_for = [&](const Rule& rule) {
    return is_sp(rule.kind) ? (rule.required | extra_witness) : rule.required;
  };
  auto forbidden_overlaps = [&](const Rule& rule) {
    // The masked direction never counts as a violation of an S-P kind.
    return static_cast<Mask>((is_sp(rule.kind) ? rule_mask : mask) &
                             rule.forbidden);
  };

  for (const Rule& rule : kRules) {
    if ((rule_mask & rule.required) == rule.required &&
        forbidden_overlaps(rule) == 0) {
      report.kind = rule.kind;
      add_witnesses(witnesses_for(rule));
      add_violations(diagnostic);
      return report;
    }
  }

  // No strict match: the first kind whose required overlaps are present
  // wins, and the overlaps it forbids are listed as violations.
  report.ambiguous = true;
  for (const Rule& rule : kRules) {
    if ((rule_mask & rule.required) == rule.required) {
      report.kind = rule.kind;
      add_witnesses(witnesses_for(rule));
      add_violations(forbidden_overlaps(rule) | diagnostic);
      return report;
    }
  }
  // Unreachable: the Disjoint rule has no requirements.
  return report;
}

double RelationScore(RelationKind kind, const ScoringConfig& config) {
  return config.Score(kind);
}

LinkGraph RelateAll(const std::vector<NamedGraph>& graphs,
                    const SymbolTable& table, const ScoringConfig& config) {
  LinkGraph link;
  std::vector<ComponentSets> sets;
  sets.reserve(graphs.size());
  for (const auto& g : graphs) {
    link.nodes.push_back(g.name);
    sets.push_back(BuildComponentSets(g.graph, table));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = 0; j < graphs.size(); ++j) {
      if (i == j) continue;
      auto report =
          ClassifyPair(sets[i], sets[j], graphs[i].graph, graphs[j].graph);
      if (report.kind == RelationKind::kDisjoint) continue;
      double score = RelationScore(report.kind, config);
      link.edges.push_back({i, j, std::move(report), score});
    }
  }
  return link;
}

}  // namespace spolink
