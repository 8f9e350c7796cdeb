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

#include "spolink/belief.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace spolink {
namespace {

constexpr double kMassTolerance = 1e-9;
constexpr double kDropBelow = 1e-12;

// Order-independent sum: adds the smallest magnitudes first.
double StableSum(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  return std::accumulate(values.begin(), values.end(), 0.0);
}

}  // namespace

Frame::Frame(std::vector<SymbolId> elements) : elements_(std::move(elements)) {
  if (elements_.size() > kMaxFrameSize) {
    throw BeliefError(BeliefError::Code::kFrameTooLarge,
                      "frame has " + std::to_string(elements_.size()) +
                          " elements; the limit is " +
                          std::to_string(kMaxFrameSize));
  }
  std::unordered_set<SymbolId> seen;
  for (auto e : elements_) {
    if (!seen.insert(e).second) {
      throw std::invalid_argument("frame elements must be distinct");
    }
  }
}

Subset Frame::SubsetOf(const std::vector<SymbolId>& symbols) const {
  Subset s = 0;
  for (auto sym : symbols) {
    auto it = std::find(elements_.begin(), elements_.end(), sym);
    if (it == elements_.end()) {
      throw BeliefError(BeliefError::Code::kSubsetOutOfFrame,
                        "symbol " + std::to_string(ToIndex(sym)) +
                            " is not in the frame");
    }
    s |= Subset{1} << (it - elements_.begin());
  }
  return s;
}

std::vector<SymbolId> Frame::Members(Subset s) const {
  std::vector<SymbolId> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if ((s >> i) & 1u) out.push_back(elements_[i]);
  }
  return out;
}

MassFunction::MassFunction(Frame frame, std::map<Subset, double> focal)
    : frame_(std::move(frame)) {
  double total = 0.0;
  for (const auto& [subset, mass] : focal) {
    if (!frame_.Contains(subset)) {
      throw BeliefError(BeliefError::Code::kSubsetOutOfFrame,
                        "focal element outside the frame");
    }
    if (std::isnan(mass) || mass < 0.0) {
      throw BeliefError(BeliefError::Code::kInvalidMass,
                        "masses must be non-negative");
    }
    if (mass == 0.0) continue;
    if (subset == 0) {
      throw BeliefError(BeliefError::Code::kInvalidMass,
                        "the empty set cannot carry mass");
    }
    focal_.emplace(subset, mass);
    total += mass;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw BeliefError(BeliefError::Code::kInvalidMass,
                      "masses sum to " + std::to_string(total) + ", not 1");
  }
}

MassFunction MassFunction::Vacuous(Frame frame) {
  Subset full = frame.Full();
  return MassFunction(std::move(frame), {{full, 1.0}});
}

MassFunction MassFunction::SimpleSupport(Frame frame, Subset focus,
                                         double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw BeliefError(BeliefError::Code::kInvalidMass,
                      "support weight must lie in [0, 1]");
  }
  Subset full = frame.Full();
  if (focus == full) return MassFunction(std::move(frame), {{full, 1.0}});
  return MassFunction(std::move(frame), {{focus, weight}, {full, 1.0 - weight}});
}

double MassFunction::Mass(Subset s) const {
  auto it = focal_.find(s);
  return it == focal_.end() ? 0.0 : it->second;
}

double BeliefFromMass(const MassFunction& m, Subset a) {
  if (!m.frame().Contains(a)) {
    throw BeliefError(BeliefError::Code::kSubsetOutOfFrame,
                      "subset outside the frame");
  }
  double bel = 0.0;
  for (const auto& [subset, mass] : m.focal()) {
    if ((subset & ~a) == 0) bel += mass;
  }
  return bel;
}

BeliefTable BeliefTableOf(const MassFunction& m) {
  const std::size_t n = m.frame().size();
  BeliefTable table{m.frame(), std::vector<double>(std::size_t{1} << n, 0.0)};
  for (const auto& [subset, mass] : m.focal()) table.values[subset] = mass;
  // Subset-sum (zeta) transform.
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t s = 0; s < table.values.size(); ++s) {
      if (s & b) table.values[s] += table.values[s ^ b];
    }
  }
  return table;
}

MassFunction MassFromBelief(const BeliefTable& bel) {
  const std::size_t n = bel.frame.size();
  if (bel.values.size() != (std::size_t{1} << n)) {
    throw BeliefError(BeliefError::Code::kNotABelief,
                      "belief table must cover every subset of the frame");
  }
  if (std::abs(bel.values.front()) > kMassTolerance ||
      std::abs(bel.values.back() - 1.0) > kMassTolerance) {
    throw BeliefError(BeliefError::Code::kNotABelief,
                      "belief must be 0 on the empty set and 1 on the frame");
  }
  std::vector<double> m = bel.values;
  // Inverse of the zeta transform: alternating sums over subsets.
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (s & b) m[s] -= m[s ^ b];
    }
  }
  std::map<Subset, double> focal;
  for (std::size_t s = 1; s < m.size(); ++s) {
    if (m[s] < -kMassTolerance) {
      throw BeliefError(BeliefError::Code::kNotABelief,
                        "reconstructed mass " + std::to_string(m[s]) +
                            " is negative");
    }
    if (m[s] >= kDropBelow) focal.emplace(static_cast<Subset>(s), m[s]);
  }
  return MassFunction(bel.frame, std::move(focal));
}

Combination DempsterCombine(const MassFunction& m1, const MassFunction& m2) {
  if (!(m1.frame() == m2.frame())) {
    throw BeliefError(BeliefError::Code::kFrameMismatch,
                      "mass functions are defined on different frames");
  }
  std::map<Subset, std::vector<double>> products;
  for (const auto& [x, a] : m1.focal()) {
    for (const auto& [y, b] : m2.focal()) {
      products[x & y].push_back(a * b);
    }
  }
  double conflict = 0.0;
  if (auto it = products.find(0); it != products.end()) {
    conflict = StableSum(it->second);
  }
  const double norm = 1.0 - conflict;
  if (norm <= kDropBelow) {
    throw BeliefError(BeliefError::Code::kTotalConflict,
                      "total conflict between the mass functions");
  }
  std::map<Subset, double> focal;
  for (auto& [subset, values] : products) {
    if (subset == 0) continue;
    focal.emplace(subset, StableSum(values) / norm);
  }
  return {MassFunction(m1.frame(), std::move(focal)), conflict};
}

EvidenceCombination CombineEvidence(const Frame& frame,
                                    const std::vector<EvidenceItem>& items) {
  MassFunction combined = MassFunction::Vacuous(frame);
  double retained = 1.0;
  for (const auto& item : items) {
    if (item.focus == 0 || item.score == 0.0) continue;
    auto step = DempsterCombine(
        combined, MassFunction::SimpleSupport(frame, item.focus, item.score));
    retained *= 1.0 - step.conflict;
    combined = std::move(step.combined);
  }
  return {std::move(combined), 1.0 - retained};
}

}  // namespace spolink
