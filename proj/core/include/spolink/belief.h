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

#ifndef SPOLINK_BELIEF_H_
#define SPOLINK_BELIEF_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spolink/graph_model.h"

namespace spolink {

// A subset of a frame as a bitset over the frame's element indices.
using Subset = std::uint32_t;

inline constexpr std::size_t kMaxFrameSize = 30;

class BeliefError : public std::runtime_error {
 public:
  enum class Code {
    kSubsetOutOfFrame,
    kNotABelief,
    kTotalConflict,
    kFrameTooLarge,
    kFrameMismatch,
    kInvalidMass,
  };

  BeliefError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Frame of discernment: an ordered set of at most 30 distinct symbols.
class Frame {
 public:
  Frame() = default;
  explicit Frame(std::vector<SymbolId> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<SymbolId>& elements() const { return elements_; }
  Subset Full() const {
    return size() == 0 ? 0 : static_cast<Subset>((1ULL << size()) - 1);
  }
  bool Contains(Subset s) const { return (s & ~Full()) == 0; }

  // Throws kSubsetOutOfFrame for symbols not in the frame.
  Subset SubsetOf(const std::vector<SymbolId>& symbols) const;
  std::vector<SymbolId> Members(Subset s) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<SymbolId> elements_;
};

// Basic belief assignment. Masses are positive, sum to 1 (within 1e-9) and
// never sit on the empty set.
class MassFunction {
 public:
  // Drops zero entries; rejects negative masses, mass on the empty set,
  // subsets outside the frame and totals away from 1 (kInvalidMass).
  MassFunction(Frame frame, std::map<Subset, double> focal);

  static MassFunction Vacuous(Frame frame);
  // m(focus) = weight, m(frame) = 1 - weight.
  static MassFunction SimpleSupport(Frame frame, Subset focus, double weight);

  const Frame& frame() const { return frame_; }
  const std::map<Subset, double>& focal() const { return focal_; }
  double Mass(Subset s) const;

  friend bool operator==(const MassFunction&, const MassFunction&) = default;

 private:
  Frame frame_;
  std::map<Subset, double> focal_;
};

// bel(A) = sum of m(B) over focal B contained in A.
double BeliefFromMass(const MassFunction& m, Subset a);

// Full belief table indexed by subset bitmask (2^|frame| entries).
struct BeliefTable {
  Frame frame;
  std::vector<double> values;
};

BeliefTable BeliefTableOf(const MassFunction& m);

// Moebius inversion m(A) = sum_{B subset of A} (-1)^|A - B| bel(B).
// Throws kNotABelief when a reconstructed mass is below -1e-9 or the table
// is not normalised.
MassFunction MassFromBelief(const BeliefTable& bel);

struct Combination {
  MassFunction combined;
  double conflict;  // K
};

// Dempster's rule. Throws kFrameMismatch on different frames and
// kTotalConflict when 1 - K <= 1e-12. Symmetric in its arguments bit for bit.
Combination DempsterCombine(const MassFunction& m1, const MassFunction& m2);

// One scored piece of evidence supporting `focus`.
struct EvidenceItem {
  std::string label;
  Subset focus = 0;
  double score = 0.0;
};

struct EvidenceCombination {
  MassFunction combined;
  // Total conflict of the n-way conjunctive combination, 1 - prod(1 - K_i).
  double conflict;
};

// Left fold of DempsterCombine over simple-support masses, starting from the
// vacuous mass. Items with an empty focus or a zero score are skipped.
EvidenceCombination CombineEvidence(const Frame& frame,
                                    const std::vector<EvidenceItem>& items);

}  // namespace spolink

#endif  // SPOLINK_BELIEF_H_
