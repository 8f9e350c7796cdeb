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

#ifndef SPOLINK_PATTERNS_H_
#define SPOLINK_PATTERNS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spolink/graph_model.h"
#include "spolink/term.h"

namespace spolink {

// Exact ratio count/length, kept unreduced so that `length` stays the
// pattern length it was computed for.
struct Lambda {
  std::uint64_t count = 0;   // r
  std::uint64_t length = 0;  // x

  friend std::strong_ordering operator<=>(const Lambda& a, const Lambda& b) {
    // a.count / a.length <=> b.count / b.length. Counts and lengths are
    // bounded by the stored symbol total (< 2^32), so products fit.
    return a.count * b.length <=> b.count * a.length;
  }
  friend bool operator==(const Lambda& a, const Lambda& b) {
    return (a <=> b) == 0;
  }
  double value() const {
    return length == 0 ? 0.0 : static_cast<double>(count) / length;
  }
};

using SymbolSequence = std::vector<SymbolId>;

struct RelationalSequence {
  SymbolSequence symbols;
  std::size_t session = 0;  // t
  std::string source;

  friend bool operator==(const RelationalSequence&,
                         const RelationalSequence&) = default;
};

struct Pattern {
  SymbolSequence symbols;
  std::uint64_t count = 0;  // r >= 1

  std::size_t length() const { return symbols.size(); }
  Lambda lambda() const { return {count, symbols.size()}; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// All patterns share length and count; ordered lexicographically.
struct PatternSet {
  std::vector<Pattern> patterns;

  std::size_t k() const { return patterns.size(); }
  const Pattern& front() const { return patterns.front(); }
};

struct SessionState {
  std::size_t k1 = 1;
  std::size_t k2 = 1;
  Lambda lambda;  // (r, x) of the last session; (0, 0) before any session
  std::size_t last_pattern_length = 0;

  friend bool operator==(const SessionState&, const SessionState&) = default;
};

// Set A of stored sequences together with the pattern mined per session.
struct SequenceStore {
  std::vector<RelationalSequence> sequences;
  std::vector<Pattern> patterns;

  std::size_t sessions() const { return sequences.size(); }
};

class MiningError : public std::runtime_error {
 public:
  enum class Code { kNoWindow, kEmptyRange, kEmptySequence, kBlankNodePresent };

  MiningError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Triples in canonical N-Triples line order flattened as s1 p1 o1 s2 ...
// Interns any term not yet in `table`. Throws kBlankNodePresent.
RelationalSequence UriSequence(const Graph& g, SymbolTable& table,
                               std::size_t session = 0,
                               std::string source = {});

struct RepetitionResult {
  Pattern best;     // max count, lexicographically smallest on ties
  PatternSet ties;  // every window content attaining the max count
};

// Counts every length-x window across all stored sequences (overlapping,
// aggregated). Throws kNoWindow when all sequences are shorter than x.
RepetitionResult GenRelativeRepetitiveSeq(const SequenceStore& store,
                                          std::size_t x);

// Maximum window count for every x in [lo, hi], entries for x without any
// window are 0. Index i corresponds to x = lo + i.
std::vector<std::uint64_t> MaxWindowCounts(const SequenceStore& store,
                                           std::size_t lo, std::size_t hi);

struct MiningOutcome {
  PatternSet patterns;
  SessionState state;
  std::size_t chosen_length = 0;  // x*
};

// Scans x in [state.k1, state.k2], picks the largest x minimising r/x.
MiningOutcome GenRelationalPattern(const SequenceStore& store,
                                   const SessionState& state);

struct SessionReport {
  std::size_t session = 0;
  std::size_t k1_used = 0;
  std::size_t k2_used = 0;
  PatternSet patterns;
};

// Appends urisequence(g) as S^t, derives (K1, K2), mines, and records P_s^t.
// Leaves store and state untouched when it throws.
SessionReport RunSession(SequenceStore& store, SessionState& state,
                         const Graph& g, SymbolTable& table,
                         std::string source = {});

}  // namespace spolink

#endif  // SPOLINK_PATTERNS_H_
