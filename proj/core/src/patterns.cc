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

#include "spolink/patterns.h"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "spolink/ntriples.h"

namespace spolink {
namespace {

// Equivalence classes of equal-content windows, refined one symbol at a
// time: class(i, x + 1) is determined by (class(i, x), symbol(i + x)).
class WindowClasses {
 public:
  explicit WindowClasses(const SequenceStore& store) {
    for (const auto& seq : store.sequences) {
      for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
        symbols_.push_back(ToIndex(seq.symbols[i]));
        remaining_.push_back(seq.symbols.size() - i);
      }
    }
  }

  // Moves from windows of length x to x + 1 (x = 0 initially).
  void Advance() {
    ++length_;
    std::unordered_map<std::uint64_t, std::uint32_t> ids;
    std::vector<std::size_t> next_positions;
    std::vector<std::uint32_t> next_classes;
    const bool first = length_ == 1;
    const std::size_t n = first ? symbols_.size() : positions_.size();
    ids.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pos = first ? k : positions_[k];
      if (remaining_[pos] < length_) continue;
      std::uint64_t key =
          first ? symbols_[pos]
                : (static_cast<std::uint64_t>(classes_[k]) << 32) |
                      symbols_[pos + length_ - 1];
      auto [it, inserted] =
          ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
      next_positions.push_back(pos);
      next_classes.push_back(it->second);
    }
    positions_ = std::move(next_positions);
    classes_ = std::move(next_classes);
    class_count_ = ids.size();
  }

  void AdvanceTo(std::size_t x) {
    while (length_ < x) Advance();
  }

  std::size_t length() const { return length_; }
  bool empty() const { return positions_.empty(); }

  std::vector<std::uint64_t> CountPerClass() const {
    std::vector<std::uint64_t> counts(class_count_, 0);
    for (auto c : classes_) ++counts[c];
    return counts;
  }

  std::uint64_t MaxCount() const {
    auto counts = CountPerClass();
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  }

  // Window contents of every class reaching the maximum count, sorted.
  std::vector<SymbolSequence> MaxContents(std::uint64_t& max_count) const {
    auto counts = CountPerClass();
    max_count = counts.empty() ? 0 : *std::max_element(counts.begin(),
                                                       counts.end());
    std::vector<bool> emitted(counts.size(), false);
    std::vector<SymbolSequence> out;
    for (std::size_t k = 0; k < positions_.size(); ++k) {
      auto c = classes_[k];
      if (counts[c] != max_count || emitted[c]) continue;
      emitted[c] = true;
      SymbolSequence content;
      content.reserve(length_);
      for (std::size_t j = 0; j < length_; ++j) {
        content.push_back(static_cast<SymbolId>(symbols_[positions_[k] + j]));
      }
      out.push_back(std::move(content));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::uint32_t> symbols_;
  std::vector<std::size_t> remaining_;  // symbols left in the sequence
  std::vector<std::size_t> positions_;  // window starts valid at length_
  std::vector<std::uint32_t> classes_;  // parallel to positions_
  std::size_t class_count_ = 0;
  std::size_t length_ = 0;
};

}  // namespace

RelationalSequence UriSequence(const Graph& g, SymbolTable& table,
                               std::size_t session, std::string source) {
  if (g.HasBlankNodes()) {
    throw MiningError(MiningError::Code::kBlankNodePresent,
                      "graph contains blank nodes; reify them first");
  }
  std::vector<std::pair<std::string, const Triple*>> ordered;
  ordered.reserve(g.size());
  for (const auto& t : g) ordered.emplace_back(ntriples::RenderTriple(t), &t);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  RelationalSequence seq;
  seq.session = session;
  seq.source = std::move(source);
  seq.symbols.reserve(3 * g.size());
  for (const auto& [line, t] : ordered) {
    seq.symbols.push_back(table.Intern(t->subject));
    seq.symbols.push_back(table.Intern(t->predicate));
    seq.symbols.push_back(table.Intern(t->object));
  }
  return seq;
}

RepetitionResult GenRelativeRepetitiveSeq(const SequenceStore& store,
                                          std::size_t x) {
  if (x == 0) throw std::invalid_argument("window length must be positive");
  WindowClasses classes(store);
  classes.AdvanceTo(x);
  if (classes.empty()) {
    throw MiningError(MiningError::Code::kNoWindow,
                      "no stored sequence has length >= " + std::to_string(x));
  }
  std::uint64_t r = 0;
  auto contents = classes.MaxContents(r);

  RepetitionResult result;
  for (auto& content : contents) {
    result.ties.patterns.push_back(Pattern{std::move(content), r});
  }
  result.best = result.ties.front();
  return result;
}

std::vector<std::uint64_t> MaxWindowCounts(const SequenceStore& store,
                                           std::size_t lo, std::size_t hi) {
  if (lo == 0 || lo > hi) throw std::invalid_argument("bad window range");
  std::vector<std::uint64_t> counts;
  counts.reserve(hi - lo + 1);
  WindowClasses classes(store);
  for (std::size_t x = 1; x <= hi; ++x) {
    classes.Advance();
    if (x >= lo) counts.push_back(classes.MaxCount());
    if (classes.empty()) {
      // Longer windows cannot exist either.
      counts.resize(hi - lo + 1, 0);
      break;
    }
  }
  return counts;
}

MiningOutcome GenRelationalPattern(const SequenceStore& store,
                                   const SessionState& state) {
  if (state.k1 < 1 || state.k1 > state.k2) {
    throw std::invalid_argument("session bounds require 1 <= K1 <= K2");
  }
  auto counts = MaxWindowCounts(store, state.k1, state.k2);

  std::size_t best_x = 0;
  Lambda best_lambda;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    Lambda lambda{counts[i], state.k1 + i};
    // "<=" lets a larger x take over on equal ratios.
    if (best_x == 0 || lambda <= best_lambda) {
      best_lambda = lambda;
      best_x = state.k1 + i;
    }
  }
  if (best_x == 0) {
    throw MiningError(MiningError::Code::kEmptyRange,
                      "no window length in [K1, K2] admits a window");
  }

  auto repetition = GenRelativeRepetitiveSeq(store, best_x);
  MiningOutcome outcome;
  outcome.chosen_length = best_x;
  outcome.patterns = std::move(repetition.ties);
  outcome.state = state;
  outcome.state.k1 = best_x;
  outcome.state.lambda = best_lambda;
  outcome.state.last_pattern_length = best_x;
  return outcome;
}

SessionReport RunSession(SequenceStore& store, SessionState& state,
                         const Graph& g, SymbolTable& table,
                         std::string source) {
  if (g.empty()) {
    throw MiningError(MiningError::Code::kEmptySequence,
                      "session graph is empty");
  }
  const std::size_t t = store.sessions();
  auto seq = UriSequence(g, table, t, std::move(source));

  SessionState working = state;
  working.k2 = seq.symbols.size();
  working.k1 = t == 0 ? 1
                      : std::clamp<std::size_t>(state.last_pattern_length, 1,
                                                working.k2);

  store.sequences.push_back(std::move(seq));
  MiningOutcome outcome;
  try {
    outcome = GenRelationalPattern(store, working);
  } catch (...) {
    store.sequences.pop_back();
    throw;
  }
  store.patterns.push_back(outcome.patterns.front());
  state = outcome.state;

  SessionReport report;
  report.session = t;
  report.k1_used = working.k1;
  report.k2_used = working.k2;
  report.patterns = std::move(outcome.patterns);
  return report;
}

}  // namespace spolink
