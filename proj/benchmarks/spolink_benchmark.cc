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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "spolink/belief.h"
#include "spolink/patterns.h"
#include "spolink/relate.h"

namespace spolink {
namespace {

Graph RandomGraph(std::mt19937_64& rng, std::size_t triples,
                  std::size_t vocabulary) {
  std::uniform_int_distribution<std::size_t> pick(0, vocabulary - 1);
  auto iri = [&](const char* role) {
    return Term::Iri("http://ex.org/" + std::string(role) +
                     std::to_string(pick(rng)));
  };
  Graph g;
  while (g.size() < triples) g.Insert({iri("s"), iri("p"), iri("o")});
  return g;
}

// One mining session appended to a store of p - 1 sequences of n symbols.
void BM_MiningSession(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  SymbolTable table;
  SequenceStore base;
  for (std::size_t t = 0; t + 1 < p; ++t) {
    base.sequences.push_back(UriSequence(RandomGraph(rng, n / 3, 40), table, t));
  }
  Graph last = RandomGraph(rng, n / 3, 40);
  for (auto _ : state) {
    SequenceStore store = base;
    SessionState session{1, 1, {}, 1};
    benchmark::DoNotOptimize(RunSession(store, session, last, table));
  }
}
BENCHMARK(BM_MiningSession)
    ->Args({2, 60})
    ->Args({5, 150})
    ->Args({10, 300})
    ->Unit(benchmark::kMillisecond);

void BM_ClassifyPair(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto size = static_cast<std::size_t>(state.range(0));
  Graph a = RandomGraph(rng, size, size);
  Graph b = RandomGraph(rng, size, size);
  SymbolTable table;
  table.InternAll(a);
  table.InternAll(b);
  auto sa = BuildComponentSets(a, table);
  auto sb = BuildComponentSets(b, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ClassifyPair(sa, sb, a, b));
  }
}
BENCHMARK(BM_ClassifyPair)->Range(8, 1024);

Frame FrameOfSize(std::size_t n) {
  std::vector<SymbolId> elements;
  for (std::size_t i = 0; i < n; ++i) {
    elements.push_back(static_cast<SymbolId>(i));
  }
  return Frame(elements);
}

void BM_CombineEvidence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Frame frame = FrameOfSize(n);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Subset> focus(1, frame.Full());
  std::vector<EvidenceItem> items;
  for (int i = 0; i < 16; ++i) items.push_back({"e", focus(rng), 0.3});
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(CombineEvidence(frame, items));
    } catch (const BeliefError&) {
    }
  }
}
BENCHMARK(BM_CombineEvidence)->DenseRange(4, 16, 4);

void BM_BeliefRoundTrip(benchmark::State& state) {
  Frame frame = FrameOfSize(static_cast<std::size_t>(state.range(0)));
  auto m = MassFunction::SimpleSupport(frame, 1, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MassFromBelief(BeliefTableOf(m)));
  }
}
BENCHMARK(BM_BeliefRoundTrip)->DenseRange(4, 20, 4);

}  // namespace
}  // namespace spolink

BENCHMARK_MAIN();
