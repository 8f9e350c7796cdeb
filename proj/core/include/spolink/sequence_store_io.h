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

#ifndef SPOLINK_SEQUENCE_STORE_IO_H_
#define SPOLINK_SEQUENCE_STORE_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "spolink/graph_model.h"
#include "spolink/patterns.h"

namespace spolink {

// Everything a mining session needs between process runs.
struct PersistedStore {
  SymbolTable table;
  SequenceStore store;
  SessionState state;
};

class StoreCorruption : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON layout:
//   { "symbols":   [ {"kind": "iri"|"literal"|"bnode", "lexical": ...,
//                     "language"?: ..., "datatype"?: ...}, ... ],
//     "sequences": [ {"t": int, "source": string, "symbols": [int]} ],
//     "patterns":  [ {"t": int, "symbols": [int], "r": int, "x": int} ],
//     "state":     {"K1": int, "K2": int, "r": int, "x": int} }
std::string StoreToJson(const PersistedStore& s);

// Validates every invariant and replays each session; any mismatch throws
// StoreCorruption.
PersistedStore StoreFromJson(std::string_view text);

PersistedStore LoadStore(const std::string& path);
// Writes to a sibling temporary file and renames it over `path`.
void SaveStore(const PersistedStore& s, const std::string& path);

}  // namespace spolink

#endif  // SPOLINK_SEQUENCE_STORE_IO_H_
