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

#include "spolink/sequence_store_io.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace spolink {
namespace {

using nlohmann::json;

json TermToJson(const Term& t) {
  json j;
  switch (t.kind) {
    case TermKind::kIri: j["kind"] = "iri"; break;
    case TermKind::kLiteral: j["kind"] = "literal"; break;
    case TermKind::kBlankNode: j["kind"] = "bnode"; break;
  }
  j["lexical"] = t.lexical;
  if (t.language) j["language"] = *t.language;
  if (t.datatype) j["datatype"] = *t.datatype;
  return j;
}

Term TermFromJson(const json& j) {
  const auto& kind = j.at("kind").get_ref<const std::string&>();
  auto lexical = j.at("lexical").get<std::string>();
  for (const auto& [key, value] : j.items()) {
    if (key != "kind" && key != "lexical" && key != "language" &&
        key != "datatype") {
      throw StoreCorruption("unknown field in term record: " + key);
    }
  }
  if (kind == "iri") return Term::Iri(std::move(lexical));
  if (kind == "bnode") return Term::BlankNode(std::move(lexical));
  if (kind != "literal") throw StoreCorruption("unknown term kind: " + kind);
  bool has_lang = j.contains("language");
  bool has_type = j.contains("datatype");
  if (has_lang && has_type) {
    throw StoreCorruption("literal carries both language and datatype");
  }
  if (has_lang) {
    return Term::LangLiteral(std::move(lexical), j["language"].get<std::string>());
  }
  if (has_type) {
    return Term::TypedLiteral(std::move(lexical),
                              j["datatype"].get<std::string>());
  }
  return Term::Literal(std::move(lexical));
}

json SymbolsToJson(const SymbolSequence& symbols) {
  json arr = json::array();
  for (auto id : symbols) arr.push_back(ToIndex(id));
  return arr;
}

SymbolSequence SymbolsFromJson(const json& arr, std::size_t table_size) {
  SymbolSequence out;
  for (const auto& v : arr) {
    auto id = v.get<std::uint64_t>();
    if (id >= table_size) {
      throw StoreCorruption("symbol id " + std::to_string(id) +
                            " is outside the symbol table");
    }
    out.push_back(static_cast<SymbolId>(id));
  }
  return out;
}

void Require(bool condition, const std::string& message) {
  if (!condition) throw StoreCorruption(message);
}

std::size_t CountOccurrences(const SequenceStore& store,
                             const SymbolSequence& needle) {
  std::size_t count = 0;
  for (const auto& seq : store.sequences) {
    const auto& hay = seq.symbols;
    if (hay.size() < needle.size()) continue;
    for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
      if (std::equal(needle.begin(), needle.end(), hay.begin() + i)) ++count;
    }
  }
  return count;
}

PersistedStore Decode(const json& doc) {
  Require(doc.is_object(), "store must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    Require(key == "symbols" || key == "sequences" || key == "patterns" ||
                key == "state",
            "unknown top-level field: " + key);
  }

  PersistedStore out;
  for (const auto& record : doc.at("symbols")) {
    Term t = TermFromJson(record);
    Require(!out.table.Find(t), "duplicate term in symbol table");
    out.table.Intern(t);
  }

  const auto& sequences = doc.at("sequences");
  const auto& patterns = doc.at("patterns");
  Require(sequences.is_array() && patterns.is_array(),
          "sequences and patterns must be arrays");
  Require(patterns.size() == sequences.size(),
          "one pattern per completed session is required");

  // Replay every session against the growing store. The recorded pattern
  // and bounds must be exactly what mining reproduces.
  SequenceStore replay;
  SessionState state;
  for (std::size_t t = 0; t < sequences.size(); ++t) {
    const auto& s = sequences[t];
    Require(s.at("t").get<std::size_t>() == t, "sessions must be contiguous");
    RelationalSequence seq;
    seq.session = t;
    seq.source = s.at("source").get<std::string>();
    seq.symbols = SymbolsFromJson(s.at("symbols"), out.table.size());
    Require(!seq.symbols.empty(), "stored sequence is empty");

    const auto& p = patterns[t];
    Require(p.at("t").get<std::size_t>() == t, "pattern sessions misaligned");
    Pattern pattern{SymbolsFromJson(p.at("symbols"), out.table.size()),
                    p.at("r").get<std::uint64_t>()};
    Require(pattern.count >= 1, "pattern count must be positive");
    Require(p.at("x").get<std::size_t>() == pattern.length(),
            "pattern x must equal its length");

    SessionState working = state;
    working.k2 = seq.symbols.size();
    working.k1 = t == 0 ? 1
                        : std::clamp<std::size_t>(state.last_pattern_length, 1,
                                                  working.k2);
    replay.sequences.push_back(std::move(seq));

    Require(CountOccurrences(replay, pattern.symbols) == pattern.count,
            "pattern of session " + std::to_string(t) +
                " does not occur exactly r times");
    auto outcome = GenRelationalPattern(replay, working);
    Require(outcome.patterns.front() == pattern,
            "pattern of session " + std::to_string(t) +
                " does not match a replay of the session");
    replay.patterns.push_back(std::move(pattern));
    state = outcome.state;
  }

  const auto& st = doc.at("state");
  SessionState stored;
  stored.k1 = st.at("K1").get<std::size_t>();
  stored.k2 = st.at("K2").get<std::size_t>();
  stored.lambda = {st.at("r").get<std::uint64_t>(),
                   st.at("x").get<std::uint64_t>()};
  stored.last_pattern_length = stored.lambda.length;
  Require(stored.k1 >= 1 && stored.k1 <= stored.k2,
          "state requires 1 <= K1 <= K2");
  Require(stored.k1 == state.k1 && stored.k2 == state.k2 &&
              stored.lambda.count == state.lambda.count &&
              stored.lambda.length == state.lambda.length,
          "state does not match the replayed sessions");

  out.store = std::move(replay);
  out.state = stored;
  return out;
}

}  // namespace

std::string StoreToJson(const PersistedStore& s) {
  json doc;
  doc["symbols"] = json::array();
  for (const auto& t : s.table.terms()) doc["symbols"].push_back(TermToJson(t));
  doc["sequences"] = json::array();
  for (const auto& seq : s.store.sequences) {
    doc["sequences"].push_back({{"t", seq.session},
                                {"source", seq.source},
                                {"symbols", SymbolsToJson(seq.symbols)}});
  }
  doc["patterns"] = json::array();
  for (std::size_t t = 0; t < s.store.patterns.size(); ++t) {
    const auto& p = s.store.patterns[t];
    doc["patterns"].push_back({{"t", t},
                               {"symbols", SymbolsToJson(p.symbols)},
                               {"r", p.count},
                               {"x", p.length()}});
  }
  doc["state"] = {{"K1", s.state.k1},
                  {"K2", s.state.k2},
                  {"r", s.state.lambda.count},
                  {"x", s.state.lambda.length}};
  return doc.dump(2) + "\n";
}

PersistedStore StoreFromJson(std::string_view text) {
  try {
    return Decode(json::parse(text));
  } catch (const json::exception& e) {
    throw StoreCorruption(std::string("malformed store: ") + e.what());
  } catch (const InvalidTerm& e) {
    throw StoreCorruption(std::string("malformed term record: ") + e.what());
  } catch (const MiningError& e) {
    throw StoreCorruption(std::string("store replay failed: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw StoreCorruption(std::string("store replay failed: ") + e.what());
  }
}

PersistedStore LoadStore(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StoreCorruption("cannot open store: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return StoreFromJson(buffer.str());
}

void SaveStore(const PersistedStore& s, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write store: " + tmp);
    out << StoreToJson(s);
    if (!out) throw std::runtime_error("failed writing store: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace spolink
