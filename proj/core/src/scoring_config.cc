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

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spolink/relate.h"

namespace spolink {

ScoringConfig ScoringConfig::Defaults() {
  ScoringConfig c;
  c.scores_ = {1.0, 0.9, 0.9, 0.6, 0.6, 0.2, 0.2, 0.2, 0.0};
  return c;
}

void ScoringConfig::Set(RelationKind kind, double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw ConfigError("score for " + std::string(KindName(kind)) +
                      " must lie in [0, 1]");
  }
  scores_[static_cast<std::size_t>(kind)] = score;
}

ScoringConfig ScoringConfig::FromJsonText(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("scoring config is not valid JSON: ") +
                      e.what());
  }
  if (!doc.is_object()) throw ConfigError("scoring config must be an object");

  ScoringConfig config = Defaults();
  for (const auto& [key, value] : doc.items()) {
    auto kind = KindFromName(key);
    if (!kind) throw ConfigError("unknown relation kind in config: " + key);
    if (!value.is_number()) {
      throw ConfigError("score for " + key + " must be a number");
    }
    config.Set(*kind, value.get<double>());
  }
  return config;
}

ScoringConfig ScoringConfig::FromFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open scoring config: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return FromJsonText(buffer.str());
}

}  // namespace spolink
