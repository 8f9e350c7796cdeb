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

#ifndef SPOLINK_NTRIPLES_H_
#define SPOLINK_NTRIPLES_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spolink/term.h"

namespace spolink::ntriples {

enum class ErrorCategory {
  kBadIri,
  kBadLiteral,
  kBadBlankNode,
  kMissingDot,
  kTermCount,
  kBadEscape,
};

std::string_view CategoryName(ErrorCategory c);

struct ParseError {
  int line = 1;    // 1-based
  int column = 1;  // 1-based byte offset into the line
  std::string message;
  ErrorCategory category = ErrorCategory::kTermCount;

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

struct Comment {
  friend bool operator==(const Comment&, const Comment&) = default;
};
struct Blank {
  friend bool operator==(const Blank&, const Blank&) = default;
};

using LineResult = std::variant<Triple, Comment, Blank, ParseError>;

// Parses one line (no terminator). `line_number` is stamped into errors.
LineResult ParseLine(std::string_view line, int line_number);

// Outcome of parsing a whole document. `graph` holds every triple from the
// well-formed lines even when `errors` is non-empty.
struct ParseResult {
  Graph graph;
  std::vector<ParseError> errors;

  bool ok() const { return errors.empty(); }
};

// Splits on LF (a trailing CR is stripped) and keeps scanning after errors.
ParseResult ParseDocument(std::string_view text);

// Renders terms and triples in N-Triples syntax with minimal escaping.
std::string RenderTerm(const Term& t);
std::string RenderTriple(const Triple& t);  // "<s> <p> <o> ." without LF

// Canonical form: one LF-terminated line per triple, sorted by byte order.
std::string Serialize(const Graph& g);

std::string FormatError(const ParseError& e);

}  // namespace spolink::ntriples

#endif  // SPOLINK_NTRIPLES_H_
