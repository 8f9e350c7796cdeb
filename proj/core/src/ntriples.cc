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

#include "spolink/ntriples.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>

namespace spolink::ntriples {
namespace {

bool IsInlineSpace(char c) { return c == ' ' || c == '\t'; }

bool IsAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

std::optional<std::uint32_t> HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return std::nullopt;
}

void AppendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Recursive-descent scanner over a single line. Every Parse* method either
// produces a value and advances `pos_`, or records `error_` and returns
// nullopt.
class LineScanner {
 public:
  LineScanner(std::string_view line, int line_number)
      : line_(line), line_number_(line_number) {}

  LineResult Run() {
    SkipSpace();
    if (AtEnd()) return Blank{};
    if (Peek() == '#') return Comment{};

    std::vector<Term> terms;
    std::vector<std::size_t> starts;
    bool saw_dot = false;
    for (;;) {
      SkipSpace();
      if (AtEnd() || Peek() == '#') break;
      if (Peek() == '.') {
        saw_dot = true;
        break;
      }
      if (terms.size() == 3) {
        return Fail(ErrorCategory::kTermCount, pos_,
                    "unexpected fourth term; expected '.'");
      }
      starts.push_back(pos_);
      auto term = ParseTerm();
      if (!term) return *error_;
      terms.push_back(std::move(*term));
    }

    if (terms.size() < 3) {
      return Fail(ErrorCategory::kTermCount, pos_,
                  "expected 3 terms, found " + std::to_string(terms.size()));
    }
    if (!saw_dot) {
      return Fail(ErrorCategory::kMissingDot, pos_,
                  "triple is not terminated by '.'");
    }
    ++pos_;  // '.'
    SkipSpace();
    if (!AtEnd() && Peek() != '#') {
      return Fail(ErrorCategory::kTermCount, pos_,
                  "unexpected content after '.'");
    }

    if (terms[0].IsLiteral()) {
      return Fail(ErrorCategory::kBadIri, starts[0],
                  "subject must be an IRI or blank node");
    }
    if (!terms[1].IsIri()) {
      return Fail(ErrorCategory::kBadIri, starts[1], "predicate must be an IRI");
    }
    return Triple{std::move(terms[0]), std::move(terms[1]), std::move(terms[2])};
  }

 private:
  bool AtEnd() const { return pos_ >= line_.size(); }
  char Peek() const { return line_[pos_]; }

  void SkipSpace() {
    while (!AtEnd() && IsInlineSpace(Peek())) ++pos_;
  }

  int ColumnOf(std::size_t pos) const {
    if (line_.empty()) return 1;
    return static_cast<int>(std::min(pos, line_.size() - 1)) + 1;
  }

  ParseError Fail(ErrorCategory category, std::size_t at, std::string message) {
    error_ = ParseError{line_number_, ColumnOf(at), std::move(message),
                        category};
    return *error_;
  }

  std::optional<Term> ParseTerm() {
    switch (Peek()) {
      case '<': {
        auto iri = ParseIriRef();
        if (!iri) return std::nullopt;
        return Term{TermKind::kIri, std::move(*iri), std::nullopt,
                    std::nullopt};
      }
      case '_':
        return ParseBlankNode();
      case '"':
        return ParseLiteral();
      default:
        Fail(ErrorCategory::kBadIri, pos_,
             "expected '<', '_:' or '\"' at start of term");
        return std::nullopt;
    }
  }

  // \uXXXX or \UXXXXXXXX; `pos_` points at the 'u' / 'U'.
  std::optional<std::uint32_t> ParseUnicodeEscape() {
    std::size_t escape_start = pos_ - 1;
    int digits = Peek() == 'u' ? 4 : 8;
    ++pos_;
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      auto v = AtEnd() ? std::nullopt : HexValue(Peek());
      if (!v) {
        Fail(ErrorCategory::kBadEscape, AtEnd() ? escape_start : pos_,
             "malformed unicode escape");
        return std::nullopt;
      }
      cp = cp * 16 + *v;
      ++pos_;
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      Fail(ErrorCategory::kBadEscape, escape_start,
           "unicode escape is not a scalar value");
      return std::nullopt;
    }
    return cp;
  }

  std::optional<std::string> ParseIriRef() {
    std::size_t start = pos_;
    ++pos_;  // '<'
    std::string out;
    while (!AtEnd() && Peek() != '>') {
      char c = Peek();
      if (c == '\\') {
        ++pos_;
        if (AtEnd() || (Peek() != 'u' && Peek() != 'U')) {
          Fail(ErrorCategory::kBadEscape, pos_ - 1,
               "only \\u and \\U escapes are allowed in IRIs");
          return std::nullopt;
        }
        auto cp = ParseUnicodeEscape();
        if (!cp) return std::nullopt;
        AppendUtf8(out, *cp);
        continue;
      }
      auto u = static_cast<unsigned char>(c);
      if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`') {
        Fail(ErrorCategory::kBadIri, pos_,
             std::string("character not allowed in IRI: '") +
                 (u < 0x20 ? std::string("\\x") + std::to_string(u)
                           : std::string(1, c)) +
                 "'");
        return std::nullopt;
      }
      out.push_back(c);
      ++pos_;
    }
    if (AtEnd()) {
      Fail(ErrorCategory::kBadIri, start, "unterminated IRI");
      return std::nullopt;
    }
    ++pos_;  // '>'
    if (!IsValidIri(out)) {
      Fail(ErrorCategory::kBadIri, start,
           out.empty() ? "empty IRI" : "IRI contains a forbidden character");
      return std::nullopt;
    }
    return out;
  }

  std::optional<Term> ParseBlankNode() {
    std::size_t start = pos_;
    ++pos_;  // '_'
    if (AtEnd() || Peek() != ':') {
      Fail(ErrorCategory::kBadBlankNode, start, "expected '_:'");
      return std::nullopt;
    }
    ++pos_;
    std::size_t label_start = pos_;
    while (!AtEnd() && IsAlnum(Peek())) ++pos_;
    std::string label(line_.substr(label_start, pos_ - label_start));
    bool bad_follow = !AtEnd() && !IsInlineSpace(Peek()) && Peek() != '.' &&
                      Peek() != '<' && Peek() != '"' && Peek() != '_' &&
                      Peek() != '#';
    if (!IsValidBlankLabel(label) || bad_follow) {
      Fail(ErrorCategory::kBadBlankNode, bad_follow ? pos_ : label_start,
           "blank node label must match [A-Za-z][A-Za-z0-9]*");
      return std::nullopt;
    }
    return Term{TermKind::kBlankNode, std::move(label), std::nullopt,
                std::nullopt};
  }

  std::optional<Term> ParseLiteral() {
    std::size_t start = pos_;
    ++pos_;  // '"'
    std::string lexical;
    bool closed = false;
    while (!AtEnd()) {
      char c = Peek();
      if (c == '"') {
        closed = true;
        ++pos_;
        break;
      }
      if (c != '\\') {
        lexical.push_back(c);
        ++pos_;
        continue;
      }
      ++pos_;
      if (AtEnd()) break;
      switch (Peek()) {
        case '"': lexical.push_back('"'); ++pos_; break;
        case '\\': lexical.push_back('\\'); ++pos_; break;
        case 'n': lexical.push_back('\n'); ++pos_; break;
        case 't': lexical.push_back('\t'); ++pos_; break;
        case 'r': lexical.push_back('\r'); ++pos_; break;
        case 'u':
        case 'U': {
          auto cp = ParseUnicodeEscape();
          if (!cp) return std::nullopt;
          AppendUtf8(lexical, *cp);
          break;
        }
        default:
          Fail(ErrorCategory::kBadEscape, pos_ - 1,
               std::string("unknown escape '\\") + Peek() + "'");
          return std::nullopt;
      }
    }
    if (!closed) {
      Fail(ErrorCategory::kBadLiteral, start, "unterminated literal");
      return std::nullopt;
    }

    if (!AtEnd() && Peek() == '@') {
      std::size_t tag_start = ++pos_;
      while (!AtEnd() && (IsAlnum(Peek()) || Peek() == '-')) ++pos_;
      std::string tag(line_.substr(tag_start, pos_ - tag_start));
      if (!IsValidLanguageTag(tag)) {
        Fail(ErrorCategory::kBadLiteral, tag_start - 1,
             "malformed language tag");
        return std::nullopt;
      }
      return Term{TermKind::kLiteral, std::move(lexical), std::move(tag),
                  std::nullopt};
    }
    if (!AtEnd() && Peek() == '^') {
      std::size_t caret = pos_;
      if (pos_ + 2 >= line_.size() || line_[pos_ + 1] != '^' ||
          line_[pos_ + 2] != '<') {
        Fail(ErrorCategory::kBadLiteral, caret,
             "expected '^^<' before datatype IRI");
        return std::nullopt;
      }
      pos_ += 2;
      auto datatype = ParseIriRef();
      if (!datatype) return std::nullopt;
      return Term{TermKind::kLiteral, std::move(lexical), std::nullopt,
                  std::move(*datatype)};
    }
    return Term{TermKind::kLiteral, std::move(lexical), std::nullopt,
                std::nullopt};
  }

  std::string_view line_;
  int line_number_;
  std::size_t pos_ = 0;
  std::optional<ParseError> error_;
};

void AppendEscaped(std::string& out, std::string_view lexical) {
  for (char c : lexical) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
}

}  // namespace

std::string_view CategoryName(ErrorCategory c) {
  static constexpr std::array<std::string_view, 6> kNames = {
      "BadIri", "BadLiteral", "BadBlankNode", "MissingDot", "TermCount",
      "BadEscape"};
  return kNames[static_cast<std::size_t>(c)];
}

LineResult ParseLine(std::string_view line, int line_number) {
  return LineScanner(line, line_number).Run();
}

ParseResult ParseDocument(std::string_view text) {
  ParseResult result;
  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_number;

    auto parsed = ParseLine(line, line_number);
    if (auto* triple = std::get_if<Triple>(&parsed)) {
      result.graph.Insert(std::move(*triple));
    } else if (auto* error = std::get_if<ParseError>(&parsed)) {
      result.errors.push_back(std::move(*error));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return result;
}

std::string RenderTerm(const Term& t) {
  std::string out;
  switch (t.kind) {
    case TermKind::kIri:
      out.reserve(t.lexical.size() + 2);
      out += '<';
      out += t.lexical;
      out += '>';
      break;
    case TermKind::kBlankNode:
      out = "_:" + t.lexical;
      break;
    case TermKind::kLiteral:
      out += '"';
      AppendEscaped(out, t.lexical);
      out += '"';
      if (t.language) {
        out += '@';
        out += *t.language;
      } else if (t.datatype) {
        out += "^^<";
        out += *t.datatype;
        out += '>';
      }
      break;
  }
  return out;
}

std::string RenderTriple(const Triple& t) {
  return RenderTerm(t.subject) + ' ' + RenderTerm(t.predicate) + ' ' +
         RenderTerm(t.object) + " .";
}

std::string Serialize(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const auto& t : g) lines.push_back(RenderTriple(t));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string FormatError(const ParseError& e) {
  return std::to_string(e.line) + ":" + std::to_string(e.column) + ": " +
         std::string(CategoryName(e.category)) + ": " + e.message;
}

}  // namespace spolink::ntriples
