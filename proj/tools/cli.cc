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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "spolink/graph_model.h"
#include "spolink/match.h"
#include "spolink/ntriples.h"
#include "spolink/patterns.h"
#include "spolink/relate.h"
#include "spolink/sequence_store_io.h"

namespace spolink::cli {
namespace {

using nlohmann::json;

// Carries an exit code up to Run().
class Failure : public std::runtime_error {
 public:
  Failure(ExitCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

struct Options {
  std::string skolem_scheme = "http://skolem.invalid/";
  std::string scores_path;
  double threshold = kDefaultThreshold;
  bool json_output = false;
  std::string format = "json";
  std::string out_path;
  std::string store_path;
  std::string add_path;
  std::vector<std::string> files;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(kUsage, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void RequireReadable(const std::vector<std::string>& paths) {
  for (const auto& p : paths) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(p, ec)) {
      throw Failure(kUsage, "no such file: " + p);
    }
  }
}

std::string Basename(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

// Parses a document and replaces its blank nodes with IRIs scoped to the
// document's content hash.
Graph LoadGraph(const std::string& path, const std::string& skolem_base) {
  const std::string text = ReadFile(path);
  auto parsed = ntriples::ParseDocument(text);
  if (!parsed.ok()) {
    std::string message;
    for (const auto& e : parsed.errors) {
      message += path + ":" + ntriples::FormatError(e) + "\n";
    }
    message.pop_back();
    throw Failure(kParse, message);
  }
  try {
    return ReifyBlankNodes(parsed.graph,
                           DocumentSkolemScheme(skolem_base, text));
  } catch (const SkolemCollision& e) {
    throw Failure(kParse, path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw Failure(kUsage, e.what());
  }
}

ScoringConfig LoadScoring(const Options& opts) {
  if (opts.scores_path.empty()) return ScoringConfig::Defaults();
  try {
    return ScoringConfig::FromFile(opts.scores_path);
  } catch (const ConfigError& e) {
    throw Failure(kUsage, e.what());
  }
}

json ReportToJson(const RelationReport& report, const SymbolTable& table) {
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    json terms = json::array();
    for (auto id : w.symbols) {
      terms.push_back(ntriples::RenderTerm(table.TermOf(id)));
    }
    witnesses.push_back(
        {{"components", std::string(PairName(w.pair))}, {"terms", terms}});
  }
  return {{"kind", std::string(KindName(report.kind))},
          {"witnesses", witnesses},
          {"violated", report.violated}};
}

int Validate(const Options& opts, std::ostream& out) {
  RequireReadable(opts.files);
  auto parsed = ntriples::ParseDocument(ReadFile(opts.files[0]));
  for (const auto& e : parsed.errors) {
    out << opts.files[0] << ":" << ntriples::FormatError(e) << "\n";
  }
  out << parsed.graph.size() << " triples";
  if (!parsed.ok()) out << ", " << parsed.errors.size() << " errors";
  out << "\n";
  return parsed.ok() ? kOk : kParse;
}

int Classify(const Options& opts, std::ostream& out) {
  RequireReadable(opts.files);
  Graph a = LoadGraph(opts.files[0], opts.skolem_scheme);
  Graph b = LoadGraph(opts.files[1], opts.skolem_scheme);
  SymbolTable table;
  table.InternAll(a);
  table.InternAll(b);
  auto report = ClassifyPair(BuildComponentSets(a, table),
                             BuildComponentSets(b, table), a, b);
  if (opts.json_output) {
    out << ReportToJson(report, table).dump(2) << "\n";
    return kOk;
  }
  out << "kind: " << KindName(report.kind) << "\n";
  for (const auto& w : report.witnesses) {
    out << "witness " << PairName(w.pair) << ":";
    for (auto id : w.symbols) {
      out << " " << ntriples::RenderTerm(table.TermOf(id));
    }
    out << "\n";
  }
  for (const auto& v : report.violated) out << "violated: " << v << "\n";
  if (report.ambiguous) out << "ambiguous: kind chosen by precedence\n";
  return kOk;
}

std::string DotQuote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

int RelateAllCommand(const Options& opts, std::ostream& out) {
  RequireReadable(opts.files);
  if (opts.out_path.empty()) throw Failure(kUsage, "--out is required");

  // Node ids are basenames; sorting makes the output independent of the
  // order the files were given in.
  std::map<std::string, std::string> by_name;
  for (const auto& path : opts.files) {
    if (!by_name.emplace(Basename(path), path).second) {
      throw Failure(kUsage, "duplicate file name: " + Basename(path));
    }
  }
  std::vector<NamedGraph> graphs;
  SymbolTable table;
  for (const auto& [name, path] : by_name) {
    graphs.push_back({name, LoadGraph(path, opts.skolem_scheme)});
    table.InternAll(graphs.back().graph);
  }
  auto link = RelateAll(graphs, table, LoadScoring(opts));

  std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Failure(kUsage, "cannot write " + opts.out_path);
  if (opts.format == "dot") {
    file << "digraph links {\n";
    for (const auto& n : link.nodes) file << "  " << DotQuote(n) << ";\n";
    for (const auto& e : link.edges) {
      json score = e.score;
      file << "  " << DotQuote(link.nodes[e.from]) << " -> "
           << DotQuote(link.nodes[e.to]) << " [label="
           << DotQuote(std::string(KindName(e.report.kind)))
           << ", weight=" << score.dump() << "];\n";
    }
    file << "}\n";
  } else {
    json edges = json::array();
    for (const auto& e : link.edges) {
      edges.push_back({{"from", link.nodes[e.from]},
                       {"to", link.nodes[e.to]},
                       {"kind", std::string(KindName(e.report.kind))},
                       {"score", e.score}});
    }
    file << json{{"nodes", link.nodes}, {"edges", edges}}.dump(2) << "\n";
  }
  out << "wrote " << link.nodes.size() << " nodes and " << link.edges.size()
      << " edges to " << opts.out_path << "\n";
  return kOk;
}

int Mine(const Options& opts, std::ostream& out) {
  RequireReadable({opts.add_path});
  PersistedStore persisted;
  if (std::filesystem::exists(opts.store_path)) {
    try {
      persisted = LoadStore(opts.store_path);
    } catch (const StoreCorruption& e) {
      throw Failure(kStoreCorrupt, e.what());
    }
  }
  Graph g = LoadGraph(opts.add_path, opts.skolem_scheme);

  SessionReport report;
  try {
    report = RunSession(persisted.store, persisted.state, g, persisted.table,
                        Basename(opts.add_path));
  } catch (const MiningError& e) {
    throw Failure(kParse, opts.add_path + ": " + e.what());
  }
  SaveStore(persisted, opts.store_path);

  json patterns = json::array();
  for (const auto& p : report.patterns.patterns) {
    json symbols = json::array();
    json terms = json::array();
    for (auto id : p.symbols) {
      symbols.push_back(ToIndex(id));
      terms.push_back(ntriples::RenderTerm(persisted.table.TermOf(id)));
    }
    patterns.push_back(
        {{"symbols", symbols}, {"terms", terms}, {"r", p.count},
         {"x", p.length()}});
  }
  const auto& st = persisted.state;
  json doc = {
      {"session", report.session},
      {"K1_used", report.k1_used},
      {"K2_used", report.k2_used},
      {"k", report.patterns.k()},
      {"patterns", patterns},
      {"state",
       {{"K1", st.k1},
        {"K2", st.k2},
        {"lambda",
         std::to_string(st.lambda.count) + "/" +
             std::to_string(st.lambda.length)},
        {"r", st.lambda.count},
        {"x", st.lambda.length}}}};
  out << doc.dump(2) << "\n";
  return kOk;
}

int Match(const Options& opts, std::ostream& out) {
  RequireReadable(opts.files);
  ScoringConfig scoring = LoadScoring(opts);
  Graph a = LoadGraph(opts.files[0], opts.skolem_scheme);
  Graph b = LoadGraph(opts.files[1], opts.skolem_scheme);
  SymbolTable table;
  MatchResult result;
  try {
    result = MatchGraphs(a, b, table, scoring, opts.threshold);
  } catch (const BeliefError& e) {
    throw Failure(kEvidence, e.what());
  } catch (const std::invalid_argument& e) {
    throw Failure(kUsage, e.what());
  }
  json doc = {{"belief", result.belief},
              {"threshold", result.threshold},
              {"established", result.established},
              {"conflictK", result.conflict}};
  out << doc.dump(2) << "\n";
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Relate, mine and match N-Triples graphs", "spolink"};
  app.require_subcommand(1);
  app.add_option("--skolem-scheme", opts.skolem_scheme,
                 "IRI prefix for skolemized blank nodes");

  auto* validate = app.add_subcommand("validate", "Parse and report errors");
  validate->add_option("file", opts.files, "N-Triples file")
      ->required()
      ->expected(1);

  auto* classify =
      app.add_subcommand("classify", "Classify the relation of two graphs");
  classify->add_option("files", opts.files, "Two N-Triples files")
      ->required()
      ->expected(2);
  classify->add_flag("--json", opts.json_output, "Emit JSON");

  auto* relate_all =
      app.add_subcommand("relate-all", "Build the link graph of a corpus");
  relate_all->add_option("files", opts.files, "N-Triples files")
      ->required()
      ->expected(1, -1);
  relate_all->add_option("--out", opts.out_path, "Output path")->required();
  relate_all->add_option("--format", opts.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  relate_all->add_option("--scores", opts.scores_path, "Scoring config JSON");

  auto* mine = app.add_subcommand("mine", "Run one pattern mining session");
  mine->add_option("--store", opts.store_path, "Store file")->required();
  mine->add_option("--add", opts.add_path, "N-Triples file")->required();

  auto* match = app.add_subcommand("match", "Dempster-Shafer match verdict");
  match->add_option("files", opts.files, "Two N-Triples files")
      ->required()
      ->expected(2);
  match->add_option("--threshold", opts.threshold, "Preset belief value")
      ->check(CLI::Range(0.0, 1.0));
  match->add_option("--scores", opts.scores_path, "Scoring config JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (opts.threshold <= 0.0) {
    err << "--threshold must be greater than 0\n";
    return kUsage;
  }

  try {
    if (*validate) return Validate(opts, out);
    if (*classify) return Classify(opts, out);
    if (*relate_all) return RelateAllCommand(opts, out);
    if (*mine) return Mine(opts, out);
    if (*match) return Match(opts, out);
  } catch (const Failure& e) {
    err << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace spolink::cli
