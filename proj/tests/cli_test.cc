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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace spolink::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string Data(const std::string& name) {
  return std::string(SPOLINK_TEST_DATA_DIR) + "/" + name;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("spolink_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Temp(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ValidateEmpty) {
  auto r = Call({"validate", Data("empty.nt")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("0 triples"), std::string::npos) << r.out;
}

TEST_F(CliTest, ValidateReportsErrors) {
  auto r = Call({"validate", Data("malformed.nt")});
  EXPECT_EQ(r.code, kParse);
  EXPECT_NE(r.out.find("malformed.nt:2:"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("TermCount"), std::string::npos);
  EXPECT_NE(r.out.find("malformed.nt:3:"), std::string::npos);
  EXPECT_NE(r.out.find("BadIri"), std::string::npos);
  EXPECT_NE(r.out.find("1 triples, 2 errors"), std::string::npos);
}

TEST_F(CliTest, ValidateNTriplesDraft) {
  auto r = Call({"validate", Data("ntriples_draft.nt")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("3 triples"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Call({}).code, kUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(Call({"classify", Data("sspp_t1.nt")}).code, kUsage);
  EXPECT_EQ(Call({"validate", Data("nope.nt")}).code, kUsage);
  EXPECT_EQ(Call({"match", Data("sspp_t1.nt"), Data("sspp_t2.nt"),
                  "--threshold", "0"})
                .code,
            kUsage);
  EXPECT_EQ(Call({"--skolem-scheme", "not a scheme", "classify",
                  Data("john.nt"), Data("john.nt")})
                .code,
            kUsage);
}

TEST_F(CliTest, ClassifyText) {
  auto r = Call({"classify", Data("sspp_t1.nt"), Data("sspp_t2.nt")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("SSPP"), std::string::npos) << r.out;
}

TEST_F(CliTest, ClassifyDirection) {
  auto forward = Call({"classify", Data("sp_t2.nt"), Data("sp_t1.nt")});
  auto backward = Call({"classify", Data("sp_t1.nt"), Data("sp_t2.nt")});
  EXPECT_NE(forward.out.find("kind: SP_forward"), std::string::npos)
      << forward.out;
  EXPECT_NE(backward.out.find("kind: SP_backward"), std::string::npos)
      << backward.out;
}

TEST_F(CliTest, ClassifyParseFailure) {
  EXPECT_EQ(Call({"classify", Data("malformed.nt"), Data("sspp_t1.nt")}).code,
            kParse);
}

TEST_F(CliTest, ClassifyJsonGolden) {
  auto r = Call({"classify", Data("sspp_t1.nt"), Data("sspp_t2.nt"), "--json"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, Slurp(std::string(SPOLINK_GOLDEN_DIR) +
                         "/classify_sspp.json"));
}

TEST_F(CliTest, ClassifyJsonWithBlankNodes) {
  auto r = Call({"classify", Data("john.nt"), Data("john.nt"), "--json"});
  ASSERT_EQ(r.code, kOk);
  auto doc = json::parse(r.out);
  EXPECT_EQ(doc["kind"], "Identical");
  // Skolem IRIs are stable across runs.
  EXPECT_EQ(r.out,
            Call({"classify", Data("john.nt"), Data("john.nt"), "--json"}).out);
}

TEST_F(CliTest, MatchJsonGolden) {
  auto r = Call({"match", Data("sspp_t1.nt"), Data("sspp_t2.nt")});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            Slurp(std::string(SPOLINK_GOLDEN_DIR) + "/match_sspp.json"));
}

TEST_F(CliTest, MatchScoresAndEvidenceErrors) {
  std::ofstream(Temp("scores.json")) << R"({"SSPP": 0.3})";
  auto r = Call({"match", Data("sspp_t1.nt"), Data("sspp_t2.nt"), "--scores",
                 Temp("scores.json")});
  ASSERT_EQ(r.code, kOk);
  auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["belief"].get<double>(), 0.3, 1e-12);
  EXPECT_FALSE(doc["established"].get<bool>());

  std::ofstream(Temp("bad.json")) << R"({"Nope": 0.3})";
  EXPECT_EQ(Call({"match", Data("sspp_t1.nt"), Data("sspp_t2.nt"), "--scores",
                  Temp("bad.json")})
                .code,
            kUsage);

  std::ofstream big(Temp("big.nt"));
  for (int i = 0; i < 11; ++i) {
    big << "<http://s/" << i << "> <http://p/" << i << "> \"" << i << "\" .\n";
  }
  big.close();
  EXPECT_EQ(Call({"match", Temp("big.nt"), Data("sspp_t1.nt")}).code,
            kEvidence);
}

TEST_F(CliTest, MineTwiceAdaptsLowerBound) {
  const std::string store = Temp("store.json");
  auto first = Call({"mine", "--store", store, "--add", Data("ntriples_draft.nt")});
  ASSERT_EQ(first.code, kOk) << first.err;
  auto second = Call({"mine", "--store", store, "--add", Data("ntriples_draft.nt")});
  ASSERT_EQ(second.code, kOk) << second.err;
  auto a = json::parse(first.out);
  auto b = json::parse(second.out);
  EXPECT_EQ(a["K1_used"], 1);
  EXPECT_EQ(a["session"], 0);
  EXPECT_EQ(b["session"], 1);
  const auto first_length = a["patterns"][0]["x"].get<std::size_t>();
  EXPECT_EQ(b["K1_used"].get<std::size_t>(),
            std::min(first_length, b["K2_used"].get<std::size_t>()));
  for (const char* key : {"session", "K1_used", "K2_used", "k", "patterns",
                          "state"}) {
    EXPECT_TRUE(b.contains(key)) << key;
  }
  EXPECT_TRUE(fs::exists(store));
}

TEST_F(CliTest, MineErrors) {
  const std::string store = Temp("store.json");
  EXPECT_EQ(Call({"mine", "--store", store, "--add", Data("empty.nt")}).code,
            kParse);
  EXPECT_FALSE(fs::exists(store));
  std::ofstream(store) << "{\"sequences\": 3}";
  EXPECT_EQ(Call({"mine", "--store", store, "--add", Data("ntriples_draft.nt")}).code,
            kStoreCorrupt);
  EXPECT_EQ(Call({"mine", "--store", Temp("fresh.json"), "--add",
                  Data("malformed.nt")})
                .code,
            kParse);
}

TEST_F(CliTest, RelateAllOrderIndependent) {
  std::vector<std::string> files = {Data("sspp_t1.nt"), Data("sspp_t2.nt"),
                                    Data("oopp_t1.nt"), Data("disjoint.nt")};
  std::vector<std::string> args = {"relate-all"};
  args.insert(args.end(), files.begin(), files.end());
  args.insert(args.end(), {"--out", Temp("a.json")});
  ASSERT_EQ(Call(args).code, kOk);

  std::vector<std::string> reversed = {"relate-all"};
  reversed.insert(reversed.end(), files.rbegin(), files.rend());
  reversed.insert(reversed.end(), {"--out", Temp("b.json")});
  ASSERT_EQ(Call(reversed).code, kOk);

  EXPECT_EQ(Slurp(Temp("a.json")), Slurp(Temp("b.json")));
  auto doc = json::parse(Slurp(Temp("a.json")));
  EXPECT_EQ(doc["nodes"].size(), 4u);
  bool found = false;
  for (const auto& e : doc["edges"]) {
    EXPECT_TRUE(e.contains("from") && e.contains("to") && e.contains("kind") &&
                e.contains("score"));
    if (e["from"] == "sspp_t1.nt" && e["to"] == "sspp_t2.nt") {
      EXPECT_EQ(e["kind"], "SSPP");
      EXPECT_NEAR(e["score"].get<double>(), 0.9, 1e-12);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST_F(CliTest, RelateAllDot) {
  ASSERT_EQ(Call({"relate-all", Data("sspp_t1.nt"), Data("sspp_t2.nt"),
                  "--out", Temp("g.dot"), "--format", "dot"})
                .code,
            kOk);
  const std::string dot = Slurp(Temp("g.dot"));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("label=\"SSPP\""), std::string::npos) << dot;
  EXPECT_NE(dot.find("weight=0.9"), std::string::npos) << dot;
}

TEST_F(CliTest, RelateAllDuplicateBasename) {
  EXPECT_EQ(Call({"relate-all", Data("sspp_t1.nt"), Data("sspp_t1.nt"),
                  "--out", Temp("x.json")})
                .code,
            kUsage);
}

}  // namespace
}  // namespace spolink::cli
