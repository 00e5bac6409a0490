// Copyright 2026 The kpell Authors
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


#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "kpell/error.hpp"

namespace kpell::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "kpell");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
  return c;
}

TEST(Cli, GenerateDot) {
  auto r = invoke({"generate", "-n", "2", "-k", "3", "--format", "dot"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(count(r.out, "[label="), 10u);
  EXPECT_EQ(count(r.out, " -- "), 13u);
}

TEST(Cli, GenerateJsonSingleVertex) {
  auto r = invoke({"generate", "-n", "0", "-k", "5", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 1u);
}

TEST(Cli, GenerateFibonacciToFile) {
  const std::string path = testing::TempDir() + "kpell_cli_gamma.graphml";
  auto r = invoke({"generate", "--fibonacci", "-n", "4", "--format", "graphml", "--out", path});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(count(text.str(), "<node "), 8u);
  std::remove(path.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"generate", "-n", "30", "-k", "4"}).code, kBudget);
  EXPECT_EQ(invoke({"generate", "-n", "8", "-k", "2", "--budget", "100"}).code, kBudget);
  EXPECT_EQ(invoke({"generate", "-n", "2", "-k", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"generate", "-n", "2", "-k", "2,3"}).code, kUsage);
  EXPECT_EQ(invoke({"generate", "--format", "svg"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
  auto budget = invoke({"generate", "-n", "30", "-k", "4"});
  EXPECT_NE(budget.err.find("exceeds budget"), std::string::npos);
}

TEST(Cli, VerifyTrivial) {
  auto r = invoke({"verify", "--n-max", "1", "--k", "2", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["tool"], "kpell");
  EXPECT_EQ(j["records"].size(), 2u);
  EXPECT_TRUE(j["summary"]["ok"].get<bool>());
}

TEST(Cli, VerifyReportsDeltaMinusOneAsInformational) {
  auto r = invoke({"verify", "--n-max", "6", "--k", "2,3", "--seed", "7", "--json"});
  ASSERT_EQ(r.code, kOk) << r.out;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["summary"]["failed"], 0);
  bool found = false;
  for (const auto& rec : j["records"]) {
    for (const auto& c : rec["checks"]) {
      EXPECT_NE(c["status"], "fail") << c.dump();
      EXPECT_FALSE(c["statement"].get<std::string>().empty());
      if (rec["n"] == 2 && rec["k"] == 3 && c["check"] == "delta_minus_one") {
        found = true;
        EXPECT_EQ(c["status"], "informational");
        EXPECT_EQ(c["data"]["formula"], 4);
        EXPECT_EQ(c["data"]["census"], 5);
        EXPECT_TRUE(c["data"].contains("note"));
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, VerifyIsDeterministic) {
  auto a = invoke({"verify", "--n-max", "5", "--k", "2-4", "--seed", "11", "--json"});
  auto b = invoke({"verify", "--n-max", "5", "--k", "2-4", "--seed", "11", "--json"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  auto text = invoke({"verify", "--n-max", "3", "--k", "3"});
  EXPECT_NE(text.out.find("informational"), std::string::npos);
}

TEST(Cli, VerifyBudgetSkipsLargeInstances) {
  auto r = invoke({"verify", "--n-max", "6", "--k", "2", "--budget", "100", "--json"});
  ASSERT_EQ(r.code, kOk);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["records"].size(), 6u);
  EXPECT_EQ(j["over_budget"].size(), 1u);
}

TEST(Cli, VerifyTimingsAreOptIn) {
  auto plain = Json::parse(invoke({"verify", "--n-max", "2", "--k", "2", "--json"}).out);
  EXPECT_FALSE(plain["records"][0].contains("timings_ms"));
  auto timed = Json::parse(invoke({"verify", "--n-max", "2", "--k", "2", "--json", "--timings"}).out);
  EXPECT_TRUE(timed["records"][0].contains("timings_ms"));
}

TEST(Cli, TableCenter) {
  auto r = invoke({"table-center", "--n-max", "6", "-k", "2-5", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_TRUE(j["all_match"].get<bool>());
  EXPECT_EQ(j["rows"][2]["k"], 4);
  // F(8): the even-k rows continue 2, 3, 5, 8, 13, 21.
  EXPECT_EQ(j["rows"][2]["cells"][5]["bfs"], 21);
  auto text = invoke({"table-center", "--n-max", "4", "-k", "3"});
  EXPECT_NE(text.out.find("all BFS centers match"), std::string::npos);
}

TEST(Cli, CubePolyDegreesEmbedHamilton) {
  auto cube = invoke({"cube-poly", "-n", "3", "-k", "2"});
  EXPECT_EQ(cube.code, kOk);
  EXPECT_NE(cube.out.find("12 + 18x + 8x^2 + x^3"), std::string::npos);
  auto deg = Json::parse(invoke({"degrees", "-n", "2", "-k", "3", "--json"}).out);
  EXPECT_EQ(deg["delta_minus_one"]["census"], 5);
  EXPECT_EQ(deg["histogram"]["3"], 5);
  auto emb = invoke({"embed", "-n", "3", "-k", "4", "--json"});
  EXPECT_EQ(emb.code, kOk);
  EXPECT_EQ(Json::parse(emb.out)["target_dim"], 17);
  auto ham = Json::parse(invoke({"hamilton", "-n", "3", "-k", "3", "--json"}).out);
  EXPECT_TRUE(ham["valid"].get<bool>());
  EXPECT_EQ(ham["path"].size(), 33u);
}

TEST(Cli, Metrics) {
  auto j = Json::parse(invoke({"metrics", "-n", "4", "-k", "3", "--json", "--seed", "5"}).out);
  EXPECT_EQ(j["radius"], 6);
  EXPECT_EQ(j["diameter"], 10);
  EXPECT_EQ(j["center_size"], 8);
  EXPECT_TRUE(j["center_matches_prediction"].get<bool>());
  EXPECT_TRUE(j["median_unique"].get<bool>());
  EXPECT_EQ(j["seed"], 5);
}

TEST(Cli, Probes) {
  auto cycle = Json::parse(invoke({"probe", "hamilton-cycle", "-n", "2", "-k", "2", "--json"}).out);
  EXPECT_TRUE(cycle["experimental"].get<bool>());
  EXPECT_EQ(cycle["result"], "no cycle");
  auto dim = Json::parse(invoke({"probe", "embed-dim", "-n", "1", "-k", "2", "--json"}).out);
  EXPECT_EQ(dim["smallest_m"], 1);
  EXPECT_EQ(invoke({"probe", "hamilton-cycle", "-n", "6", "-k", "3"}).code, kBudget);
  EXPECT_EQ(invoke({"probe"}).code, kUsage);
}

TEST(Cli, KSetParsing) {
  EXPECT_EQ(parse_k_set("2,4-6"), (std::vector<unsigned>{2, 4, 5, 6}));
  EXPECT_EQ(parse_k_set("3"), (std::vector<unsigned>{3}));
  EXPECT_THROW(parse_k_set("1"), DomainError);
  EXPECT_THROW(parse_k_set("5-3"), DomainError);
  EXPECT_THROW(parse_k_set("x"), DomainError);
  EXPECT_THROW(parse_k_set(""), DomainError);
}

}  // namespace
}  // namespace kpell::cli
