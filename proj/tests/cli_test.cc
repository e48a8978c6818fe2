// Copyright 2026 The Ambig Authors.
//
// Licensed under the Apache License, Version 2.0 (the 'License');
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an 'AS IS' BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ambig/fixtures.h"
#include "ambig/text_format.h"
#include "json.hpp"

namespace ambig::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ambig_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    Write("fin2.fa", SerializeAutomaton(fixtures::Fin2()));
    Write("poly1.fa", SerializeAutomaton(fixtures::Poly1()));
    Write("poly2.fa", SerializeAutomaton(fixtures::Poly2()));
    Write("exp.fa", SerializeAutomaton(fixtures::Exp()));
    Write("eps.fa", SerializeAutomaton(fixtures::Eps()));
    Write("eps_cycle.fa", SerializeAutomaton(fixtures::EpsCycle()));
    Write("geo.fa", "initial 0 1.0\nfinal 0 0.5\ntrans 0 0 a 0.5\n");
    Write("unif.fa", SerializeAutomaton(fixtures::Unif()));
    Write("heavy.fa",
          "initial 0 1\nfinal 1 1\ntrans 0 1 a 0.6\ntrans 0 1 b 0.6\n");
    Write("bad.fa", "initial 0\ntrans 0 1\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void Write(const std::string &name, const std::string &text) {
    std::ofstream(dir_ / name) << text;
  }
  std::string Path(const std::string &name) const {
    return (dir_ / name).string();
  }
  std::string Read(const std::string &name) const {
    std::ifstream in(dir_ / name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  int Call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, ClassifyFixtures) {
  EXPECT_EQ(Call({"classify", Path("exp.fa")}), kExitOk);
  EXPECT_EQ(out_.str(), "EXPONENTIAL\n");
  EXPECT_EQ(Call({"classify", Path("fin2.fa")}), kExitOk);
  EXPECT_EQ(out_.str(), "FINITE\n");
  EXPECT_EQ(Call({"classify", Path("poly2.fa")}), kExitOk);
  EXPECT_EQ(out_.str(), "POLYNOMIAL degree=2\n");
  EXPECT_EQ(Call({"classify", Path("eps.fa")}), kExitOk);
  EXPECT_EQ(out_.str(), "POLYNOMIAL degree=1\n");
  EXPECT_EQ(Call({"classify", Path("poly1.fa"), "--witness"}), kExitOk);
  EXPECT_EQ(out_.str().rfind("POLYNOMIAL degree=1\n", 0), 0u);
  EXPECT_NE(out_.str().find("loop at p"), std::string::npos);
}

TEST_F(CliTest, ClassifyEpsilonCycle) {
  EXPECT_EQ(Call({"classify", Path("eps_cycle.fa")}), kExitEpsilonCycle);
  EXPECT_NE(err_.str().find("EpsilonCycleInput"), std::string::npos);
}

TEST_F(CliTest, ClassifyJsonSchema) {
  const std::set<std::string> allowed{"class", "dpa", "witness"};
  for (const char *file : {"fin2.fa", "poly1.fa", "poly2.fa", "exp.fa",
                           "eps.fa"}) {
    for (bool witness : {false, true}) {
      std::vector<std::string> args{"classify", Path(file), "--json"};
      if (witness) args.push_back("--witness");
      ASSERT_EQ(Call(args), kExitOk);
      const std::string first = out_.str();
      ASSERT_EQ(Call(args), kExitOk);
      EXPECT_EQ(out_.str(), first);
      EXPECT_EQ(first.find('\n'), first.size() - 1);
      const json j = json::parse(first);
      ASSERT_TRUE(j.is_object());
      for (const auto &[key, value] : j.items()) {
        EXPECT_TRUE(allowed.count(key)) << key;
      }
      ASSERT_TRUE(j["class"].is_string());
      const std::string cls = j["class"];
      if (cls == "EXPONENTIAL") {
        EXPECT_FALSE(j.contains("dpa"));
      } else {
        ASSERT_TRUE(j["dpa"].is_number_unsigned());
        EXPECT_EQ(cls == "FINITE", j["dpa"] == 0);
      }
      EXPECT_EQ(j.contains("witness"), witness && cls != "FINITE");
      if (j.contains("witness")) {
        const std::string kind = j["witness"]["kind"];
        EXPECT_EQ(kind, cls == "EXPONENTIAL" ? "eda" : "dpa");
      }
    }
  }
}

TEST_F(CliTest, Dpa) {
  EXPECT_EQ(Call({"dpa", Path("poly2.fa")}), kExitOk);
  EXPECT_EQ(out_.str(), "2\n");
  EXPECT_EQ(Call({"dpa", Path("fin2.fa")}), kExitOk);
  EXPECT_EQ(out_.str(), "0\n");
  EXPECT_EQ(Call({"dpa", Path("exp.fa")}), kExitOk);
  EXPECT_EQ(out_.str(), "inf\n");
}

TEST_F(CliTest, EntropyReport) {
  ASSERT_EQ(Call({"entropy", Path("geo.fa"), "--report"}), kExitOk);
  const json j = json::parse(out_.str());
  std::set<std::string> keys;
  for (const auto &[key, value] : j.items()) keys.insert(key);
  EXPECT_EQ(keys, (std::set<std::string>{"s", "h_brute", "residual_mass", "l",
                                         "ambiguity", "dpa", "bound_low",
                                         "bound_high", "log_base"}));
  EXPECT_NEAR(j["s"].get<double>(), 1.386294, 1e-6);
  EXPECT_NEAR(j["l"].get<double>(), 1.0, 1e-6);
  EXPECT_EQ(j["ambiguity"], "FINITE");
  EXPECT_EQ(j["dpa"], 0);
  EXPECT_TRUE(j["h_brute"].is_null());
  EXPECT_EQ(j["log_base"], "e");

  ASSERT_EQ(Call({"entropy", Path("geo.fa"), "--report", "--method", "brute",
                  "--max-len", "40", "--base", "2"}),
            kExitOk);
  const json b = json::parse(out_.str());
  EXPECT_NEAR(b["h_brute"].get<double>(), 2.0, 1e-6);
  EXPECT_NEAR(b["s"].get<double>(), 2.0, 1e-6);
  EXPECT_EQ(b["log_base"], "2");
}

TEST_F(CliTest, EntropyHumanOutput) {
  EXPECT_EQ(Call({"entropy", Path("geo.fa")}), kExitOk);
  EXPECT_EQ(out_.str(), "1.386294\n");
  EXPECT_EQ(Call({"entropy", Path("unif.fa"), "--base", "2"}), kExitOk);
  EXPECT_EQ(out_.str(), "1.000000\n");
  EXPECT_EQ(Call({"entropy", Path("unif.fa"), "--method", "brute",
                  "--max-len", "3"}),
            kExitOk);
  EXPECT_EQ(out_.str(), "0.693147\n");
  EXPECT_EQ(Call({"expected-length", Path("geo.fa"), "--tol", "1e-12"}),
            kExitOk);
  EXPECT_EQ(out_.str(), "1.000000\n");
}

TEST_F(CliTest, EntropyErrors) {
  EXPECT_EQ(Call({"entropy", Path("heavy.fa")}), kExitProbabilistic);
  EXPECT_NE(err_.str().find("MassNotOne"), std::string::npos);
  EXPECT_EQ(Call({"entropy", Path("poly1.fa")}), kExitUsage);
  EXPECT_EQ(Call({"entropy", Path("geo.fa"), "--method", "exact"}),
            kExitUsage);
  EXPECT_EQ(Call({"entropy", Path("geo.fa"), "--base", "10"}), kExitUsage);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Call({}), kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Call({"classify"}), kExitUsage);
  EXPECT_EQ(Call({"classify", Path("bad.fa")}), kExitUsage);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  EXPECT_EQ(Call({"classify", Path("missing.fa")}), kExitUsage);
  EXPECT_EQ(Call({"power", Path("poly1.fa"), "-n", "4"}), kExitUsage);
  EXPECT_EQ(Call({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("classify"), std::string::npos);
}

TEST_F(CliTest, OracleCommands) {
  EXPECT_EQ(Call({"oracle", "da", Path("poly1.fa"), "aaaa"}), kExitOk);
  EXPECT_EQ(out_.str(), "4\n");
  EXPECT_EQ(Call({"oracle", "da", Path("exp.fa"), "a a a"}), kExitOk);
  EXPECT_EQ(out_.str(), "4\n");
  EXPECT_EQ(Call({"oracle", "da", Path("fin2.fa"), "ac"}), kExitUsage);
  EXPECT_EQ(Call({"oracle", "table", Path("poly2.fa"), "--max-len", "4",
                  "--json"}),
            kExitOk);
  const json j = json::parse(out_.str());
  ASSERT_EQ(j["rows"].size(), 5u);
  EXPECT_EQ(j["rows"][4]["max_da"], 6);
  EXPECT_EQ(j["rows"][4]["argmax"], json({"a", "a", "a", "a"}));
  EXPECT_EQ(Call({"oracle", "table", Path("exp.fa"), "--max-len", "3"}),
            kExitOk);
  EXPECT_NE(out_.str().find("max_da"), std::string::npos);
  EXPECT_EQ(Call({"oracle", "table", Path("exp.fa"), "--max-len", "15"}),
            kExitUsage);
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::vector<std::string> args{"gen",       "--states",      "5",
                                      "--symbols", "2",             "--density",
                                      "0.3",       "--eps-density", "0.1",
                                      "--seed",    "11"};
  ASSERT_EQ(Call(args), kExitOk);
  const std::string first = out_.str();
  ASSERT_EQ(Call(args), kExitOk);
  EXPECT_EQ(out_.str(), first);
  std::vector<std::string> to_file = args;
  to_file.push_back("-o");
  to_file.push_back(Path("gen.fa"));
  ASSERT_EQ(Call(to_file), kExitOk);
  EXPECT_EQ(Read("gen.fa"), first);
  EXPECT_EQ(Call({"gen", "--states", "0", "--symbols", "2", "--density",
                  "0.3", "--seed", "1"}),
            kExitUsage);
}

TEST_F(CliTest, ProductsAndTrim) {
  ASSERT_EQ(Call({"power", Path("poly1.fa"), "-n", "3", "-o", Path("c.fa")}),
            kExitOk);
  const std::string cube = Read("c.fa");
  EXPECT_EQ(cube.rfind("# product of 3 automata", 0), 0u);
  EXPECT_EQ(std::get<FiniteAutomaton>(ParseAutomaton(cube)),
            Cube(fixtures::Poly1()).underlying());
  ASSERT_EQ(Call({"intersect", Path("poly1.fa"), Path("eps.fa")}), kExitOk);
  EXPECT_EQ(out_.str().rfind("# product of 2 automata", 0), 0u);

  Write("untrimmed.fa",
        "initial 0 1\nfinal 0 0.5\ntrans 0 0 a 0.5\ntrans 3 0 a 1\n");
  ASSERT_EQ(Call({"trim", Path("untrimmed.fa")}), kExitOk);
  EXPECT_EQ(out_.str(), "initial 0 1\nfinal 0 0.5\ntrans 0 0 a 0.5\n");
  ASSERT_EQ(Call({"info", Path("untrimmed.fa")}), kExitOk);
  EXPECT_NE(out_.str().find("trim no"), std::string::npos);
  EXPECT_NE(out_.str().find("weighted yes"), std::string::npos);
}

}  // namespace
}  // namespace ambig::cli
