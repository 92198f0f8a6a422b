// Copyright 2026 The corona-antimagic Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "corona/cli.hpp"

namespace corona {
namespace {

namespace fs = std::filesystem;

const std::string kSamples = CORONA_SAMPLES_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "coronactl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("coronactl-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string read(const std::string& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST_F(Cli, Build) {
  auto r = run({"build", kSamples + "/pan5.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("26 vertices, 68 edges"), std::string::npos);
  r = run({"build", kSamples + "/spider4.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("46 vertices, 117 edges"), std::string::npos);
}

TEST_F(Cli, BuildRejectsAMissingAttachment) {
  const auto spec = file("short.json", R"({"base": {"type": "pan", "param": 3},
                                          "attachments": [{"K": 2}, {"C": 3}, {"C": 3}]})");
  auto r = run({"build", spec});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("WrongAttachmentCount"), std::string::npos) << r.err;
}

TEST_F(Cli, Label) {
  auto r = run({"label", kSamples + "/spider2.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"w(v0)\": 960"), std::string::npos);
  r = run({"label", kSamples + "/pan5.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"w(u0)\": 6,"), std::string::npos);
  r = run({"label", kSamples + "/spider1_k2.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"w(v0)\": 126"), std::string::npos);
}

TEST_F(Cli, LabelWritesFormats) {
  for (const std::string fmt : {"json", "csv", "dot"}) {
    const auto out = path("pan5." + fmt);
    const auto report = path("report-" + fmt + ".json");
    auto r = run({"label", kSamples + "/pan5.json", "--format", fmt, "--out", out, "--report",
                  report});
    EXPECT_EQ(r.code, 0) << fmt;
    EXPECT_FALSE(read(out).empty()) << fmt;
    EXPECT_NE(read(report).find("\"antimagic\": true"), std::string::npos);
  }
  // The written labeling verifies against the same spec.
  auto r = run({"verify", kSamples + "/pan5.json", path("pan5.csv")});
  EXPECT_EQ(r.code, 0);
  r = run({"verify", kSamples + "/pan5.json", path("pan5.json")});
  EXPECT_EQ(r.code, 0);
}

TEST_F(Cli, ConditionsAndForce) {
  const auto bad = kSamples + "/violating_pan.json";
  auto r = run({"conditions", bad});
  EXPECT_EQ(r.code, cli::kConditionsUnmet);
  EXPECT_NE(r.out.find("\"holds\": false"), std::string::npos);
  EXPECT_EQ(run({"conditions", kSamples + "/spider4.json"}).code, 0);
  r = run({"label", bad});
  EXPECT_EQ(r.code, cli::kConditionsUnmet);
  r = run({"label", bad, "--force"});
  EXPECT_TRUE(r.code == cli::kOk || r.code == cli::kForcedDuplicates) << r.code;
}

TEST_F(Cli, Verify) {
  const auto c3 = file("c3.json", R"({"K": 3})");
  auto r = run({"verify", c3, file("ok.csv", "0,1,1\n0,2,2\n1,2,3\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"w(2)\": 5"), std::string::npos) << r.out;
  const auto k2 = file("k2.json", R"({"K": 2})");
  EXPECT_EQ(run({"verify", k2, file("k2.csv", "0,1,1\n")}).code, cli::kNegative);
  r = run({"verify", c3, file("dup.csv", "0,1,1\n0,2,1\n1,2,2\n")});
  EXPECT_EQ(r.code, cli::kMalformedLabeling);
  r = run({"verify", c3, file("json.json", R"({"edges": [{"u": 0, "v": 1, "label": 3},
                                                         {"u": 0, "v": 2, "label": 2},
                                                         {"u": 1, "v": 2, "label": 1}]})")});
  EXPECT_EQ(r.code, 0);
}

TEST_F(Cli, Search) {
  auto r = run({"search", kSamples + "/p4.json", "--exhaustive"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"status\": \"Found\""), std::string::npos);
  const auto k2 = file("k2.json", R"({"K": 2})");
  r = run({"search", k2});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_NE(r.out.find("ExhaustedNone"), std::string::npos);
  r = run({"search", kSamples + "/c5.json", "--random", "--seed", "1", "--out", path("c5.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"verify", kSamples + "/c5.json", path("c5.json")}).code, 0);
  r = run({"search", k2, "--random", "--budget", "1000"});
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_NE(r.out.find("BudgetExceeded"), std::string::npos);
  r = run({"search", kSamples + "/pan5.json", "--exhaustive"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("TooLarge"), std::string::npos);
}

TEST_F(Cli, ExportRoundTrip) {
  const auto once = path("once.json");
  EXPECT_EQ(run({"export", kSamples + "/spider2.json", "--out", once}).code, 0);
  const auto twice = path("twice.json");
  EXPECT_EQ(run({"export", once, "--out", twice}).code, 0);
  EXPECT_EQ(read(once), read(twice));
  auto r = run({"export", kSamples + "/c5.json", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph g {", 0), 0u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"label"}).code, cli::kUsage);
  EXPECT_EQ(run({"search", kSamples + "/c5.json", "--exhaustive", "--random"}).code, cli::kUsage);
  EXPECT_EQ(run({"build", path("nope.json")}).code, cli::kUsage);
  EXPECT_EQ(run({"build", file("broken.json", "{\"base\": ")}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace corona
