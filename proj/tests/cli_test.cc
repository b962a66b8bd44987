//
// Copyright 2026 The DPClustX Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "dpclustx/cli.h"

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dpclustx/chart.h"
#include "dpclustx/io.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include <nlohmann/json.hpp>
#include "test_util.h"

namespace dpclustx {
namespace {

using ::testing::HasSubstr;
using nlohmann::json;

struct Fixture {
  std::string dir;
  std::string schema;
  std::string data;
  std::string labels;
  std::string centers;
};

// Planted data written as files: attributes a0..a5, a0..a2 indicating
// clusters 0..2.
Fixture WriteFixture(const std::string& name) {
  Fixture f;
  f.dir = testing::TempDir(name);
  const auto inst = testing::PlantedInstance(3, 3, 6, 600);
  json schema;
  for (AttributeId a = 0; a < inst.data.num_attributes(); ++a) {
    schema["attributes"].push_back(
        {{"name", inst.data.schema().attribute(a).name},
         {"domain", inst.data.schema().attribute(a).domain}});
  }
  f.schema = f.dir + "/schema.json";
  WriteFileAtomic(f.schema, schema.dump());
  std::string csv;
  for (AttributeId a = 0; a < inst.data.num_attributes(); ++a) {
    csv += (a ? "," : "") + inst.data.schema().attribute(a).name;
  }
  csv += "\n";
  std::string labels = "label\n";
  for (std::size_t r = 0; r < inst.data.size(); ++r) {
    for (AttributeId a = 0; a < inst.data.num_attributes(); ++a) {
      csv += (a ? "," : "") + std::to_string(inst.data.column(a)[r]);
    }
    csv += "\n";
    labels += std::to_string(inst.partition.labels()[r]) + "\n";
  }
  f.data = f.dir + "/data.csv";
  f.labels = f.dir + "/labels.csv";
  f.centers = f.dir + "/centers.json";
  WriteFileAtomic(f.data, csv);
  WriteFileAtomic(f.labels, labels);
  WriteFileAtomic(f.centers, "[[1,0,0,1,1,1],[0,1,0,1,1,1],[0,0,1,1,1,1]]");
  return f;
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dpclustx");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Base(const Fixture& f, const std::string& out) {
  return {"--schema", f.schema, "--data", f.data, "--labels", f.labels,
          "--out", out};
}

std::vector<std::string> Concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

json ReadJson(const std::string& path) { return json::parse(ReadFile(path)); }

TEST(CliTest, ExplainIsDeterministicPerSeed) {
  const auto f = WriteFixture("cli_det");
  ASSERT_EQ(Invoke(Concat({"explain"}, Concat(Base(f, f.dir + "/a"), {"--seed", "7"}))).code, 0);
  ASSERT_EQ(Invoke(Concat({"explain"}, Concat(Base(f, f.dir + "/b"), {"--seed", "7"}))).code, 0);
  EXPECT_EQ(ReadFile(f.dir + "/a/explanation.json"),
            ReadFile(f.dir + "/b/explanation.json"));
}

TEST(CliTest, ExplainDefaultsAndBudget) {
  const auto f = WriteFixture("cli_budget");
  const auto r = Invoke(Concat({"explain"},
                            Concat(Base(f, f.dir + "/o"),
                                   {"--eps-candset", "0.1", "--eps-topcomb", "0.1",
                                    "--eps-hist", "0.1", "--svg"})));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_THAT(r.err, HasSubstr("budget"));
  const json e = ReadJson(f.dir + "/o/explanation.json");
  EXPECT_NEAR(e["budget"]["total"].get<double>(), 0.3, 1e-12);
  EXPECT_EQ(e["clusters"].size(), 3u);
  for (const auto& set : e["candidates"]) EXPECT_EQ(set.size(), 3u);
  EXPECT_EQ(e["combinations_evaluated"].get<int>(), 27);
  EXPECT_TRUE(std::filesystem::exists(f.dir + "/o/chart.svg"));
  const json chart = ReadJson(f.dir + "/o/chart.json");
  for (const auto& panel : chart["panels"]) {
    double in = 0, out = 0;
    for (const auto& bar : panel["bars"]) {
      (bar["series"] == "in-cluster" ? in : out) += bar["proportion"].get<double>();
    }
    EXPECT_TRUE(std::fabs(in - 1) < 1e-9 || in == 0);
    EXPECT_TRUE(std::fabs(out - 1) < 1e-9 || out == 0);
  }
}

TEST(CliTest, TotalEpsSplitsEvenly) {
  const auto f = WriteFixture("cli_total");
  ASSERT_EQ(Invoke(Concat({"explain"}, Concat(Base(f, f.dir + "/o"), {"--total-eps", "0.9"}))).code, 0);
  const json e = ReadJson(f.dir + "/o/explanation.json");
  EXPECT_NEAR(e["budget"]["eps_hist"].get<double>(), 0.3, 1e-12);
  EXPECT_NEAR(e["budget"]["total"].get<double>(), 0.9, 1e-12);
}

TEST(CliTest, Baselines) {
  const auto f = WriteFixture("cli_base");
  auto r = Invoke(Concat({"baseline", "tabee"},
                      Concat(Base(f, f.dir + "/t1"), {"--seed", "1", "--eps-hist", "0.5"})));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_THAT(r.err, HasSubstr("ignored"));
  ASSERT_EQ(Invoke(Concat({"baseline", "tabee"}, Concat(Base(f, f.dir + "/t2"), {"--seed", "2"}))).code, 0);
  EXPECT_EQ(ReadFile(f.dir + "/t1/explanation.json"),
            ReadFile(f.dir + "/t2/explanation.json"));

  r = Invoke(Concat({"baseline", "dp-naive"}, Concat(Base(f, f.dir + "/n"), {"--eps", "0.1"})));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(ReadJson(f.dir + "/n/explanation.json")["budget"]["total"].get<double>(),
              0.1, 1e-12);

  r = Invoke(Concat({"baseline", "dp-tabee"}, Concat(Base(f, f.dir + "/d"), {"--total-eps", "3e6"})));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(ReadJson(f.dir + "/d/explanation.json")["combination"],
            ReadJson(f.dir + "/t1/explanation.json")["combination"]);
}

TEST(CliTest, Evaluate) {
  const auto f = WriteFixture("cli_eval");
  ASSERT_EQ(Invoke(Concat({"baseline", "tabee"}, Base(f, f.dir + "/t"))).code, 0);
  ASSERT_EQ(Invoke(Concat({"explain"}, Concat(Base(f, f.dir + "/x"), {"--total-eps", "3e6"}))).code, 0);
  const std::vector<std::string> in = {"--schema", f.schema, "--data", f.data,
                                       "--labels", f.labels};
  auto eval = [&](const std::string& a, const std::string& b, const std::string& out) {
    return Invoke(Concat(Concat({"evaluate"}, in),
                      {"--explanation", a, "--reference", b, "--out", out}));
  };
  const std::string t = f.dir + "/t/explanation.json";
  ASSERT_EQ(eval(t, t, f.dir + "/e1").code, 0);
  EXPECT_EQ(ReadJson(f.dir + "/e1/report.json")["mae"].get<double>(), 0.0);
  ASSERT_EQ(eval(f.dir + "/x/explanation.json", t, f.dir + "/e2").code, 0);
  EXPECT_EQ(ReadJson(f.dir + "/e2/report.json")["mae"].get<double>(), 0.0);
  const std::string csv = ReadFile(f.dir + "/e2/report.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);

  // A combination disjoint from the reference.
  json other = ReadJson(t);
  for (auto& c : other["clusters"]) c["attribute"] = "a5";
  WriteFileAtomic(f.dir + "/other.json", other.dump());
  ASSERT_EQ(eval(f.dir + "/other.json", t, f.dir + "/e3").code, 0);
  EXPECT_EQ(ReadJson(f.dir + "/e3/report.json")["mae"].get<double>(), 1.0);

  other["clusters"].erase(0);
  WriteFileAtomic(f.dir + "/short.json", other.dump());
  EXPECT_EQ(eval(f.dir + "/short.json", t, f.dir + "/e4").code, 3);
}

TEST(CliTest, Assign) {
  const auto f = WriteFixture("cli_assign");
  WriteFileAtomic(f.dir + "/one.json", "[[0,0,0,0,0,0]]");
  ASSERT_EQ(Invoke({"assign", "--schema", f.schema, "--data", f.data, "--centers",
                 f.dir + "/one.json", "--out", f.dir + "/one.csv"}).code, 0);
  const std::string one = ReadFile(f.dir + "/one.csv");
  EXPECT_EQ(one.find('1'), std::string::npos);
  ASSERT_EQ(Invoke({"assign", "--schema", f.schema, "--data", f.data, "--centers",
                 f.centers, "--out", f.dir + "/a.csv"}).code, 0);
  ASSERT_EQ(Invoke({"assign", "--schema", f.schema, "--data", f.data, "--centers",
                 f.centers, "--out", f.dir + "/b.csv"}).code, 0);
  EXPECT_EQ(ReadFile(f.dir + "/a.csv"), ReadFile(f.dir + "/b.csv"));
  // The planted indicator columns determine the nearest center.
  EXPECT_EQ(ReadFile(f.dir + "/a.csv"), ReadFile(f.labels));
}

TEST(CliTest, ExitCodes) {
  const auto f = WriteFixture("cli_exit");
  EXPECT_EQ(Invoke({"explain"}).code, kExitConfig);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(Invoke(Concat({"explain"}, Concat(Base(f, f.dir + "/o"), {"--lambda-int", "0.9"}))).code,
            kExitConfig);
  EXPECT_EQ(Invoke({"explain", "--schema", f.schema, "--data", f.data, "--out", f.dir}).code,
            kExitConfig);
  EXPECT_EQ(Invoke({"explain", "--schema", f.schema, "--data", f.dir + "/missing.csv",
                 "--labels", f.labels, "--out", f.dir}).code,
            kExitData);
  EXPECT_EQ(Invoke(Concat({"explain"}, Concat(Base(f, f.dir + "/o"), {"--eps-hist", "0"}))).code,
            kExitGuard);
  EXPECT_EQ(Invoke(Concat({"explain"}, Concat(Base(f, f.dir + "/o"), {"--k", "7"}))).code,
            kExitConfig);
  // 17 clusters at k = 3 exceed the stage-2 guard.
  std::string labels = "label\n";
  for (int r = 0; r < 600; ++r) labels += std::to_string(r % 17) + "\n";
  WriteFileAtomic(f.dir + "/many.csv", labels);
  EXPECT_EQ(Invoke({"explain", "--schema", f.schema, "--data", f.data, "--labels",
                 f.dir + "/many.csv", "--out", f.dir + "/o"}).code,
            kExitGuard);
}

TEST(ChartTest, NormalizedBarsClampNegatives) {
  const std::vector<double> noisy = {-3, 1, 3};
  EXPECT_EQ(NormalizedBars(noisy), (std::vector<double>{0, 0.25, 0.75}));
  const std::vector<double> dead = {-1, 0};
  EXPECT_EQ(NormalizedBars(dead), (std::vector<double>{0, 0}));
}

}  // namespace
}  // namespace dpclustx
