// Copyright 2026 The vrfr Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vrfr/harness/aggregate.h"
#include "vrfr/harness/config.h"
#include "vrfr/harness/experiment.h"
#include "vrfr/harness/report.h"

namespace vrfr {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path FreshDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("vrfr_harness_" + name);
  fs::remove_all(dir);
  return dir;
}

Trajectory MakeRun(std::vector<std::pair<int64_t, double>> points) {
  Trajectory t;
  for (auto [iter, rel] : points) {
    TrajectoryRecord r;
    r.iter = iter;
    r.epochs = 1.0 + iter;
    r.residual = 2.0 * rel;
    r.rel_residual = rel;
    r.step_norm = 0.5;
    t.records.push_back(r);
  }
  return t;
}

json SmallConfig() {
  return json::parse(R"({
    "problem": {"kind": "quadratic", "n": 20, "p1": 3, "p2": 3, "data_seed": 1},
    "algorithms": [
      {"algorithm": "vfr", "estimator": "saga", "label": "saga"},
      {"algorithm": "og", "label": "og"}
    ],
    "seeds": [0, 1],
    "epochs": 6
  })");
}

TEST(Presets, BatchSizes) {
  EXPECT_EQ(ComparisonBatchSize(500), 31);
  EXPECT_EQ(TheoryBatchSize(10000), 464);
  EXPECT_EQ(TheoryBatchSize(1000), 100);
  EXPECT_EQ(TheoryBatchSize(1), 1);
  EXPECT_NEAR(PresetSnapshotProb(1000), 0.1, 1e-15);
}

TEST(Config, ParsesAndRejectsUnknownKeys) {
  const ExperimentConfig c = ParseExperimentConfig(SmallConfig());
  EXPECT_EQ(c.problem.n, 20);
  ASSERT_EQ(c.algorithms.size(), 2u);
  EXPECT_EQ(c.algorithms[0].solver.estimator, EstimatorKind::kSaga);
  EXPECT_EQ(c.algorithms[1].solver.algorithm, Algorithm::kOg);
  EXPECT_EQ(c.seeds, (std::vector<uint64_t>{0, 1}));

  json bad = SmallConfig();
  bad["problem"]["nn"] = 3;
  EXPECT_THROW(ParseExperimentConfig(bad), ConfigError);
  bad = SmallConfig();
  bad["algorithms"][0]["batchsize"] = 3;
  EXPECT_THROW(ParseExperimentConfig(bad), ConfigError);
  bad = SmallConfig();
  bad["epoch"] = 3;
  EXPECT_THROW(ParseExperimentConfig(bad), ConfigError);
  bad = SmallConfig();
  bad.erase("algorithms");
  EXPECT_THROW(ParseExperimentConfig(bad), ConfigError);
  bad = SmallConfig();
  bad["problem"]["kind"] = "mnist";
  EXPECT_THROW(ParseExperimentConfig(bad), ConfigError);
}

TEST(Config, ResolvesComparisonPreset) {
  const AlgorithmSpec spec = ParseAlgorithmSpec(
      json{{"algorithm", "vfr"}, {"estimator", "lsvrg"}, {"label", "x"}});
  const ResolvedAlgorithm r = ResolveAlgorithm(spec, 500, 2.0);
  EXPECT_EQ(r.solver.batch_size, 31);
  EXPECT_NEAR(r.solver.snapshot_prob, std::pow(500.0, -1.0 / 3.0), 1e-12);
  EXPECT_NEAR(r.solver.eta, 0.25, 1e-15);
  const ResolvedAlgorithm og = ResolveAlgorithm(
      ParseAlgorithmSpec(json{{"algorithm", "og"}, {"label", "og"}}), 500, 2.0);
  EXPECT_NEAR(og.solver.eta, 0.5, 1e-15);
}

TEST(Config, ResolvesTheoryStep) {
  const AlgorithmSpec spec = ParseAlgorithmSpec(json{{"algorithm", "vfr"},
                                                     {"estimator", "saga"},
                                                     {"preset", "theory"},
                                                     {"label", "t"}});
  const ResolvedAlgorithm r = ResolveAlgorithm(spec, 10000, 1.0);
  EXPECT_EQ(r.solver.batch_size, 464);
  ASSERT_TRUE(r.theory.has_value());
  EXPECT_NEAR(r.solver.eta, 0.14569, 1e-4);
  EXPECT_THROW(ResolveAlgorithm(ParseAlgorithmSpec(json{{"algorithm", "vfr"},
                                                        {"estimator", "dsvrg"},
                                                        {"eta", "theory"}}),
                                100, 1.0),
               ConfigError);
}

TEST(Aggregate, MeanAndEnvelope) {
  const MeanTrajectory m = Aggregate(
      {MakeRun({{0, 1.0}, {2, 0.5}, {4, 0.1}}), MakeRun({{0, 1.0}, {2, 0.3}, {4, 0.05}})});
  ASSERT_EQ(m.records.size(), 3u);
  EXPECT_EQ(m.runs, 2);
  EXPECT_FALSE(m.truncated);
  EXPECT_NEAR(m.records[1].rel_residual, 0.4, 1e-15);
  EXPECT_EQ(m.records[1].rel_min, 0.3);
  EXPECT_EQ(m.records[1].rel_max, 0.5);
  EXPECT_NEAR(m.records[2].residual, 0.15, 1e-15);
  EXPECT_EQ(EpochsToThreshold(m, 0.1), 5.0);
  EXPECT_EQ(EpochsToThreshold(m, 0.01), std::nullopt);
}

TEST(Aggregate, TruncatesToShortestRunAndRejectsMisalignment) {
  Trajectory shorter = MakeRun({{0, 1.0}, {2, 0.5}});
  shorter.diverged = true;
  const MeanTrajectory m =
      Aggregate({MakeRun({{0, 1.0}, {2, 0.5}, {4, 0.1}}), shorter});
  EXPECT_EQ(m.records.size(), 2u);
  EXPECT_TRUE(m.truncated);
  EXPECT_EQ(m.diverged, 1);
  EXPECT_THROW(Aggregate({MakeRun({{0, 1.0}, {2, 0.5}}),
                          MakeRun({{0, 1.0}, {3, 0.5}})}),
               NumericError);
}

TEST(Aggregate, CsvRoundTrip) {
  const MeanTrajectory m = Aggregate(
      {MakeRun({{0, 1.0}, {2, 1.0 / 3.0}}), MakeRun({{0, 1.0}, {2, 0.1}})});
  std::ostringstream out;
  WriteMeanCsv(m, out);
  EXPECT_NE(out.str().find(kMeanCsvHeader), std::string::npos);
  std::istringstream in(out.str());
  const MeanTrajectory back = ReadMeanCsv(in);
  EXPECT_EQ(back.records, m.records);
  EXPECT_EQ(back.runs, 2);
}

TEST(Sweep, WritesDeterministicFilesAndMean) {
  const ExperimentConfig config = ParseExperimentConfig(SmallConfig());
  const ProblemInstance problem = BuildProblem(config.problem);
  const fs::path a = FreshDir("a"), b = FreshDir("b");
  const std::vector<SweepResult> first =
      RunSweep(config, problem, {a.string(), 2});
  RunSweep(config, problem, {b.string(), 1});
  ASSERT_EQ(first.size(), 2u);
  for (const SweepResult& r : first) {
    EXPECT_EQ(r.runs.size(), 2u);
    for (uint64_t seed : {0, 1}) {
      const std::string file = RunFileName(problem.name, r.label, seed);
      ASSERT_TRUE(fs::exists(a / file)) << file;
      EXPECT_EQ(ReadFile(a / file), ReadFile(b / file));
    }
    const std::string mean_file = MeanFileName(problem.name, r.label);
    EXPECT_EQ(ReadFile(a / mean_file), ReadFile(b / mean_file));
    const MeanTrajectory expected = Aggregate(r.runs);
    EXPECT_EQ(r.mean.records, expected.records);
  }
  const std::vector<ReportRow> rows = CollectReport(a.string());
  EXPECT_EQ(rows.size(), 2u);
  EXPECT_NE(FormatReportTable(rows).find("saga"), std::string::npos);
  EXPECT_EQ(ReportToJson(rows).size(), 2u);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Sweep, SingleRunMatchesSweepRun) {
  const ExperimentConfig config = ParseExperimentConfig(SmallConfig());
  const ProblemInstance problem = BuildProblem(config.problem);
  const std::vector<SweepResult> sweep = RunSweep(config, problem, {"", 3});
  const ResolvedAlgorithm algo = ResolveAlgorithm(
      config.algorithms[0], problem.op->n(), problem.lipschitz);
  const Trajectory single =
      RunSingle(config.problem, problem, algo, 1, config.epochs, 0);
  EXPECT_EQ(single.records, sweep[0].runs[1].records);
}

TEST(Output, DirectoryFromEnvironment) {
  ::setenv("VRFR_OUTPUT_DIR", "/tmp/vrfr_env_dir", 1);
  EXPECT_EQ(DefaultOutputDir(), "/tmp/vrfr_env_dir");
  ::unsetenv("VRFR_OUTPUT_DIR");
  EXPECT_EQ(DefaultOutputDir(), "vrfr_out");
  EXPECT_EQ(RunFileName("p", "l", 3), "p__l__seed3.csv");
  EXPECT_EQ(MeanFileName("p", "l"), "p__l__mean.csv");
}

TEST(Problems, BuildsEachKind) {
  for (const char* kind : {"quadratic", "wgan", "logistic", "cohypomonotone"}) {
    json j = {{"kind", kind}};
    if (std::string(kind) == "logistic") {
      j["samples"] = 30;
      j["features"] = 4;
    } else if (std::string(kind) != "cohypomonotone") {
      j["n"] = 10;
    }
    const ExperimentConfig c = ParseExperimentConfig(
        json{{"problem", j}, {"algorithms", json::array({json{{"algorithm", "og"}}})}});
    const ProblemInstance p = BuildProblem(c.problem);
    EXPECT_GT(p.lipschitz, 0.0) << kind;
    EXPECT_EQ(p.start.size(), p.op->dim()) << kind;
  }
}

}  // namespace
}  // namespace vrfr
