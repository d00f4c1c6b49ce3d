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

#include "commands.h"

#include <fstream>
#include <iostream>
#include <memory>
#include <vector>

#include <nlohmann/json.hpp>

#include "vrfr/estimators/constants.h"
#include "vrfr/estimators/theory.h"
#include "vrfr/harness/config.h"
#include "vrfr/harness/experiment.h"
#include "vrfr/harness/report.h"
#include "vrfr/problems/cohypomonotone.h"
#include "vrfr/problems/instance_io.h"
#include "vrfr/problems/libsvm.h"
#include "vrfr/problems/logistic.h"
#include "vrfr/problems/quadratic_minimax.h"
#include "vrfr/problems/wgan.h"
#include "vrfr/verify/suites.h"

namespace vrfr::cli {

using nlohmann::json;

namespace {

// Writes to `path`, or to `fallback` when the path is empty.
template <typename Fn>
void WithOutput(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + path + "'");
  write(file);
}

}  // namespace

int GenData(const GenDataArgs& a, std::ostream& out) {
  if (a.problem == "libsvm") {
    const LibsvmData data =
        SyntheticClassificationData(a.samples, a.features, a.density, a.seed);
    WithOutput(a.out, out, [&](std::ostream& o) { WriteLibsvm(data, o); });
    return kOk;
  }
  json j;
  if (a.problem == "quadratic") {
    j = InstanceToJson(GenerateQuadraticMinimax(a.n, a.p1, a.p2, a.seed, a.clip));
  } else if (a.problem == "wgan") {
    const CouplingMode mode =
        a.coupling.empty() ? CouplingMode::kIdentity : ParseCouplingMode(a.coupling);
    j = InstanceToJson(GenerateWgan(a.n, a.p1, a.p2, a.seed, mode));
  } else if (a.problem == "cohypomonotone") {
    const TwoByTwoCoupling coupling = a.coupling.empty()
                                          ? TwoByTwoCoupling::kSymmetric
                                          : ParseTwoByTwoCoupling(a.coupling);
    j = InstanceToJson(MakeCoHypomonotoneInstance(a.epsilon, coupling));
  } else {
    throw ConfigError("gen-data: unknown problem '" + a.problem +
                      "' (expected quadratic, wgan, cohypomonotone or libsvm)");
  }
  WithOutput(a.out, out, [&](std::ostream& o) { o << j.dump() << "\n"; });
  return kOk;
}

int Theory(const TheoryArgs& a, std::ostream& out) {
  const EstimatorKind kind = ParseEstimatorKind(a.estimator);
  EstimatorConstants consts;
  std::optional<EstimatorKind> preset;
  switch (kind) {
    case EstimatorKind::kFullBatch:
      consts = FullBatchConstants();
      break;
    case EstimatorKind::kLsvrg:
      consts = LsvrgConstants(a.gamma, a.b, a.p);
      preset = kind;
      break;
    case EstimatorKind::kSaga:
      consts = SagaConstants(a.gamma, a.n, a.b);
      preset = kind;
      break;
    case EstimatorKind::kSvrgDoubleLoop:
      throw ConfigError("theory: no constants for the double-loop estimator");
  }
  TheoryConstants t = ComputeTheory(ParseMethod(a.method), a.gamma, consts,
                                    a.lipschitz, a.kappa, preset);
  if (a.eta > 0.0) t = AtStep(t, a.eta);
  json j = TheoryToJson(t);
  j["estimator"] = EstimatorKindName(kind);
  j["n"] = a.n;
  j["b"] = a.b;
  j["p"] = a.p;
  out << j.dump(2) << "\n";
  return kOk;
}

int Run(const RunArgs& a, std::ostream& out) {
  const ExperimentConfig config = LoadExperimentConfig(a.config);
  const AlgorithmSpec* spec = &config.algorithms.front();
  if (!a.algorithm.empty()) {
    spec = nullptr;
    for (const AlgorithmSpec& s : config.algorithms) {
      if (s.label == a.algorithm) spec = &s;
    }
    if (spec == nullptr) {
      throw ConfigError("run: no algorithm labelled '" + a.algorithm + "'");
    }
  }
  const uint64_t seed =
      a.seed >= 0 ? static_cast<uint64_t>(a.seed) : config.seeds.front();
  const ProblemInstance problem = BuildProblem(config.problem);
  AlgorithmSpec resolved_spec = *spec;
  resolved_spec.kappa = std::max(spec->kappa, problem.kappa);
  const ResolvedAlgorithm algorithm = ResolveAlgorithm(
      resolved_spec, problem.op->n(),
      config.lipschitz.value_or(problem.lipschitz), config.metric);
  const Trajectory t = RunSingle(config.problem, problem, algorithm, seed,
                                 config.epochs, config.max_iterations);
  WithOutput(a.out, out, [&](std::ostream& o) { WriteTrajectoryCsv(t, o); });
  if (t.diverged) std::cerr << "warning: run diverged\n";
  return kOk;
}

int Sweep(const SweepArgs& a, std::ostream& out) {
  const ExperimentConfig config = LoadExperimentConfig(a.config);
  SweepOptions options;
  options.output_dir = !a.out_dir.empty()           ? a.out_dir
                       : !config.output_dir.empty() ? config.output_dir
                                                    : DefaultOutputDir();
  options.threads = a.threads;
  const ProblemInstance problem = BuildProblem(config.problem);
  const std::vector<SweepResult> results = RunSweep(config, problem, options);
  std::vector<ReportRow> rows;
  for (const SweepResult& r : results) {
    rows.push_back(MakeReportRow(problem.name, r.label, r.mean));
  }
  out << "wrote " << results.size() * (config.seeds.size() + 1)
      << " files to " << options.output_dir << "\n";
  out << FormatReportTable(rows);
  return kOk;
}

int Verify(const VerifyArgs& a, std::ostream& out) {
  const bool estimators = a.suite == "all" || a.suite == "estimators";
  const bool certificate = a.suite == "all" || a.suite == "certificate";
  if (!estimators && !certificate) {
    throw ConfigError("verify: unknown suite '" + a.suite +
                      "' (expected estimators, certificate or all)");
  }
  std::vector<CheckResult> checks;
  if (estimators) {
    CertificationOptions options;
    options.seed = a.seed;
    options.states = a.states;
    for (EstimatorKind kind : {EstimatorKind::kLsvrg, EstimatorKind::kSaga}) {
      for (auto [n, b] : {std::pair{4, 1}, {4, 2}, {6, 2}, {8, 3}}) {
        checks.push_back(CertifyEstimator(kind, n, b, options));
      }
    }
  }
  if (certificate) {
    for (TwoByTwoCoupling c :
         {TwoByTwoCoupling::kSymmetric, TwoByTwoCoupling::kSkew}) {
      const CoHypomonotoneInstance inst = MakeCoHypomonotoneInstance(0.01, c);
      checks.push_back(CertifyTwoByTwo(inst, inst.kappa));
    }
  }
  const json report = ChecksToJson(checks);
  out << report.dump(2) << "\n";
  return report["result"] == "PASS" ? kOk : kCheckFailed;
}

int Report(const ReportArgs& a, std::ostream& out) {
  const std::vector<ReportRow> rows =
      CollectReport(a.dir.empty() ? DefaultOutputDir() : a.dir);
  if (a.json) {
    out << ReportToJson(rows).dump(2) << "\n";
  } else {
    out << FormatReportTable(rows);
  }
  return kOk;
}

}  // namespace vrfr::cli
