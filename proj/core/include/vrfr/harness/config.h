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

#ifndef VRFR_HARNESS_CONFIG_H_
#define VRFR_HARNESS_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "vrfr/estimators/theory.h"
#include "vrfr/problems/cohypomonotone.h"
#include "vrfr/problems/wgan.h"
#include "vrfr/solvers/solve.h"

namespace vrfr {

enum class ProblemKind { kQuadratic, kWgan, kLogistic, kCoHypomonotone };

const char* ProblemKindName(ProblemKind kind);
ProblemKind ParseProblemKind(std::string_view name);

struct ProblemSpec {
  ProblemKind kind = ProblemKind::kQuadratic;
  uint64_t data_seed = 0;
  // Quadratic minimax and WGAN.
  int n = 500;
  int p1 = 10;
  int p2 = 10;
  double clip = -0.1;
  bool simplex = false;  // quadratic: constrain both blocks to simplices
  CouplingMode coupling = CouplingMode::kIdentity;
  // Logistic: a LIBSVM file, or synthetic data when the path is empty.
  std::string libsvm_path;
  int samples = 1000;
  int features = 20;
  double density = 0.3;
  int ambiguity = 5;
  double tau = 1e-3;
  double noise_variance = 0.5;
  int max_samples = 0;
  // Two-dimensional co-hypomonotone inclusion.
  double epsilon = 0.01;
  TwoByTwoCoupling two_by_two = TwoByTwoCoupling::kSymmetric;
  // A gen-data JSON file; replaces generation for quadratic, wgan and
  // cohypomonotone problems.
  std::string instance_path;

  // Stable short name used in output file names.
  std::string Name() const;
};

// Parameter presets. kComparison: b = floor(n^{2/3} / 2), p = n^{-1/3},
// eta = 1/(2L) for variance-reduced runs and 1/L for OG. kTheory:
// b = floor(n^{2/3}), p = n^{-1/3}, eta from the step-size theory.
// Explicit values in the algorithm entry override the preset.
enum class Preset { kNone, kComparison, kTheory };

const char* PresetName(Preset preset);
Preset ParsePreset(std::string_view name);

// How eta is chosen when no explicit value is given.
enum class StepRule { kExplicit, kInverseL, kTheory };

struct AlgorithmSpec {
  std::string label;
  Preset preset = Preset::kComparison;
  SolverConfig solver;  // eta, batch_size and snapshot_prob may be unset
  std::optional<double> eta;
  std::optional<double> eta_times_l;  // eta = value / L
  bool eta_theory = false;
  std::optional<int> batch_size;
  std::optional<double> snapshot_prob;
  double kappa = 0.0;  // assumed weak-Minty modulus for the theory step
};

struct ExperimentConfig {
  ProblemSpec problem;
  std::vector<AlgorithmSpec> algorithms;
  std::vector<uint64_t> seeds = {0};
  double epochs = 100.0;
  int64_t max_iterations = 0;  // overrides epochs when positive
  ResidualMetric metric = ResidualMetric::kOperator;
  std::optional<double> lipschitz;  // overrides the problem's value
  std::string output_dir;           // empty: VRFR_OUTPUT_DIR or "vrfr_out"
};

// floor(n^{2/3}) and floor(n^{2/3} / 2), computed in integers.
int TheoryBatchSize(int n);
int ComparisonBatchSize(int n);
double PresetSnapshotProb(int n);

// Strict parsing: unknown keys, wrong types and invalid values throw
// ConfigError naming the offending path.
ExperimentConfig ParseExperimentConfig(const nlohmann::json& j);
ExperimentConfig LoadExperimentConfig(const std::string& path);
nlohmann::json ProblemSpecToJson(const ProblemSpec& spec);
AlgorithmSpec ParseAlgorithmSpec(const nlohmann::json& j);

struct ResolvedAlgorithm {
  std::string label;
  SolverConfig solver;  // fully specified: eta > 0, b and p set
  std::optional<TheoryConstants> theory;
};

// Fills preset defaults and the step. Theory steps use the estimator's
// variance constants; the double-loop estimator has none and is rejected.
ResolvedAlgorithm ResolveAlgorithm(const AlgorithmSpec& spec, int n,
                                   double lipschitz,
                                   ResidualMetric metric = ResidualMetric::kOperator);

// Theory constants for a solver configuration at assumed kappa.
TheoryConstants TheoryForSolver(const SolverConfig& solver, int n,
                                double lipschitz, double kappa);

nlohmann::json SolverConfigToJson(const SolverConfig& config);

}  // namespace vrfr

#endif  // VRFR_HARNESS_CONFIG_H_
