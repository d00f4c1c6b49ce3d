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

#ifndef VRFR_HARNESS_EXPERIMENT_H_
#define VRFR_HARNESS_EXPERIMENT_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vrfr/core/trajectory.h"
#include "vrfr/harness/aggregate.h"
#include "vrfr/harness/config.h"
#include "vrfr/operators/affine_operator.h"
#include "vrfr/resolvents/monotone_map.h"

namespace vrfr {

struct ProblemInstance {
  std::string name;
  std::shared_ptr<const FiniteSumOperator> op;
  // Set for affine problems.
  std::shared_ptr<const AffineOperator> affine;
  std::optional<MonotoneMap> constraint;
  // x^0, or y^0 for splitting runs (x^0 = J(y^0)).
  DenseVec start;
  std::optional<DenseVec> x_star;
  double lipschitz = 1.0;
  double kappa = 0.0;
  // Instance generation data kept alive for the operator.
  std::shared_ptr<const void> storage;
};

// Generates (or loads) the instance, its Lipschitz constant and, when known
// in closed form, a solution. The start point is a standard normal vector
// drawn from the data seed, or zero for the logistic problem.
ProblemInstance BuildProblem(const ProblemSpec& spec);

// One run. `epochs` and `max_iterations` set the budget as in SolverConfig.
Trajectory RunSingle(const ProblemSpec& spec, const ProblemInstance& problem,
                     const ResolvedAlgorithm& algorithm, uint64_t seed,
                     double epochs, int64_t max_iterations);

// VRFR_OUTPUT_DIR if set and non-empty, else "vrfr_out".
std::string DefaultOutputDir();

std::string RunFileName(const std::string& problem, const std::string& label,
                        uint64_t seed);
std::string MeanFileName(const std::string& problem, const std::string& label);

struct SweepResult {
  std::string label;
  ResolvedAlgorithm algorithm;
  std::vector<Trajectory> runs;  // in seed order
  MeanTrajectory mean;
};

struct SweepOptions {
  // Empty: no files are written.
  std::string output_dir;
  // Zero: hardware concurrency.
  unsigned threads = 0;
};

// Runs every (algorithm, seed) pair, in parallel across pairs. Results and
// files do not depend on the thread count.
std::vector<SweepResult> RunSweep(const ExperimentConfig& config,
                                  const ProblemInstance& problem,
                                  const SweepOptions& options);

}  // namespace vrfr

#endif  // VRFR_HARNESS_EXPERIMENT_H_
