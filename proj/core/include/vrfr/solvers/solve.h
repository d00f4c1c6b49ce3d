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

#ifndef VRFR_SOLVERS_SOLVE_H_
#define VRFR_SOLVERS_SOLVE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "vrfr/core/oracle_counter.h"
#include "vrfr/core/trajectory.h"
#include "vrfr/core/types.h"
#include "vrfr/estimators/estimator.h"
#include "vrfr/operators/finite_sum_operator.h"
#include "vrfr/resolvents/monotone_map.h"

namespace vrfr {

// kVfr solves 0 = Gx, kVfrbs solves 0 in Gx + Tx, kOg is the deterministic
// optimistic-gradient baseline (with a resolvent step when T is given).
enum class Algorithm { kVfr, kVfrbs, kOg };

const char* AlgorithmName(Algorithm algorithm);
Algorithm ParseAlgorithm(std::string_view name);

// kOperator records |Gx + v| (v in Tx from the last resolvent, v = 0 without
// T); kForwardBackward records the forward-backward residual at step eta.
enum class ResidualMetric { kOperator, kForwardBackward };

struct SolverConfig {
  Algorithm algorithm = Algorithm::kVfr;
  EstimatorKind estimator = EstimatorKind::kLsvrg;
  double gamma = 0.75;
  double eta = 0.0;  // must be positive; see ResolveTheoryStep in harness
  int batch_size = 1;
  double snapshot_prob = 0.5;
  // Iteration budget; when zero, max_epochs is converted to iterations
  // through the expected charge per step.
  int64_t max_iterations = 0;
  double max_epochs = 0.0;
  uint64_t seed = 0;
  // Record cadence; zero selects ceil(n / (3b)) for stochastic estimators
  // and 1 for full-batch and OG runs.
  int64_t record_every = 0;
  ResidualMetric metric = ResidualMetric::kOperator;
  double divergence_factor = 1e6;
};

void ValidateSolverConfig(const SolverConfig& config, int n);

// Charged evaluations of one iteration after the first.
double ExpectedChargePerIteration(const SolverConfig& config, int n);
// Iterations K so that the last iterate x^K sits near max_epochs: the
// first iteration pays the n-evaluation initialization.
int64_t IterationBudget(const SolverConfig& config, int n);
int64_t RecordCadence(const SolverConfig& config, int n);

struct IterateView {
  int64_t iter;
  const DenseVec& x;
  const DenseVec& x_prev;
  const DenseVec& v;  // empty without T
  const OracleCounter& counter;
  double residual;
};

struct SolveOptions {
  // Reference solution; enables the Lyapunov column in full-batch runs.
  const DenseVec* x_star = nullptr;
  // Called at every recorded iterate.
  std::function<void(const IterateView&)> observer;
  std::string config_json;
};

// Runs one trajectory from `start` (x^0 for root-finding, y^0 with
// x^0 = J(y^0) when T is given). Records iteration 0 at epochs 0, every
// cadence step, and the final iterate. Divergence (non-finite iterate, or
// residual above divergence_factor times the initial one) stops the run and
// sets Trajectory::diverged.
Trajectory Solve(const FiniteSumOperator& op, const MonotoneMap* t,
                 const DenseVec& start, const SolverConfig& config,
                 const SolveOptions& options = {});

}  // namespace vrfr

#endif  // VRFR_SOLVERS_SOLVE_H_
