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

#include "vrfr/solvers/solve.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>

#include "vrfr/core/rng.h"
#include "vrfr/estimators/constants.h"
#include "vrfr/solvers/lyapunov.h"
#include "vrfr/solvers/residuals.h"
#include "vrfr/solvers/steps.h"

namespace vrfr {

const char* AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kVfr:
      return "vfr";
    case Algorithm::kVfrbs:
      return "vfrbs";
    case Algorithm::kOg:
      return "og";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "vfr") return Algorithm::kVfr;
  if (name == "vfrbs") return Algorithm::kVfrbs;
  if (name == "og") return Algorithm::kOg;
  throw ConfigError("unknown algorithm '" + std::string(name) +
                    "' (expected vfr, vfrbs or og)");
}

void ValidateSolverConfig(const SolverConfig& c, int n) {
  if (!(c.eta > 0.0) || !std::isfinite(c.eta)) {
    throw ConfigError("step size eta must be positive and finite");
  }
  if (c.max_iterations < 0) throw ConfigError("max_iterations must be >= 0");
  if (c.max_iterations == 0 && !(c.max_epochs > 0.0)) {
    throw ConfigError("either max_iterations or max_epochs must be positive");
  }
  if (c.record_every < 0) throw ConfigError("record_every must be >= 0");
  if (!(c.divergence_factor > 1.0)) {
    throw ConfigError("divergence_factor must exceed 1");
  }
  if (c.algorithm == Algorithm::kOg) return;
  ValidateGamma(c.gamma);
  if (c.estimator != EstimatorKind::kFullBatch &&
      (c.batch_size < 1 || c.batch_size > n)) {
    throw ConfigError("batch size must lie in [1, n]");
  }
  if (c.estimator == EstimatorKind::kLsvrg &&
      !(c.snapshot_prob > 0.0 && c.snapshot_prob < 1.0)) {
    throw ConfigError("snapshot probability must lie in (0, 1)");
  }
}

double ExpectedChargePerIteration(const SolverConfig& c, int n) {
  if (c.algorithm == Algorithm::kOg) return n;
  const double b = c.batch_size;
  switch (c.estimator) {
    case EstimatorKind::kFullBatch:
      return n;
    case EstimatorKind::kLsvrg:
      return 3.0 * b + c.snapshot_prob * n;
    case EstimatorKind::kSaga:
      return 3.0 * b;
    case EstimatorKind::kSvrgDoubleLoop:
      return 3.0 * b +
             static_cast<double>(n) / std::max(1, n / c.batch_size);
  }
  return n;
}

int64_t IterationBudget(const SolverConfig& c, int n) {
  if (c.max_iterations > 0) return c.max_iterations;
  const double per_step = ExpectedChargePerIteration(c, n);
  const double extra_epochs = std::max(0.0, c.max_epochs - 1.0);
  return 1 + static_cast<int64_t>(std::ceil(extra_epochs * n / per_step - 1e-9));
}

int64_t RecordCadence(const SolverConfig& c, int n) {
  if (c.record_every > 0) return c.record_every;
  if (c.algorithm == Algorithm::kOg ||
      c.estimator == EstimatorKind::kFullBatch) {
    return 1;
  }
  return std::max<int64_t>(1, (n + 3 * c.batch_size - 1) / (3 * c.batch_size));
}

namespace {

double DefaultMu(Algorithm algorithm, double gamma) {
  return algorithm == Algorithm::kVfr ? 3.0 * (2.0 * gamma - 1.0) / 4.0
                                      : (1.0 - gamma) / (3.0 * gamma - 1.0);
}

}  // namespace

Trajectory Solve(const FiniteSumOperator& op, const MonotoneMap* t,
                 const DenseVec& start, const SolverConfig& config,
                 const SolveOptions& options) {
  ValidateSolverConfig(config, op.n());
  if (start.size() != op.dim()) {
    throw DimensionError("Solve: start point dimension mismatch");
  }
  CheckFinite(start, "Solve start point");
  if (t != nullptr && t->dim() != op.dim()) {
    throw DimensionError("Solve: monotone map dimension mismatch");
  }
  if (config.algorithm == Algorithm::kVfr && t != nullptr) {
    throw ConfigError("vfr solves 0 = Gx; use vfrbs when T is given");
  }
  std::optional<MonotoneMap> zero_map;
  if (config.algorithm == Algorithm::kVfrbs && t == nullptr) {
    zero_map = MonotoneMap::Zero(op.dim());
    t = &*zero_map;
  }

  const int n = op.n();
  const double eta = config.eta;
  const int64_t budget = IterationBudget(config, n);
  const int64_t cadence = RecordCadence(config, n);
  const bool with_lyapunov = options.x_star != nullptr &&
                             config.algorithm != Algorithm::kOg &&
                             config.estimator == EstimatorKind::kFullBatch;
  LyapunovParams lyapunov_params;
  lyapunov_params.gamma = config.gamma;
  lyapunov_params.eta = eta;
  lyapunov_params.mu = DefaultMu(config.algorithm, config.gamma);
  lyapunov_params.estimator = FullBatchConstants();

  Trajectory trajectory;
  trajectory.seed = config.seed;
  trajectory.config_json = options.config_json;

  RngStream rng(config.seed);
  OracleCounter counter;
  SplittingPoint point;  // x, y, v of the current iterate

  switch (config.algorithm) {
    case Algorithm::kVfr:
      point.x = start;
      point.y = start;
      break;
    case Algorithm::kVfrbs:
      point = SplittingStart(*t, start, config.gamma, eta, &counter);
      break;
    case Algorithm::kOg:
      point.y = start;
      if (t != nullptr) {
        point.x = t->Resolve(eta, start, &counter);
        point.v = ElementOfT(eta, start, point.x);
      } else {
        point.x = start;
      }
      break;
  }
  DenseVec x_prev = point.x;
  DenseVec x_prev2 = point.x;

  double residual0 = 0.0;
  auto record = [&](int64_t iter) -> double {
    TrajectoryRecord r;
    r.iter = iter;
    r.epochs = counter.Epochs(n);
    r.residual = config.metric == ResidualMetric::kOperator
                     ? OperatorResidualNorm(op, point.x, point.v)
                     : FbsResidual(op, t, eta, point.x).norm();
    if (iter == 0) {
      residual0 = r.residual;
      r.rel_residual = 1.0;
    } else if (residual0 > 0.0) {
      r.rel_residual = r.residual / residual0;
    } else {
      r.rel_residual = r.residual == 0.0 ? 0.0 : HUGE_VAL;
    }
    r.step_norm = (point.x - x_prev).norm();
    if (with_lyapunov) {
      LyapunovPoint lp{point.x, x_prev, x_prev2, op.MeanUncounted(x_prev),
                       point.v, 0.0};
      r.lyapunov = LyapunovValue(lp, *options.x_star, lyapunov_params);
    }
    trajectory.records.push_back(r);
    if (options.observer) {
      options.observer(
          IterateView{iter, point.x, x_prev, point.v, counter, r.residual});
    }
    return r.residual;
  };
  record(0);

  std::unique_ptr<FrqEstimator> estimator;
  DenseVec estimate;
  DenseVec gx_prev;  // OG only
  if (config.algorithm == Algorithm::kOg) {
    gx_prev = op.Full(point.x, &counter);
  } else {
    FrqConfig fc{config.gamma, config.batch_size, config.snapshot_prob};
    estimator = MakeEstimator(config.estimator, op, fc);
    estimate = estimator->Start(point.x, &counter);
  }

  for (int64_t k = 0; k < budget; ++k) {
    SplittingPoint next;
    switch (config.algorithm) {
      case Algorithm::kVfr:
        if (k > 0) estimate = estimator->Next(point.x, x_prev, rng, &counter);
        next.x = VfrStep(point.x, estimate, eta);
        next.y = next.x;
        break;
      case Algorithm::kVfrbs:
        if (k > 0) estimate = estimator->Next(point.x, x_prev, rng, &counter);
        next = VfrbsStep(*t, point, estimate, config.gamma, eta, &counter);
        break;
      case Algorithm::kOg: {
        DenseVec gx = k == 0 ? gx_prev : op.Full(point.x, &counter);
        next = OgStep(t, point.x, gx, gx_prev, eta, &counter);
        if (t == nullptr) next.v.resize(0);
        gx_prev = std::move(gx);
        break;
      }
    }
    x_prev2 = std::move(x_prev);
    x_prev = std::move(point.x);
    point = std::move(next);

    if (!point.x.allFinite()) {
      trajectory.diverged = true;
      break;
    }
    const int64_t iter = k + 1;
    if (iter % cadence == 0 || iter == budget) {
      const double residual = record(iter);
      if (!std::isfinite(residual) ||
          (residual0 > 0.0 &&
           residual > config.divergence_factor * residual0)) {
        trajectory.diverged = true;
        break;
      }
    }
  }
  return trajectory;
}

}  // namespace vrfr
