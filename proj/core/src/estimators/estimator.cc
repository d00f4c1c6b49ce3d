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

#include "vrfr/estimators/estimator.h"

#include <numeric>
#include <string>

namespace vrfr {

const char* EstimatorKindName(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kFullBatch:
      return "full";
    case EstimatorKind::kLsvrg:
      return "lsvrg";
    case EstimatorKind::kSaga:
      return "saga";
    case EstimatorKind::kSvrgDoubleLoop:
      return "dsvrg";
  }
  return "unknown";
}

EstimatorKind ParseEstimatorKind(std::string_view name) {
  if (name == "full") return EstimatorKind::kFullBatch;
  if (name == "lsvrg" || name == "svrg") return EstimatorKind::kLsvrg;
  if (name == "saga") return EstimatorKind::kSaga;
  if (name == "dsvrg") return EstimatorKind::kSvrgDoubleLoop;
  throw ConfigError("unknown estimator '" + std::string(name) +
                    "' (expected full, lsvrg, saga or dsvrg)");
}

std::vector<int> DrawBatch(RngStream& rng, int n, int b) {
  if (b == n) {
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  return SampleBatch(rng, n, b);
}

namespace {

class FullBatchEstimator final : public FrqEstimator {
 public:
  FullBatchEstimator(const FiniteSumOperator& op, double gamma)
      : op_(op), gamma_(gamma) {}

  EstimatorKind kind() const override { return EstimatorKind::kFullBatch; }

  DenseVec Start(const DenseVec& x0, OracleCounter* counter) override {
    previous_value_ = op_.Full(x0, counter);
    return (1.0 - gamma_) * previous_value_;
  }

  DenseVec Next(const DenseVec& x_k, const DenseVec& /*x_km1*/,
                RngStream& /*rng*/, OracleCounter* counter) override {
    DenseVec current = op_.Full(x_k, counter);
    DenseVec estimate = FrqExact(current, previous_value_, gamma_);
    previous_value_ = std::move(current);
    return estimate;
  }

  double ExpectedChargePerStep() const override { return op_.n(); }
  std::optional<EstimatorConstants> constants() const override {
    return FullBatchConstants();
  }

 private:
  const FiniteSumOperator& op_;
  double gamma_;
  DenseVec previous_value_;  // G x^{k-1}
};

class LsvrgEstimator final : public FrqEstimator {
 public:
  LsvrgEstimator(const FiniteSumOperator& op, const FrqConfig& config)
      : op_(op), config_(config) {}

  EstimatorKind kind() const override { return EstimatorKind::kLsvrg; }

  DenseVec Start(const DenseVec& x0, OracleCounter* counter) override {
    state_ = LsvrgInit(op_, x0, counter);
    return (1.0 - config_.gamma) * state_.snapshot_value;
  }

  DenseVec Next(const DenseVec& x_k, const DenseVec& x_km1, RngStream& rng,
                OracleCounter* counter) override {
    const std::vector<int> batch = DrawBatch(rng, op_.n(), config_.batch_size);
    DenseVec estimate =
        LsvrgEstimate(state_, op_, config_.gamma, x_k, x_km1, batch, counter);
    LsvrgSnapshotUpdate(state_, op_, x_k, FlipCoin(rng, config_.snapshot_prob),
                        counter);
    return estimate;
  }

  double ExpectedChargePerStep() const override {
    return 3.0 * config_.batch_size + config_.snapshot_prob * op_.n();
  }
  std::optional<EstimatorConstants> constants() const override {
    return LsvrgConstants(config_.gamma, config_.batch_size,
                          config_.snapshot_prob);
  }

 private:
  const FiniteSumOperator& op_;
  FrqConfig config_;
  LsvrgState state_;
};

class SagaEstimator final : public FrqEstimator {
 public:
  SagaEstimator(const FiniteSumOperator& op, const FrqConfig& config)
      : op_(op), config_(config) {}

  EstimatorKind kind() const override { return EstimatorKind::kSaga; }

  DenseVec Start(const DenseVec& x0, OracleCounter* counter) override {
    state_ = SagaInit(op_, x0, counter);
    return (1.0 - config_.gamma) * state_.table_mean;
  }

  DenseVec Next(const DenseVec& x_k, const DenseVec& x_km1, RngStream& rng,
                OracleCounter* counter) override {
    const std::vector<int> batch = DrawBatch(rng, op_.n(), config_.batch_size);
    DenseVec estimate = SagaEstimate(state_, op_, config_.gamma, x_k, x_km1,
                                     batch, counter, &fresh_);
    // The table refresh reuses G_i x^k and is charged as a third batch.
    SagaTableUpdateFromValues(state_, batch, fresh_);
    if (counter) counter->AddChargedOnly(config_.batch_size);
    return estimate;
  }

  double ExpectedChargePerStep() const override {
    return 3.0 * config_.batch_size;
  }
  std::optional<EstimatorConstants> constants() const override {
    return SagaConstants(config_.gamma, op_.n(), config_.batch_size);
  }

 private:
  const FiniteSumOperator& op_;
  FrqConfig config_;
  SagaState state_;
  DenseMat fresh_;
};

// Deterministic refresh of the snapshot every floor(n/b) iterations, with
// iteration 0 counted as the first inner iteration of the first epoch.
class DoubleLoopSvrgEstimator final : public FrqEstimator {
 public:
  DoubleLoopSvrgEstimator(const FiniteSumOperator& op, const FrqConfig& config)
      : op_(op),
        config_(config),
        inner_length_(std::max(1, op.n() / config.batch_size)) {}

  EstimatorKind kind() const override {
    return EstimatorKind::kSvrgDoubleLoop;
  }

  DenseVec Start(const DenseVec& x0, OracleCounter* counter) override {
    state_ = LsvrgInit(op_, x0, counter);
    inner_done_ = 1;
    return (1.0 - config_.gamma) * state_.snapshot_value;
  }

  DenseVec Next(const DenseVec& x_k, const DenseVec& x_km1, RngStream& rng,
                OracleCounter* counter) override {
    if (inner_done_ == inner_length_) {
      LsvrgSnapshotUpdate(state_, op_, x_k, true, counter);
      inner_done_ = 0;
    }
    const std::vector<int> batch = DrawBatch(rng, op_.n(), config_.batch_size);
    ++inner_done_;
    return LsvrgEstimate(state_, op_, config_.gamma, x_k, x_km1, batch,
                         counter);
  }

  double ExpectedChargePerStep() const override {
    return 3.0 * config_.batch_size +
           static_cast<double>(op_.n()) / inner_length_;
  }
  std::optional<EstimatorConstants> constants() const override {
    return std::nullopt;
  }

  int inner_length() const { return inner_length_; }

 private:
  const FiniteSumOperator& op_;
  FrqConfig config_;
  int inner_length_;
  int inner_done_ = 0;
  LsvrgState state_;
};

}  // namespace

std::unique_ptr<FrqEstimator> MakeEstimator(EstimatorKind kind,
                                            const FiniteSumOperator& op,
                                            const FrqConfig& config) {
  ValidateGamma(config.gamma);
  if (kind != EstimatorKind::kFullBatch &&
      (config.batch_size < 1 || config.batch_size > op.n())) {
    throw ConfigError("batch size must lie in [1, n], got " +
                      std::to_string(config.batch_size));
  }
  switch (kind) {
    case EstimatorKind::kFullBatch:
      return std::make_unique<FullBatchEstimator>(op, config.gamma);
    case EstimatorKind::kLsvrg:
      if (!(config.snapshot_prob > 0.0 && config.snapshot_prob < 1.0)) {
        throw ConfigError("snapshot probability must lie in (0, 1)");
      }
      return std::make_unique<LsvrgEstimator>(op, config);
    case EstimatorKind::kSaga:
      return std::make_unique<SagaEstimator>(op, config);
    case EstimatorKind::kSvrgDoubleLoop:
      return std::make_unique<DoubleLoopSvrgEstimator>(op, config);
  }
  throw ConfigError("unknown estimator kind");
}

}  // namespace vrfr
