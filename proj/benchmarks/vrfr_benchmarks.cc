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

#include <benchmark/benchmark.h>

#include "vrfr/core/rng.h"
#include "vrfr/estimators/estimator.h"
#include "vrfr/problems/quadratic_minimax.h"
#include "vrfr/solvers/solve.h"
#include "vrfr/verify/enumeration.h"
#include "vrfr/verify/suites.h"

namespace vrfr {
namespace {

const AffineOperator& QuadraticOperator() {
  static const AffineOperator op =
      QuadraticMinimaxOperator(GenerateQuadraticMinimax(500, 10, 10, 0));
  return op;
}

void BM_EstimatorNext(benchmark::State& state) {
  const auto kind = static_cast<EstimatorKind>(state.range(0));
  const int b = static_cast<int>(state.range(1));
  const AffineOperator& op = QuadraticOperator();
  auto est = MakeEstimator(kind, op, {0.75, b, 0.1});
  RngStream rng(1);
  const DenseVec x0 = rng.NormalVec(op.dim());
  const DenseVec x1 = rng.NormalVec(op.dim());
  est->Start(x0, nullptr);
  for (auto _ : state) {
    benchmark::DoNotOptimize(est->Next(x1, x0, rng, nullptr));
  }
  state.SetLabel(EstimatorKindName(kind));
}
BENCHMARK(BM_EstimatorNext)
    ->Args({static_cast<int>(EstimatorKind::kLsvrg), 31})
    ->Args({static_cast<int>(EstimatorKind::kSaga), 31})
    ->Args({static_cast<int>(EstimatorKind::kSvrgDoubleLoop), 31})
    ->Args({static_cast<int>(EstimatorKind::kFullBatch), 500});

void BM_SolveTenEpochs(benchmark::State& state) {
  const AffineOperator& op = QuadraticOperator();
  SolverConfig config;
  config.algorithm = static_cast<Algorithm>(state.range(0));
  config.estimator = EstimatorKind::kSaga;
  config.batch_size = 31;
  config.eta = 0.01;
  config.max_epochs = 10;
  const DenseVec start = DenseVec::Ones(op.dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(op, nullptr, start, config));
  }
  state.SetLabel(AlgorithmName(config.algorithm));
}
BENCHMARK(BM_SolveTenEpochs)
    ->Arg(static_cast<int>(Algorithm::kVfr))
    ->Arg(static_cast<int>(Algorithm::kOg))
    ->Unit(benchmark::kMillisecond);

void BM_BruteExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int b = static_cast<int>(state.range(1));
  const AffineOperator op = RandomAffineOperator(n, 3, 2);
  RngStream rng(3);
  const DenseVec x_k = rng.NormalVec(3), x_km1 = rng.NormalVec(3);
  const LsvrgState snapshot = LsvrgInit(op, rng.NormalVec(3), nullptr);
  const BatchEstimate est = LsvrgBatchEstimate(snapshot, op, 0.75, x_k, x_km1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BruteExpectation(n, b, est));
  }
  state.SetItemsProcessed(state.iterations() * OutcomeCount(n, b));
}
BENCHMARK(BM_BruteExpectation)->Args({4, 3})->Args({6, 4})->Args({10, 4});

}  // namespace
}  // namespace vrfr

BENCHMARK_MAIN();
