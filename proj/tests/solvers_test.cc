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

#include <cmath>

#include "vrfr/core/rng.h"
#include "vrfr/estimators/constants.h"
#include "vrfr/estimators/theory.h"
#include "vrfr/operators/affine_operator.h"
#include "vrfr/resolvents/monotone_map.h"
#include "vrfr/solvers/lyapunov.h"
#include "vrfr/solvers/residuals.h"
#include "vrfr/solvers/solve.h"
#include "vrfr/solvers/steps.h"
#include "vrfr/verify/suites.h"

namespace vrfr {
namespace {

DenseVec Vec2(double a, double b) {
  DenseVec v(2);
  v << a, b;
  return v;
}

// Monotone affine operator: a skew rotation plus a small PSD part, shared by
// all components with distinct offsets.
AffineOperator MonotoneAffine(int n) {
  DenseMat m(2, 2);
  m << 0.2, 1.0, -1.0, 0.1;
  RngStream rng(21);
  return AffineOperator::SharedMatrix(m, rng.NormalMat(2, n));
}

AffineOperator Rotation() {
  DenseMat m(2, 2);
  m << 0.0, 1.0, -1.0, 0.0;
  return AffineOperator::SharedMatrix(m, DenseMat::Zero(2, 1));
}

SolverConfig FullBatchConfig(Algorithm algorithm, double eta, int64_t iters) {
  SolverConfig c;
  c.algorithm = algorithm;
  c.estimator = EstimatorKind::kFullBatch;
  c.eta = eta;
  c.max_iterations = iters;
  return c;
}

TEST(Steps, ForwardStep) {
  const DenseVec x = VfrStep(Vec2(1.0, 2.0), Vec2(4.0, -2.0), 0.25);
  EXPECT_EQ(x, Vec2(0.0, 2.5));
}

TEST(Steps, SplittingStepWithL1) {
  const MonotoneMap t = MonotoneMap::L1(2, 1.0);
  const double gamma = 0.75, eta = 0.4;
  const SplittingPoint p0 = SplittingStart(t, Vec2(1.0, -0.1), gamma, eta, nullptr);
  // Soft threshold at gamma * eta = 0.3.
  EXPECT_NEAR(p0.x(0), 0.7, 1e-15);
  EXPECT_EQ(p0.x(1), 0.0);
  EXPECT_LT((p0.v - Vec2(1.0, -1.0 / 3.0)).norm(), 1e-15);
  const SplittingPoint p1 = VfrbsStep(t, p0, Vec2(0.5, 0.5), gamma, eta, nullptr);
  // y1 = x0 - eta*s + (2/3)(y0 - x0) = (0.7 - 0.2 + 0.2, 0 - 0.2 - 0.0667).
  EXPECT_NEAR(p1.y(0), 0.7, 1e-15);
  EXPECT_NEAR(p1.y(1), -0.2 - 0.2 / 3.0, 1e-15);
  EXPECT_NEAR(p1.x(0), 0.4, 1e-15);
  EXPECT_EQ(p1.x(1), 0.0);
  EXPECT_LT((p1.v - (p1.y - p1.x) / (gamma * eta)).norm(), 1e-15);
}

TEST(Steps, HalfReflectionCollapsesToForwardBackward) {
  // At gamma = 1/2 the reflection coefficient vanishes: x^{k+1} is the
  // resolvent of J_{eta/2 T} at x^k - eta * estimate.
  const MonotoneMap t = MonotoneMap::Box(2, 0.5);
  SplittingPoint p;
  p.x = Vec2(0.3, -0.2);
  p.y = Vec2(5.0, -7.0);
  p.v = Vec2(0.0, 0.0);
  const DenseVec s = Vec2(-1.0, 0.4);
  const SplittingPoint next = VfrbsStep(t, p, s, 0.5, 0.5, nullptr);
  EXPECT_EQ(next.y, p.x - 0.5 * s);
  EXPECT_EQ(next.x, t.Resolve(0.25, p.x - 0.5 * s));
}

TEST(Steps, OptimisticStep) {
  const SplittingPoint p =
      OgStep(nullptr, Vec2(1.0, 1.0), Vec2(1.0, 0.0), Vec2(0.0, 2.0), 0.5, nullptr);
  EXPECT_EQ(p.x, Vec2(0.0, 2.0));
  const MonotoneMap box = MonotoneMap::Box(2, 1.0);
  const SplittingPoint q =
      OgStep(&box, Vec2(1.0, 1.0), Vec2(-4.0, 0.0), Vec2(0.0, 0.0), 0.5, nullptr);
  EXPECT_EQ(q.x, Vec2(1.0, 1.0));
  EXPECT_EQ(q.v, Vec2(8.0, 0.0));
}

TEST(Solve, SplittingWithZeroMapMatchesForwardMethod) {
  const AffineOperator op = MonotoneAffine(6);
  for (EstimatorKind kind : {EstimatorKind::kFullBatch, EstimatorKind::kLsvrg,
                             EstimatorKind::kSaga}) {
    SolverConfig c;
    c.estimator = kind;
    c.batch_size = 2;
    c.snapshot_prob = 0.3;
    c.eta = 0.2;
    c.max_iterations = 80;
    c.record_every = 1;
    c.seed = 4;
    const Trajectory a = Solve(op, nullptr, Vec2(1.0, -1.0), c);
    c.algorithm = Algorithm::kVfrbs;
    const MonotoneMap zero = MonotoneMap::Zero(2);
    const Trajectory b = Solve(op, &zero, Vec2(1.0, -1.0), c);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (size_t r = 0; r < a.records.size(); ++r) {
      EXPECT_NEAR(a.records[r].residual, b.records[r].residual, 1e-12);
    }
  }
}

TEST(Solve, OptimisticStaysBoundedWhereForwardDiverges) {
  const AffineOperator op = Rotation();
  const double eta = 0.3;
  DenseVec x = Vec2(1.0, 0.0);
  for (int k = 0; k < 200; ++k) x = x - eta * op.MeanUncounted(x);
  EXPECT_GT(x.norm(), 100.0);
  const Trajectory og =
      Solve(op, nullptr, Vec2(1.0, 0.0), FullBatchConfig(Algorithm::kOg, eta, 200));
  EXPECT_FALSE(og.diverged);
  for (const TrajectoryRecord& r : og.records) EXPECT_LE(r.rel_residual, 2.0);
  EXPECT_LT(og.records.back().rel_residual, 1e-3);
}

TEST(Solve, FullBatchLyapunovNonIncreasing) {
  const AffineOperator op = MonotoneAffine(3);
  const double lipschitz = *op.KnownLipschitz();
  const TheoryConstants theory =
      VfrTheory(0.75, FullBatchConstants(), lipschitz, 0.0);
  const DenseVec root = AffineRoot(op);
  SolveOptions options;
  options.x_star = &root;
  const Trajectory tr = Solve(op, nullptr, Vec2(3.0, -2.0),
                              FullBatchConfig(Algorithm::kVfr, theory.eta, 300),
                              options);
  ASSERT_TRUE(tr.records.front().lyapunov.has_value());
  for (size_t r = 1; r < tr.records.size(); ++r) {
    EXPECT_LE(*tr.records[r].lyapunov,
              *tr.records[r - 1].lyapunov * (1 + 1e-12) + 1e-24);
  }
  EXPECT_LT(tr.records.back().rel_residual, 1e-3);
}

TEST(Residuals, ForwardBackward) {
  const AffineOperator op = MonotoneAffine(4);
  const DenseVec x = Vec2(0.4, -1.3);
  EXPECT_LT((FbsResidual(op, nullptr, 0.3, x) - op.MeanUncounted(x)).norm(),
            1e-14);
  const MonotoneMap zero = MonotoneMap::Zero(2);
  EXPECT_LT((FbsResidual(op, &zero, 0.3, x) - op.MeanUncounted(x)).norm(), 1e-14);
  const DenseVec root = AffineRoot(op);
  EXPECT_LE(FbsResidual(op, nullptr, 0.3, root).norm(), 1e-10);
  // The forward-backward residual is dominated by |Gx + v| for v in Tx.
  const MonotoneMap l1 = MonotoneMap::L1(2, 0.5);
  RngStream rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseVec y = rng.NormalVec(2);
    const DenseVec px = l1.Resolve(1.0, y);
    const DenseVec v = ElementOfT(1.0, y, px);
    EXPECT_LE(FbsResidual(op, &l1, 0.2, px).norm(),
              OperatorResidualNorm(op, px, v) + 1e-12);
  }
  EXPECT_NEAR(OperatorResidualNorm(op, x, DenseVec()),
              op.MeanUncounted(x).norm(), 1e-15);
}

TEST(Solve, RecordsAreWellFormedAndDeterministic) {
  const AffineOperator op = RandomAffineOperator(30, 3, 23);
  SolverConfig c;
  c.estimator = EstimatorKind::kSaga;
  c.batch_size = 3;
  c.eta = 0.02;
  c.max_epochs = 5;
  c.seed = 9;
  const Trajectory a = Solve(op, nullptr, DenseVec::Ones(3), c);
  const Trajectory b = Solve(op, nullptr, DenseVec::Ones(3), c);
  EXPECT_EQ(a.records, b.records);
  EXPECT_NO_THROW(ValidateTrajectory(a));
  EXPECT_EQ(a.records.front().iter, 0);
  EXPECT_EQ(a.records.front().epochs, 0.0);
  EXPECT_EQ(a.records.front().rel_residual, 1.0);
  for (size_t r = 1; r < a.records.size(); ++r) {
    EXPECT_GT(a.records[r].epochs, a.records[r - 1].epochs);
    EXPECT_EQ(a.records[r].iter - a.records[r - 1].iter <= RecordCadence(c, 30),
              true);
  }
  c.seed = 10;
  const Trajectory other = Solve(op, nullptr, DenseVec::Ones(3), c);
  EXPECT_NE(a.records.back().residual, other.records.back().residual);
}

TEST(Solve, FlagsDivergence) {
  const AffineOperator op = Rotation();
  SolverConfig c = FullBatchConfig(Algorithm::kVfr, 5.0, 1000);
  c.divergence_factor = 100.0;
  const Trajectory tr = Solve(op, nullptr, Vec2(1.0, 0.0), c);
  EXPECT_TRUE(tr.diverged);
  EXPECT_LT(tr.records.size(), 1001u);
}

TEST(Solve, ValidatesInputs) {
  const AffineOperator op = Rotation();
  const MonotoneMap zero = MonotoneMap::Zero(2);
  EXPECT_THROW(Solve(op, &zero, Vec2(1, 0), FullBatchConfig(Algorithm::kVfr, 0.1, 5)),
               ConfigError);
  EXPECT_THROW(Solve(op, nullptr, Vec2(1, 0), FullBatchConfig(Algorithm::kVfr, 0.0, 5)),
               ConfigError);
  EXPECT_THROW(Solve(op, nullptr, DenseVec::Ones(3),
                     FullBatchConfig(Algorithm::kVfr, 0.1, 5)),
               DimensionError);
  EXPECT_THROW(ParseAlgorithm("eg"), ConfigError);
}

TEST(Budget, EpochsConvertToIterations) {
  SolverConfig c;
  c.estimator = EstimatorKind::kSaga;
  c.batch_size = 5;
  c.eta = 0.1;
  c.max_epochs = 4;
  // Initialization costs one epoch; each step charges 15 of n = 30.
  EXPECT_EQ(IterationBudget(c, 30), 1 + 6);
  EXPECT_EQ(RecordCadence(c, 30), 2);
  c.algorithm = Algorithm::kOg;
  EXPECT_EQ(RecordCadence(c, 30), 1);
}

}  // namespace
}  // namespace vrfr
