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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>

#include "vrfr/core/rng.h"
#include "vrfr/operators/affine_operator.h"
#include "vrfr/operators/lipschitz.h"
#include "vrfr/operators/saddle_operator.h"
#include "vrfr/problems/quadratic_minimax.h"
#include "vrfr/verify/suites.h"

namespace vrfr {
namespace {

TEST(AffineOperator, FullIsMeanOfComponents) {
  const AffineOperator op = RandomAffineOperator(7, 4, 1);
  RngStream rng(2);
  const DenseVec x = rng.NormalVec(4);
  DenseVec mean = DenseVec::Zero(4);
  for (int i = 0; i < 7; ++i) mean += op.Component(i, x, nullptr) / 7.0;
  EXPECT_LT((op.Full(x, nullptr) - mean).norm(), 1e-13);
  EXPECT_LT((op.MeanUncounted(x) - mean).norm(), 1e-13);
}

TEST(AffineOperator, IdentityBatchReproducesFullBitwise) {
  const AffineOperator op = RandomAffineOperator(6, 3, 4);
  RngStream rng(5);
  const DenseVec x = rng.NormalVec(3);
  std::vector<int> all(6);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_TRUE(IsIdentityBatch(all, 6));
  const DenseVec full = op.Full(x, nullptr);
  const DenseVec batch = op.Minibatch(all, x, nullptr);
  EXPECT_EQ(full, batch);
}

TEST(AffineOperator, MinibatchCountsMultiplicity) {
  const AffineOperator op = RandomAffineOperator(5, 2, 6);
  OracleCounter counter;
  const std::vector<int> batch = {1, 1, 3};
  const DenseVec x = DenseVec::Ones(2);
  const DenseVec value = op.Minibatch(batch, x, &counter);
  const DenseVec expected = (2.0 * op.Component(1, x, nullptr) +
                             op.Component(3, x, nullptr)) / 3.0;
  EXPECT_LT((value - expected).norm(), 1e-14);
  EXPECT_EQ(counter.component_evals, 3);
  op.Full(x, &counter);
  EXPECT_EQ(counter.component_evals, 8);
}

TEST(AffineOperator, RejectsBadIndicesAndDimensions) {
  const AffineOperator op = RandomAffineOperator(3, 2, 7);
  EXPECT_THROW(op.Component(3, DenseVec::Zero(2), nullptr), std::exception);
  EXPECT_THROW(op.Full(DenseVec::Zero(3), nullptr), DimensionError);
}

TEST(AffineOperator, SharedMatrixComponentsDifferOnlyInOffset) {
  DenseMat a(2, 2);
  a << 1, 2, -2, 1;
  DenseMat offsets(2, 3);
  offsets << 1, 2, 3, 4, 5, 6;
  const AffineOperator op = AffineOperator::SharedMatrix(a, offsets);
  EXPECT_TRUE(op.shared());
  const DenseVec x = DenseVec::Ones(2);
  EXPECT_LT((op.Component(2, x, nullptr) - (a * x + offsets.col(2))).norm(),
            1e-15);
  EXPECT_NEAR(*op.KnownLipschitz(), std::sqrt(5.0), 1e-9);
}

TEST(AffineRoot, SolvesMeanSystem) {
  const AffineOperator op = RandomAffineOperator(5, 4, 8);
  const DenseVec root = AffineRoot(op);
  EXPECT_LT(op.MeanUncounted(root).norm(), 1e-10);
}

TEST(Lipschitz, AveragedMatchesEigenDecomposition) {
  const AffineOperator op = RandomAffineOperator(6, 5, 9);
  Eigen::SelfAdjointEigenSolver<DenseMat> eig(op.GramMean());
  const double expected = std::sqrt(eig.eigenvalues().maxCoeff());
  EXPECT_NEAR(AveragedLipschitz(op).value, expected, 1e-8 * expected);
  EXPECT_FALSE(AveragedLipschitz(op).empirical);
}

TEST(Lipschitz, SpectralNormOfDiagonal) {
  DenseMat d = DenseMat::Zero(3, 3);
  d.diagonal() << 1.0, -4.0, 2.0;
  EXPECT_NEAR(SpectralNorm(d), 4.0, 1e-9);
}

TEST(Lipschitz, EmpiricalIsLowerEstimate) {
  const AffineOperator op = RandomAffineOperator(4, 3, 10);
  RngStream rng(11);
  const LipschitzEstimate e = EmpiricalLipschitz(op, rng, 200);
  EXPECT_TRUE(e.empirical);
  EXPECT_LE(e.value, *op.KnownLipschitz() * (1 + 1e-12));
  EXPECT_GT(e.value, 0.3 * *op.KnownLipschitz());
}

TEST(SaddleOperator, MatchesQuadraticBlockForm) {
  const QuadraticMinimaxInstance inst = GenerateQuadraticMinimax(4, 3, 2, 12);
  const AffineOperator block = QuadraticMinimaxOperator(inst);
  const SaddleOperator saddle = QuadraticMinimaxSaddle(inst);
  RngStream rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const DenseVec x = rng.NormalVec(5);
    for (int i = 0; i < 4; ++i) {
      EXPECT_LT((block.Component(i, x, nullptr) -
                 saddle.Component(i, x, nullptr)).norm(),
                1e-12);
    }
  }
}

}  // namespace
}  // namespace vrfr
