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

#include "vrfr/core/rng.h"
#include "vrfr/resolvents/monotone_map.h"
#include "vrfr/resolvents/prox.h"

namespace vrfr {
namespace {

DenseVec Vec(std::initializer_list<double> values) {
  DenseVec v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

TEST(Prox, SoftThresholdShrinksTowardZero) {
  const DenseVec out = SoftThreshold(Vec({3.0, -0.5, 0.2, -2.0}), 1.0);
  EXPECT_EQ(out, Vec({2.0, 0.0, 0.0, -1.0}));
}

TEST(Prox, BoxClamps) {
  EXPECT_EQ(ProjectBox(Vec({3.0, -0.5, -7.0}), 1.0), Vec({1.0, -0.5, -1.0}));
}

TEST(Prox, SimplexProjectionKnownValues) {
  EXPECT_LT((ProjectSimplex(Vec({0.5, 0.5})) - Vec({0.5, 0.5})).norm(), 1e-15);
  EXPECT_LT((ProjectSimplex(Vec({2.0, 0.0})) - Vec({1.0, 0.0})).norm(), 1e-15);
  EXPECT_LT((ProjectSimplex(Vec({1.0, 1.0, 1.0})) - Vec({1, 1, 1}) / 3.0).norm(),
            1e-15);
}

TEST(Prox, SimplexProjectionIsOptimal) {
  RngStream rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const DenseVec y = 3.0 * rng.NormalVec(6);
    const DenseVec x = ProjectSimplex(y);
    EXPECT_NEAR(x.sum(), 1.0, 1e-12);
    EXPECT_GE(x.minCoeff(), 0.0);
    // Variational inequality <y - x, z - x> <= 0 at the vertices z = e_j.
    for (int j = 0; j < 6; ++j) {
      DenseVec z = DenseVec::Zero(6);
      z(j) = 1.0;
      EXPECT_LE((y - x).dot(z - x), 1e-12);
    }
  }
}

TEST(MonotoneMap, ZeroIsIdentityResolvent) {
  const MonotoneMap t = MonotoneMap::Zero(3);
  const DenseVec y = Vec({1.0, -2.0, 3.0});
  EXPECT_EQ(t.Resolve(0.7, y), y);
}

TEST(MonotoneMap, L1ResolventIsSoftThreshold) {
  const MonotoneMap t = MonotoneMap::L1(3, 2.0);
  const DenseVec y = Vec({3.0, -0.5, -4.0});
  EXPECT_EQ(t.Resolve(0.5, y), SoftThreshold(y, 1.0));
}

TEST(MonotoneMap, LinearResolventSolvesSystem) {
  DenseMat m(2, 2);
  m << 1.0, 2.0, -2.0, 0.5;
  const MonotoneMap t = MonotoneMap::Linear(m);
  const DenseVec y = Vec({1.0, 1.0});
  const DenseVec x = t.Resolve(0.3, y);
  EXPECT_LT((x + 0.3 * m * x - y).norm(), 1e-13);
}

TEST(MonotoneMap, LinearSingularResolventThrows) {
  DenseMat m = -DenseMat::Identity(2, 2);
  const MonotoneMap t = MonotoneMap::Linear(m);
  EXPECT_THROW(t.Resolve(1.0, Vec({1.0, 1.0})), NumericError);
}

TEST(MonotoneMap, ProductActsBlockwise) {
  const MonotoneMap t = MonotoneMap::Product(
      4, {{0, 2}, {2, 2}}, {MonotoneMap::Simplex(2), MonotoneMap::L1(2, 1.0)});
  const DenseVec y = Vec({2.0, 0.0, 3.0, -0.2});
  const DenseVec x = t.Resolve(1.0, y);
  EXPECT_LT((x - Vec({1.0, 0.0, 2.0, 0.0})).norm(), 1e-15);
  EXPECT_THROW(MonotoneMap::Product(4, {{0, 2}, {1, 2}},
                                    {MonotoneMap::Zero(2), MonotoneMap::Zero(2)}),
               ConfigError);
}

TEST(MonotoneMap, ResolventCountedOncePerCall) {
  const MonotoneMap t = MonotoneMap::Product(
      4, {{0, 2}, {2, 2}}, {MonotoneMap::Simplex(2), MonotoneMap::Zero(2)});
  OracleCounter counter;
  t.Resolve(1.0, DenseVec::Zero(4), &counter);
  EXPECT_EQ(counter.resolvent_evals, 1);
}

TEST(MonotoneMap, ResolventIsFirmlyNonexpansive) {
  RngStream rng(2);
  const MonotoneMap maps[] = {MonotoneMap::L1(5, 0.7), MonotoneMap::Box(5, 0.5),
                              MonotoneMap::Simplex(5)};
  for (const MonotoneMap& t : maps) {
    for (int trial = 0; trial < 20; ++trial) {
      const DenseVec a = rng.NormalVec(5), b = rng.NormalVec(5);
      const DenseVec ja = t.Resolve(0.9, a), jb = t.Resolve(0.9, b);
      EXPECT_LE((ja - jb).squaredNorm(), (ja - jb).dot(a - b) + 1e-12);
    }
  }
}

TEST(MonotoneMap, ElementOfTSatisfiesInclusion) {
  // For T = lambda-scaled l1, v = (y - x)/lambda must lie in d|x|_1 * weight.
  const double weight = 0.8, lambda = 0.5;
  const MonotoneMap t = MonotoneMap::L1(4, weight);
  const DenseVec y = Vec({2.0, 0.1, -3.0, -0.3});
  const DenseVec x = t.Resolve(lambda, y);
  const DenseVec v = ElementOfT(lambda, y, x);
  for (int i = 0; i < 4; ++i) {
    if (x(i) != 0.0) {
      EXPECT_NEAR(v(i), weight * (x(i) > 0 ? 1.0 : -1.0), 1e-14);
    } else {
      EXPECT_LE(std::abs(v(i)), weight + 1e-14);
    }
  }
}

TEST(MonotoneMap, RejectsBadArguments) {
  EXPECT_THROW(MonotoneMap::Box(2, 0.0), ConfigError);
  EXPECT_THROW(MonotoneMap::L1(2, -1.0), ConfigError);
  EXPECT_THROW(MonotoneMap::Zero(2).Resolve(0.0, DenseVec::Zero(2)),
               ConfigError);
  EXPECT_THROW(MonotoneMap::Zero(2).Resolve(1.0, DenseVec::Zero(3)),
               DimensionError);
}

}  // namespace
}  // namespace vrfr
