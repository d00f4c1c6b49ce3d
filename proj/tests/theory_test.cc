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

#include "vrfr/estimators/constants.h"
#include "vrfr/estimators/theory.h"

namespace vrfr {
namespace {

TEST(VfrTheory, StepAnchorAtTenthSnapshotProbability) {
  const TheoryConstants t =
      VfrTheory(0.75, LsvrgConstants(0.75, 464, 0.1), 1.0, 0.0);
  EXPECT_NEAR(t.eta, 0.3038, 1e-3);
  EXPECT_DOUBLE_EQ(t.eta, t.eta_max);
}

TEST(VfrTheory, ThreeQuarterReflectionConstant) {
  const EstimatorConstants c = LsvrgConstants(0.75, 10, 0.2);
  const TheoryConstants t = VfrTheory(0.75, c, 1.0, 0.0);
  EXPECT_NEAR(t.m, 57.0 / 24.0 + 11.0 * c.Lambda() / 3.0, 1e-12);
  EXPECT_NEAR(t.delta, 0.5 / (8.0 * std::sqrt(t.m)), 1e-15);
  EXPECT_NEAR(t.mu, 0.375, 1e-15);
}

TEST(VfrTheory, PresetSigmaAndComplexity) {
  EXPECT_NEAR(VfrSigma(EstimatorKind::kLsvrg, 0.75), 0.144025, 1e-6);
  EXPECT_NEAR(VfrBigGamma(EstimatorKind::kLsvrg, 0.75), 730.736842, 1e-5);
  EXPECT_EQ(std::ceil(VfrBigGamma(EstimatorKind::kLsvrg, 0.75)), 731.0);
  EXPECT_NEAR(VfrSigma(EstimatorKind::kSaga, 0.75), 0.134181, 1e-6);
  EXPECT_NEAR(VfrBigGamma(EstimatorKind::kSaga, 0.75), 841.894737, 1e-5);
  // Complexity constant is 2 (5g^2 + 7g - 3) / (sigma^2 g^2 (1 - g)(1 + 5g)).
  for (EstimatorKind k : {EstimatorKind::kLsvrg, EstimatorKind::kSaga}) {
    const double g = 0.65, s = VfrSigma(k, g);
    EXPECT_NEAR(VfrBigGamma(k, g),
                2 * (5 * g * g + 7 * g - 3) /
                    (s * s * g * g * (1 - g) * (1 + 5 * g)),
                1e-8);
  }
}

TEST(VfrTheory, ReferenceStepsAtCubeRootProbability) {
  const double p = 1.0 / std::cbrt(1e4);
  EXPECT_NEAR(VfrTheory(0.75, LsvrgConstants(0.75, 464, p), 1.0, 0.0).eta,
              0.14893, 1e-4);
  EXPECT_NEAR(VfrTheory(0.75, SagaConstants(0.75, 10000, 464), 1.0, 0.0).eta,
              0.14569, 1e-4);
}

TEST(VfrTheory, ZeroKappaHasZeroLowerStep) {
  const TheoryConstants t = VfrTheory(0.8, FullBatchConstants(), 2.0, 0.0);
  EXPECT_EQ(t.eta_min, 0.0);
  EXPECT_FALSE(t.eta_min_strict);
  EXPECT_NO_THROW(AtStep(t, 1e-6));
}

TEST(VfrTheory, InfeasibleKappaCarriesLimit) {
  const TheoryConstants ok = VfrTheory(0.75, FullBatchConstants(), 2.0, 0.0);
  try {
    VfrTheory(0.75, FullBatchConstants(), 2.0, ok.delta);
    FAIL() << "expected InfeasibleParameters";
  } catch (const InfeasibleParameters& e) {
    EXPECT_NEAR(e.max_kappa(), ok.delta / 2.0, 1e-15);
  }
  EXPECT_NO_THROW(VfrTheory(0.75, FullBatchConstants(), 2.0, ok.delta / 2.0));
}

TEST(VfrTheory, StepDependentConstants) {
  const TheoryConstants t = VfrTheory(0.75, FullBatchConstants(), 1.0, 0.0);
  EXPECT_FALSE(t.theta2.has_value());
  const TheoryConstants half = AtStep(t, t.eta / 2);
  ASSERT_TRUE(half.theta2.has_value());
  const double l2e2 = half.eta * half.eta;
  EXPECT_NEAR(*half.theta2, 8 * (1 + l2e2) / (3 * 0.5 * (1 - t.m * l2e2)),
              1e-12);
  EXPECT_NEAR(half.theta1, VfrTheta1(0.75, 1.0, half.eta), 1e-15);
  EXPECT_THROW(AtStep(t, t.eta * 1.01), ConfigError);
  EXPECT_THROW(AtStep(t, 0.0), ConfigError);
}

TEST(VfrTheory, AveragedBound) {
  const TheoryConstants t = VfrTheory(0.75, FullBatchConstants(), 1.0, 0.0);
  EXPECT_NEAR(VfrAveragedBound(t, 4.0, 9), t.theta1 * 4.0 / 10.0, 1e-15);
}

TEST(VfrTheory, RejectsInvalidInputs) {
  EXPECT_THROW(VfrTheory(0.5, FullBatchConstants(), 1.0, 0.0), ConfigError);
  EXPECT_THROW(VfrTheory(1.0, FullBatchConstants(), 1.0, 0.0), ConfigError);
  EXPECT_THROW(VfrTheory(0.75, FullBatchConstants(), 0.0, 0.0), ConfigError);
  EXPECT_THROW(VfrTheory(0.75, FullBatchConstants(), 1.0, -1.0), ConfigError);
}

TEST(VfrbsTheory, PresetSigmaValues) {
  EXPECT_NEAR(VfrbsSigma(EstimatorKind::kLsvrg, 0.75), 0.0702, 1e-4);
  EXPECT_NEAR(VfrbsSigma(EstimatorKind::kLsvrg, 0.55), 0.1027, 1e-4);
  EXPECT_NEAR(VfrbsSigma(EstimatorKind::kSaga, 0.75), 0.0753, 1e-4);
  EXPECT_NEAR(VfrbsSigma(EstimatorKind::kSaga, 0.55), 0.1271, 1e-4);
}

TEST(VfrbsTheory, FullBatchFeasibleAtZeroKappa) {
  const TheoryConstants t = VfrbsTheory(0.75, FullBatchConstants(), 1.0, 0.0);
  EXPECT_NEAR(t.m, 4 * 0.75 * 0.75, 1e-15);
  EXPECT_NEAR(t.eta, 1.0 / 1.5, 1e-15);
  EXPECT_NEAR(t.delta, 0.75 * 0.5 / (1.25 * 1.5), 1e-15);
  EXPECT_NEAR(t.mu, 0.25 / 1.25, 1e-15);
  EXPECT_TRUE(t.eta_min_strict);
}

TEST(VfrbsTheory, LowerStepAndTheta) {
  const double kappa = 0.05, g = 0.75;
  const TheoryConstants t = VfrbsTheory(g, FullBatchConstants(), 1.0, kappa);
  EXPECT_NEAR(t.eta_min, (3 * g - 1) * kappa / (g * (2 * g - 1)), 1e-15);
  EXPECT_NEAR(t.theta1,
              (3 * g - 1) * t.eta /
                  ((1 - g) * (g * (2 * g - 1) * t.eta - (3 * g - 1) * kappa)),
              1e-12);
  EXPECT_THROW(AtStep(t, t.eta_min), ConfigError);
  EXPECT_TRUE(std::isinf(VfrbsTheta1(g, t.eta_min, kappa)));
}

TEST(VfrbsTheory, AveragedBoundUsesShiftedRadius) {
  const TheoryConstants t = VfrbsTheory(0.75, FullBatchConstants(), 1.0, 0.0);
  const double r0 = 2.0 + 0.75 * 0.75 * t.eta * t.eta * 3.0;
  EXPECT_NEAR(VfrbsAveragedBound(t, 2.0, 3.0, 4),
              t.theta1 * r0 / (t.eta * t.eta * 5.0), 1e-12);
}

TEST(Theory, JsonListsAllFields) {
  const TheoryConstants t =
      VfrTheory(0.75, LsvrgConstants(0.75, 464, 0.1), 1.0, 0.0,
                EstimatorKind::kLsvrg);
  const nlohmann::json j = TheoryToJson(t);
  for (const char* key : {"method", "gamma", "L", "kappa", "rho", "C", "C_hat",
                          "Lambda", "M", "delta", "max_kappa", "eta",
                          "eta_times_L", "eta_max", "eta_min", "mu", "theta1",
                          "theta2", "sigma", "Gamma"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["theta2"].is_null());
  EXPECT_EQ(j["method"], "vfr");
}

TEST(Theory, MethodNames) {
  EXPECT_EQ(ParseMethod("vfrbs"), Method::kVfrbs);
  EXPECT_THROW(ParseMethod("eg"), ConfigError);
}

}  // namespace
}  // namespace vrfr
