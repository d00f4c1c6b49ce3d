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

#ifndef VRFR_OPERATORS_LIPSCHITZ_H_
#define VRFR_OPERATORS_LIPSCHITZ_H_

#include "vrfr/core/rng.h"
#include "vrfr/core/types.h"
#include "vrfr/operators/finite_sum_operator.h"

namespace vrfr {

struct PowerIterationOptions {
  double tolerance = 1e-10;  // relative change of the Rayleigh quotient
  int max_iterations = 10000;
  uint64_t seed = 0x5eed;  // start vector stream
};

struct PowerIterationResult {
  double eigenvalue = 0.0;
  DenseVec eigenvector;
  int iterations = 0;
};

// Largest eigenvalue of a symmetric positive semidefinite matrix.
// Throws NumericError with the last two iterates' quotients when the
// tolerance is not met within max_iterations.
PowerIterationResult PowerIterationPsd(const DenseMat& psd,
                                       const PowerIterationOptions& options = {});

// Largest singular value.
double SpectralNorm(const DenseMat& matrix,
                    const PowerIterationOptions& options = {});

struct LipschitzEstimate {
  double value = 0.0;
  // True for sampled lower estimates; false for the exact affine value.
  bool empirical = false;
};

class AffineOperator;

// sqrt(lambda_max((1/n) sum_i A_i^T A_i)).
LipschitzEstimate AveragedLipschitz(const AffineOperator& op,
                                    const PowerIterationOptions& options = {});

// max over `pairs` random (x, y) of sqrt((1/n) sum_i |G_i x - G_i y|^2)/|x-y|.
// Points are standard normal around the origin scaled by `radius`.
LipschitzEstimate EmpiricalLipschitz(const FiniteSumOperator& op,
                                     RngStream& rng, int pairs = 1000,
                                     double radius = 1.0);

}  // namespace vrfr

#endif  // VRFR_OPERATORS_LIPSCHITZ_H_
