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

#ifndef VRFR_PROBLEMS_WGAN_H_
#define VRFR_PROBLEMS_WGAN_H_

#include <cstdint>
#include <string_view>

#include "vrfr/core/types.h"
#include "vrfr/operators/affine_operator.h"

namespace vrfr {

enum class CouplingMode { kIdentity, kRandom };

const char* CouplingModeName(CouplingMode mode);
CouplingMode ParseCouplingMode(std::string_view name);

// Bilinear generator/critic game with data samples w_i ~ N(theta*, I) and
// noise z_i ~ N(0, I) in R^{p1}. Over x = [theta; beta],
//   G_i x = -[K beta; K'(w_i - z_i - theta)],
// with K = I (p1 = p2) or a standard normal matrix scaled to unit spectral
// norm. All components share the matrix [[0, -K], [K', 0]].
struct WganInstance {
  int n = 0;
  int p1 = 0;
  int p2 = 0;
  uint64_t seed = 0;
  CouplingMode mode = CouplingMode::kIdentity;
  DenseMat coupling;    // K, p1 x p2
  DenseMat samples;     // p1 x n, column i is w_i
  DenseMat noise;       // p1 x n, column i is z_i
  DenseVec theta_star;  // mean of the data distribution

  int dim() const { return p1 + p2; }
};

inline constexpr int kWganGeneratorVersion = 1;

WganInstance GenerateWgan(int n, int p1, int p2, uint64_t seed,
                          CouplingMode mode = CouplingMode::kIdentity);

AffineOperator WganOperator(const WganInstance& inst);

// [mean(w - z); 0]. This is a zero of G for every K; it is the unique zero
// when K has full column rank (in particular K = I).
DenseVec WganRoot(const WganInstance& inst);

}  // namespace vrfr

#endif  // VRFR_PROBLEMS_WGAN_H_
