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

#include "vrfr/problems/wgan.h"

#include <string>

#include "vrfr/core/rng.h"
#include "vrfr/operators/lipschitz.h"

namespace vrfr {

const char* CouplingModeName(CouplingMode mode) {
  return mode == CouplingMode::kIdentity ? "identity" : "random";
}

CouplingMode ParseCouplingMode(std::string_view name) {
  if (name == "identity") return CouplingMode::kIdentity;
  if (name == "random") return CouplingMode::kRandom;
  throw ConfigError("unknown coupling mode '" + std::string(name) +
                    "' (expected identity or random)");
}

WganInstance GenerateWgan(int n, int p1, int p2, uint64_t seed,
                          CouplingMode mode) {
  if (n < 1 || p1 < 1 || p2 < 1) {
    throw ConfigError("wgan: n, p1, p2 must be >= 1");
  }
  if (mode == CouplingMode::kIdentity && p1 != p2) {
    throw ConfigError("wgan: identity coupling needs p1 == p2");
  }
  WganInstance inst;
  inst.n = n;
  inst.p1 = p1;
  inst.p2 = p2;
  inst.seed = seed;
  inst.mode = mode;
  const RngStream root(seed);
  RngStream global = root.Derive(0);
  inst.theta_star = global.NormalVec(p1);
  if (mode == CouplingMode::kIdentity) {
    inst.coupling = DenseMat::Identity(p1, p2);
  } else {
    DenseMat k = global.NormalMat(p1, p2);
    inst.coupling = k / SpectralNorm(k);
  }
  inst.samples.resize(p1, n);
  inst.noise.resize(p1, n);
  for (int i = 0; i < n; ++i) {
    RngStream rng = root.Derive(static_cast<uint64_t>(i) + 1);
    inst.samples.col(i) = inst.theta_star + rng.NormalVec(p1);
    inst.noise.col(i) = rng.NormalVec(p1);
  }
  return inst;
}

AffineOperator WganOperator(const WganInstance& inst) {
  const int p1 = inst.p1, p2 = inst.p2;
  DenseMat g = DenseMat::Zero(p1 + p2, p1 + p2);
  g.topRightCorner(p1, p2) = -inst.coupling;
  g.bottomLeftCorner(p2, p1) = inst.coupling.transpose();
  DenseMat offsets = DenseMat::Zero(p1 + p2, inst.n);
  offsets.bottomRows(p2) =
      -inst.coupling.transpose() * (inst.samples - inst.noise);
  return AffineOperator::SharedMatrix(std::move(g), std::move(offsets));
}

DenseVec WganRoot(const WganInstance& inst) {
  DenseVec root = DenseVec::Zero(inst.dim());
  root.head(inst.p1) =
      (inst.samples - inst.noise).rowwise().sum() / static_cast<double>(inst.n);
  return root;
}

}  // namespace vrfr
