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

#include "vrfr/problems/quadratic_minimax.h"

#include <memory>

#include "vrfr/core/rng.h"

namespace vrfr {
namespace {

DenseMat ClippedSymmetric(RngStream& rng, int p, double clip) {
  Eigen::HouseholderQR<DenseMat> qr(rng.NormalMat(p, p));
  const DenseMat q = qr.householderQ() * DenseMat::Identity(p, p);
  DenseVec d = rng.NormalVec(p);
  for (Eigen::Index j = 0; j < d.size(); ++j) d(j) = std::max(d(j), clip);
  DenseMat m = q * d.asDiagonal() * q.transpose();
  return 0.5 * (m + m.transpose());
}

}  // namespace

QuadraticMinimaxInstance GenerateQuadraticMinimax(int n, int p1, int p2,
                                                  uint64_t seed, double clip) {
  if (n < 1 || p1 < 1 || p2 < 1) {
    throw ConfigError("quadratic minimax: n, p1, p2 must be >= 1");
  }
  QuadraticMinimaxInstance inst;
  inst.n = n;
  inst.p1 = p1;
  inst.p2 = p2;
  inst.clip = clip;
  inst.seed = seed;
  inst.u_offsets.resize(p1, n);
  inst.v_offsets.resize(p2, n);
  const RngStream root(seed);
  for (int i = 0; i < n; ++i) {
    RngStream rng = root.Derive(static_cast<uint64_t>(i));
    inst.a.push_back(ClippedSymmetric(rng, p1, clip));
    inst.b.push_back(ClippedSymmetric(rng, p2, clip));
    inst.l.push_back(rng.NormalMat(p1, p2));
    inst.u_offsets.col(i) = rng.NormalVec(p1);
    inst.v_offsets.col(i) = rng.NormalVec(p2);
  }
  return inst;
}

AffineOperator QuadraticMinimaxOperator(const QuadraticMinimaxInstance& inst) {
  const int p1 = inst.p1, p2 = inst.p2, p = p1 + p2;
  std::vector<DenseMat> blocks;
  blocks.reserve(static_cast<size_t>(inst.n));
  DenseMat offsets(p, inst.n);
  for (int i = 0; i < inst.n; ++i) {
    DenseMat g(p, p);
    g.topLeftCorner(p1, p1) = inst.a[i];
    g.topRightCorner(p1, p2) = inst.l[i];
    g.bottomLeftCorner(p2, p1) = -inst.l[i].transpose();
    g.bottomRightCorner(p2, p2) = inst.b[i];
    blocks.push_back(std::move(g));
    offsets.col(i).head(p1) = inst.u_offsets.col(i);
    offsets.col(i).tail(p2) = inst.v_offsets.col(i);
  }
  return AffineOperator(std::move(blocks), std::move(offsets));
}

SaddleOperator QuadraticMinimaxSaddle(const QuadraticMinimaxInstance& inst) {
  auto shared = std::make_shared<const QuadraticMinimaxInstance>(inst);
  SaddleGradient grad = [shared](int i, const DenseVec& u, const DenseVec& v,
                                 DenseVec& gu, DenseVec& gv) {
    const QuadraticMinimaxInstance& q = *shared;
    gu = q.a[i] * u + q.l[i] * v + q.u_offsets.col(i);
    gv = q.l[i].transpose() * u - q.b[i] * v - q.v_offsets.col(i);
  };
  return SaddleOperator(inst.n, inst.p1, inst.p2, std::move(grad));
}

MonotoneMap SimplexConstraint(int p1, int p2) {
  std::vector<BlockRange> ranges{{0, p1}, {p1, p2}};
  std::vector<MonotoneMap> maps{MonotoneMap::Simplex(p1),
                                MonotoneMap::Simplex(p2)};
  return MonotoneMap::Product(p1 + p2, std::move(ranges), std::move(maps));
}

double MinSymmetricEigenvalue(const DenseMat& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("MinSymmetricEigenvalue: matrix must be square");
  }
  Eigen::SelfAdjointEigenSolver<DenseMat> es(0.5 * (m + m.transpose()),
                                             Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace vrfr
