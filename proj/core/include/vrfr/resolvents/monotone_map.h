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

#ifndef VRFR_RESOLVENTS_MONOTONE_MAP_H_
#define VRFR_RESOLVENTS_MONOTONE_MAP_H_

#include <string>
#include <vector>

#include "vrfr/core/oracle_counter.h"
#include "vrfr/core/types.h"

namespace vrfr {

enum class MapKind { kZero, kL1, kBox, kSimplex, kLinear, kProduct };

const char* MapKindName(MapKind kind);

struct BlockRange {
  int begin = 0;
  int size = 0;
};

// A maximal monotone map T, available only through its resolvent
// J_{lambda T} = (I + lambda T)^{-1}. Value type; immutable after
// construction and safe to share across threads.
//
// Indicator kinds (box, simplex) resolve to projections, which do not depend
// on lambda; lambda is still validated for a uniform call contract.
class MonotoneMap {
 public:
  static MonotoneMap Zero(int dim);
  // weight * subdifferential of the l1 norm.
  static MonotoneMap L1(int dim, double weight);
  // Normal cone of [-radius, radius]^dim.
  static MonotoneMap Box(int dim, double radius);
  // Normal cone of the unit simplex in R^dim.
  static MonotoneMap Simplex(int dim);
  // x -> T x. Non-monotone T is accepted; Resolve throws when I + lambda T is
  // singular.
  static MonotoneMap Linear(DenseMat matrix);
  // Block-diagonal product. Ranges must partition [0, dim) and each map's
  // dimension must match its range.
  static MonotoneMap Product(int dim, std::vector<BlockRange> ranges,
                             std::vector<MonotoneMap> maps);

  MapKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double parameter() const { return parameter_; }
  const DenseMat& matrix() const { return matrix_; }
  const std::vector<BlockRange>& ranges() const { return ranges_; }
  const std::vector<MonotoneMap>& blocks() const { return blocks_; }

  // Unique x with y in x + lambda T x. One resolvent evaluation is counted
  // per call, including for products.
  DenseVec Resolve(double lambda, const DenseVec& y,
                   OracleCounter* counter = nullptr) const;

 private:
  MonotoneMap(MapKind kind, int dim) : kind_(kind), dim_(dim) {}
  DenseVec ResolveUncounted(double lambda, const DenseVec& y) const;

  MapKind kind_;
  int dim_;
  double parameter_ = 0.0;
  DenseMat matrix_;
  std::vector<BlockRange> ranges_;
  std::vector<MonotoneMap> blocks_;
};

// v = (y - x) / lambda, the element of T x produced by x = J_{lambda T}(y).
DenseVec ElementOfT(double lambda, const DenseVec& y, const DenseVec& x);

}  // namespace vrfr

#endif  // VRFR_RESOLVENTS_MONOTONE_MAP_H_
