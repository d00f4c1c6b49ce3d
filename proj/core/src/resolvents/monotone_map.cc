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

#include "vrfr/resolvents/monotone_map.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include <Eigen/LU>

#include "vrfr/resolvents/prox.h"

namespace vrfr {

const char* MapKindName(MapKind kind) {
  switch (kind) {
    case MapKind::kZero:
      return "zero";
    case MapKind::kL1:
      return "l1";
    case MapKind::kBox:
      return "box";
    case MapKind::kSimplex:
      return "simplex";
    case MapKind::kLinear:
      return "linear";
    case MapKind::kProduct:
      return "product";
  }
  return "unknown";
}

namespace {

void CheckDim(int dim) {
  if (dim < 1) throw ConfigError("MonotoneMap: dimension must be >= 1");
}

}  // namespace

MonotoneMap MonotoneMap::Zero(int dim) {
  CheckDim(dim);
  return MonotoneMap(MapKind::kZero, dim);
}

MonotoneMap MonotoneMap::L1(int dim, double weight) {
  CheckDim(dim);
  if (!(weight >= 0.0)) throw ConfigError("L1: weight must be >= 0");
  MonotoneMap map(MapKind::kL1, dim);
  map.parameter_ = weight;
  return map;
}

MonotoneMap MonotoneMap::Box(int dim, double radius) {
  CheckDim(dim);
  if (!(radius > 0.0)) throw ConfigError("Box: radius must be > 0");
  MonotoneMap map(MapKind::kBox, dim);
  map.parameter_ = radius;
  return map;
}

MonotoneMap MonotoneMap::Simplex(int dim) {
  CheckDim(dim);
  return MonotoneMap(MapKind::kSimplex, dim);
}

MonotoneMap MonotoneMap::Linear(DenseMat matrix) {
  if (matrix.rows() != matrix.cols()) {
    throw DimensionError("Linear: matrix must be square");
  }
  CheckDim(static_cast<int>(matrix.rows()));
  MonotoneMap map(MapKind::kLinear, static_cast<int>(matrix.rows()));
  map.matrix_ = std::move(matrix);
  return map;
}

MonotoneMap MonotoneMap::Product(int dim, std::vector<BlockRange> ranges,
                                 std::vector<MonotoneMap> maps) {
  CheckDim(dim);
  if (ranges.size() != maps.size() || ranges.empty()) {
    throw ConfigError("Product: need one range per block, at least one block");
  }
  std::vector<size_t> order(ranges.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return ranges[a].begin < ranges[b].begin;
  });
  int next = 0;
  for (size_t idx : order) {
    const BlockRange& r = ranges[idx];
    if (r.begin != next || r.size < 1) {
      throw ConfigError("Product: blocks must be disjoint and exhaustive");
    }
    if (maps[idx].dim() != r.size) {
      throw DimensionError("Product: block map dimension differs from range");
    }
    next += r.size;
  }
  if (next != dim) {
    throw ConfigError("Product: blocks must be disjoint and exhaustive");
  }
  MonotoneMap map(MapKind::kProduct, dim);
  map.ranges_ = std::move(ranges);
  map.blocks_ = std::move(maps);
  return map;
}

DenseVec MonotoneMap::Resolve(double lambda, const DenseVec& y,
                              OracleCounter* counter) const {
  if (!(lambda > 0.0)) throw ConfigError("Resolve: lambda must be > 0");
  if (y.size() != dim_) {
    throw DimensionError("Resolve: point has size " + std::to_string(y.size()) +
                         ", map has dimension " + std::to_string(dim_));
  }
  if (counter) counter->AddResolventEval();
  return ResolveUncounted(lambda, y);
}

DenseVec MonotoneMap::ResolveUncounted(double lambda, const DenseVec& y) const {
  switch (kind_) {
    case MapKind::kZero:
      return y;
    case MapKind::kL1:
      return SoftThreshold(y, lambda * parameter_);
    case MapKind::kBox:
      return ProjectBox(y, parameter_);
    case MapKind::kSimplex:
      return ProjectSimplex(y);
    case MapKind::kLinear: {
      const DenseMat system =
          DenseMat::Identity(dim_, dim_) + lambda * matrix_;
      Eigen::FullPivLU<DenseMat> lu(system);
      if (!lu.isInvertible()) {
        throw NumericError("Resolve: I + lambda T is singular");
      }
      return lu.solve(y);
    }
    case MapKind::kProduct: {
      DenseVec x(dim_);
      for (size_t b = 0; b < blocks_.size(); ++b) {
        const BlockRange& r = ranges_[b];
        x.segment(r.begin, r.size) =
            blocks_[b].ResolveUncounted(lambda, y.segment(r.begin, r.size));
      }
      return x;
    }
  }
  throw ConfigError("Resolve: unknown map kind");
}

DenseVec ElementOfT(double lambda, const DenseVec& y, const DenseVec& x) {
  CheckSameDim(y, x, "ElementOfT");
  if (!(lambda > 0.0)) throw ConfigError("ElementOfT: lambda must be > 0");
  return (y - x) / lambda;
}

}  // namespace vrfr
