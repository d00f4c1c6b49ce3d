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

#include "vrfr/operators/affine_operator.h"

#include <string>
#include <utility>

#include "vrfr/operators/lipschitz.h"

namespace vrfr {
namespace {

int CheckShapes(const std::vector<DenseMat>& matrices, const DenseMat& offsets) {
  if (matrices.empty()) throw ConfigError("AffineOperator: no matrices");
  const Eigen::Index dim = matrices.front().rows();
  for (const DenseMat& m : matrices) {
    if (m.rows() != dim || m.cols() != dim) {
      throw DimensionError("AffineOperator: matrices must be square of size " +
                           std::to_string(dim));
    }
  }
  if (offsets.rows() != dim) {
    throw DimensionError("AffineOperator: offsets must have " +
                         std::to_string(dim) + " rows");
  }
  if (matrices.size() != 1 &&
      static_cast<Eigen::Index>(matrices.size()) != offsets.cols()) {
    throw DimensionError("AffineOperator: matrix count must be 1 or n");
  }
  return static_cast<int>(offsets.cols());
}

}  // namespace

AffineOperator::AffineOperator(std::vector<DenseMat> matrices,
                               DenseMat offsets)
    : FiniteSumOperator(CheckShapes(matrices, offsets),
                        static_cast<int>(offsets.rows())),
      matrices_(std::move(matrices)),
      offsets_(std::move(offsets)) {
  if (shared()) {
    mean_matrix_ = matrices_.front();
  } else {
    mean_matrix_ = DenseMat::Zero(dim(), dim());
    for (const DenseMat& m : matrices_) mean_matrix_ += m;
    mean_matrix_ /= static_cast<double>(n());
  }
  mean_offset_ = offsets_.rowwise().sum() / static_cast<double>(n());
  lipschitz_ = AveragedLipschitz(*this).value;
}

AffineOperator AffineOperator::SharedMatrix(DenseMat matrix, DenseMat offsets) {
  std::vector<DenseMat> one;
  one.push_back(std::move(matrix));
  return AffineOperator(std::move(one), std::move(offsets));
}

const DenseMat& AffineOperator::matrix(int i) const {
  CheckIndex(i);
  return shared() ? matrices_.front() : matrices_[static_cast<size_t>(i)];
}

void AffineOperator::ComponentInto(int i, const DenseVec& x,
                                   DenseVec& out) const {
  out.noalias() = matrix(i) * x;
  out += offsets_.col(i);
}

DenseVec AffineOperator::MeanUncounted(const DenseVec& x) const {
  CheckPoint(x);
  DenseVec out = mean_matrix_ * x;
  out += mean_offset_;
  return out;
}

std::optional<double> AffineOperator::KnownLipschitz() const {
  return lipschitz_;
}

DenseMat AffineOperator::GramMean() const {
  if (shared()) return matrices_.front().transpose() * matrices_.front();
  DenseMat gram = DenseMat::Zero(dim(), dim());
  for (const DenseMat& m : matrices_) gram.noalias() += m.transpose() * m;
  return gram / static_cast<double>(n());
}

DenseVec AffineRoot(const AffineOperator& op) {
  Eigen::FullPivLU<DenseMat> lu(op.mean_matrix());
  if (!lu.isInvertible()) {
    throw NumericError("AffineRoot: mean matrix is singular");
  }
  return lu.solve(-op.mean_offset());
}

}  // namespace vrfr
