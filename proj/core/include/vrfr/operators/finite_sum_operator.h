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

#ifndef VRFR_OPERATORS_FINITE_SUM_OPERATOR_H_
#define VRFR_OPERATORS_FINITE_SUM_OPERATOR_H_

#include <optional>
#include <span>

#include "vrfr/core/oracle_counter.h"
#include "vrfr/core/types.h"

namespace vrfr {

// G = (1/n) sum_i G_i on R^dim. Implementations are read-only after
// construction and may be evaluated concurrently; oracle accounting lives in
// the caller-owned OracleCounter, never in the operator.
class FiniteSumOperator {
 public:
  FiniteSumOperator(int n, int dim);
  virtual ~FiniteSumOperator() = default;

  int n() const { return n_; }
  int dim() const { return dim_; }

  // G_i x written to `out` (resized as needed). Not counted.
  virtual void ComponentInto(int i, const DenseVec& x, DenseVec& out) const = 0;

  // Gx without touching any counter; used for metrics. The default sums
  // components in index order.
  virtual DenseVec MeanUncounted(const DenseVec& x) const;

  // Averaged Lipschitz constant if available in closed form.
  virtual std::optional<double> KnownLipschitz() const { return std::nullopt; }

  // Counted oracles. `counter` may be null.
  DenseVec Component(int i, const DenseVec& x, OracleCounter* counter) const;
  // Mean over `batch` with multiplicity; |batch| evaluations. A batch equal
  // to the identity index set [0, n) is evaluated as Full(), so full-batch
  // runs reproduce Full() bitwise.
  DenseVec Minibatch(std::span<const int> batch, const DenseVec& x,
                     OracleCounter* counter) const;
  // n evaluations.
  DenseVec Full(const DenseVec& x, OracleCounter* counter) const;

 protected:
  void CheckIndex(int i) const;
  void CheckPoint(const DenseVec& x) const;

 private:
  int n_;
  int dim_;
};

// True iff batch is exactly 0, 1, ..., n-1.
bool IsIdentityBatch(std::span<const int> batch, int n);

}  // namespace vrfr

#endif  // VRFR_OPERATORS_FINITE_SUM_OPERATOR_H_
