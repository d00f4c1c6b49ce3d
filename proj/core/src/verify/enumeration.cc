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

#include "vrfr/verify/enumeration.h"

#include <string>
#include <vector>

namespace vrfr {

int64_t OutcomeCount(int n, int b, const EnumerationBudget& budget) {
  if (n < 1 || b < 1) throw ConfigError("enumeration needs n, b >= 1");
  int64_t count = 1;
  for (int j = 0; j < b; ++j) {
    if (count > budget.max_outcomes / n) {
      throw BudgetExceeded("enumeration of " + std::to_string(n) + "^" +
                           std::to_string(b) + " batches exceeds the budget of " +
                           std::to_string(budget.max_outcomes));
    }
    count *= n;
  }
  return count;
}

void ForEachBatch(int n, int b, const EnumerationBudget& budget,
                  const std::function<void(std::span<const int>)>& visit) {
  const int64_t total = OutcomeCount(n, b, budget);
  std::vector<int> batch(static_cast<size_t>(b), 0);
  for (int64_t o = 0; o < total; ++o) {
    visit(batch);
    for (int pos = b - 1; pos >= 0; --pos) {
      if (++batch[static_cast<size_t>(pos)] < n) break;
      batch[static_cast<size_t>(pos)] = 0;
    }
  }
}

BatchEstimate LsvrgBatchEstimate(const LsvrgState& state,
                                 const FiniteSumOperator& op, double gamma,
                                 const DenseVec& x_k, const DenseVec& x_km1) {
  return [&state, &op, gamma, &x_k, &x_km1](std::span<const int> batch) {
    return LsvrgEstimate(state, op, gamma, x_k, x_km1, batch, nullptr);
  };
}

BatchEstimate SagaBatchEstimate(const SagaState& state,
                                const FiniteSumOperator& op, double gamma,
                                const DenseVec& x_k, const DenseVec& x_km1) {
  return [&state, &op, gamma, &x_k, &x_km1](std::span<const int> batch) {
    return SagaEstimate(state, op, gamma, x_k, x_km1, batch, nullptr);
  };
}

DenseVec BruteExpectation(int n, int b, const BatchEstimate& estimate,
                          const EnumerationBudget& budget) {
  const double weight = 1.0 / static_cast<double>(OutcomeCount(n, b, budget));
  DenseVec mean;
  ForEachBatch(n, b, budget, [&](std::span<const int> batch) {
    const DenseVec value = estimate(batch);
    if (mean.size() == 0) mean = DenseVec::Zero(value.size());
    mean += weight * value;
  });
  return mean;
}

double BruteVariance(int n, int b, const BatchEstimate& estimate,
                     const DenseVec& target, const EnumerationBudget& budget) {
  const double weight = 1.0 / static_cast<double>(OutcomeCount(n, b, budget));
  double total = 0.0;
  ForEachBatch(n, b, budget, [&](std::span<const int> batch) {
    total += weight * (estimate(batch) - target).squaredNorm();
  });
  return total;
}

DenseMat LsvrgReference(const LsvrgState& state, const FiniteSumOperator& op) {
  DenseMat ref(op.dim(), op.n());
  DenseVec gi;
  for (int i = 0; i < op.n(); ++i) {
    op.ComponentInto(i, state.snapshot, gi);
    ref.col(i) = gi;
  }
  return ref;
}

const DenseMat& SagaReference(const SagaState& state) { return state.table; }

DenseMat ResidualTerms(const FiniteSumOperator& op, double gamma,
                       const DenseVec& x_k, const DenseVec& x_km1,
                       const DenseMat& reference) {
  if (reference.rows() != op.dim() || reference.cols() != op.n()) {
    throw DimensionError("ResidualTerms: reference must be dim x n");
  }
  DenseMat terms(op.dim(), op.n());
  DenseVec gk, gkm1;
  for (int i = 0; i < op.n(); ++i) {
    op.ComponentInto(i, x_k, gk);
    op.ComponentInto(i, x_km1, gkm1);
    terms.col(i) = gk - gamma * gkm1 - (1.0 - gamma) * reference.col(i);
  }
  return terms;
}

double DeltaExact(const FiniteSumOperator& op, double gamma,
                  const DenseVec& x_k, const DenseVec& x_km1,
                  const DenseMat& reference, int b) {
  const DenseMat terms = ResidualTerms(op, gamma, x_k, x_km1, reference);
  return terms.squaredNorm() / (static_cast<double>(op.n()) * b);
}

double VarianceTightening(const FiniteSumOperator& op, double gamma,
                          const DenseVec& x_k, const DenseVec& x_km1,
                          const DenseMat& reference, int b) {
  const DenseMat terms = ResidualTerms(op, gamma, x_k, x_km1, reference);
  const DenseVec mean = terms.rowwise().sum() / static_cast<double>(op.n());
  return mean.squaredNorm() / b;
}

}  // namespace vrfr
