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

#include "vrfr/verify/delta_audit.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vrfr/core/rng.h"
#include "vrfr/estimators/lsvrg.h"
#include "vrfr/estimators/saga.h"
#include "vrfr/verify/enumeration.h"

namespace vrfr {

namespace {

DenseMat ComponentValues(const FiniteSumOperator& op, const DenseVec& x) {
  DenseMat out(op.dim(), op.n());
  DenseVec gi;
  for (int i = 0; i < op.n(); ++i) {
    op.ComponentInto(i, x, gi);
    out.col(i) = gi;
  }
  return out;
}

double MeanSquaredGap(const DenseMat& a, const DenseMat& b) {
  return (a - b).squaredNorm() / static_cast<double>(a.cols());
}

}  // namespace

DeltaAuditReport AuditDeltaRecursion(const FiniteSumOperator& op,
                                     const DenseVec& x0,
                                     const DeltaAuditOptions& options) {
  const int n = op.n();
  const int b = options.batch_size;
  const double gamma = options.gamma;
  if (options.kind != EstimatorKind::kLsvrg &&
      options.kind != EstimatorKind::kSaga) {
    throw ConfigError("delta audit supports lsvrg and saga only");
  }
  if (b < 1 || b > n) throw ConfigError("batch size must lie in [1, n]");
  if (options.steps < 1) throw ConfigError("audit needs at least one step");

  DeltaAuditReport report;
  const bool svrg = options.kind == EstimatorKind::kLsvrg;
  report.constants = svrg ? LsvrgConstants(gamma, b, options.snapshot_prob)
                          : SagaConstants(gamma, n, b);
  const EstimatorConstants& c = report.constants;
  // Marginal probability that a given reference entry is refreshed; b = n
  // uses the deterministic full index set.
  const double refresh =
      svrg ? options.snapshot_prob
      : b == n ? 1.0
               : 1.0 - std::pow(1.0 - 1.0 / n, static_cast<double>(b));

  RngStream rng(options.seed, 0x64656c7461ULL);
  LsvrgState svrg_state;
  SagaState saga_state;
  if (svrg) {
    svrg_state = LsvrgInit(op, x0, nullptr);
  } else {
    saga_state = SagaInit(op, x0, nullptr);
  }
  auto reference = [&]() {
    return svrg ? LsvrgReference(svrg_state, op) : saga_state.table;
  };

  DenseVec x_prev = x0;
  DenseVec x = x0;
  DenseMat g = ComponentValues(op, x0);
  double delta = DeltaExact(op, gamma, x, x_prev, reference(), b);
  report.initial_delta = delta;
  report.delta.push_back(delta);
  double u = 0.0;
  report.min_slack = std::numeric_limits<double>::infinity();

  for (int k = 0; k < options.steps; ++k) {
    // Batch for step k; SAGA refreshes the same indices it sampled.
    const std::vector<int> batch = DrawBatch(rng, n, b);
    DenseVec x_next;
    if (options.jump_scale > 0.0) {
      x_next = x + options.jump_scale * rng.NormalVec(x.size());
    } else {
      DenseVec estimate;
      if (k == 0) {
        estimate = (1.0 - gamma) * op.MeanUncounted(x);
      } else if (svrg) {
        estimate = LsvrgEstimate(svrg_state, op, gamma, x, x_prev, batch,
                                 nullptr);
      } else {
        estimate = SagaEstimate(saga_state, op, gamma, x, x_prev, batch,
                                nullptr);
      }
      x_next = x - options.eta * estimate;
    }
    const DenseMat g_next = ComponentValues(op, x_next);
    const double u_next = MeanSquaredGap(g_next, g);

    // E[Delta_{k+1}]: each reference entry becomes G_i x^k with probability
    // `refresh`, otherwise keeps its current value.
    const DenseMat ref = reference();
    const DenseMat kept = g_next - gamma * g - (1.0 - gamma) * ref;
    const DenseMat fresh = g_next - gamma * g - (1.0 - gamma) * g;
    const double scale = 1.0 / (static_cast<double>(n) * b);
    const double expected =
        scale * (refresh * fresh.squaredNorm() +
                 (1.0 - refresh) * kept.squaredNorm());
    const double bound = (1.0 - c.rho) * delta + c.c * u_next + c.c_hat * u;
    const double slack = bound - expected;
    report.slack.push_back(slack);
    report.min_slack = std::min(report.min_slack, slack);

    // Realized transition.
    if (svrg) {
      LsvrgSnapshotUpdate(svrg_state, op, x,
                          FlipCoin(rng, options.snapshot_prob), nullptr);
    } else {
      SagaTableUpdate(saga_state, op, x, batch, nullptr);
    }
    x_prev = x;
    x = x_next;
    g = g_next;
    u = u_next;
    delta = DeltaExact(op, gamma, x, x_prev, reference(), b);
    report.delta.push_back(delta);
  }
  return report;
}

}  // namespace vrfr
