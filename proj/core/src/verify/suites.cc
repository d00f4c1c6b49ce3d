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

#include "vrfr/verify/suites.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vrfr/core/rng.h"
#include "vrfr/core/trajectory.h"
#include "vrfr/estimators/frq.h"
#include "vrfr/verify/certificate.h"
#include "vrfr/verify/delta_audit.h"

namespace vrfr {

AffineOperator RandomAffineOperator(int n, int dim, uint64_t seed) {
  RngStream root(seed, 0x616666ULL);
  std::vector<DenseMat> matrices;
  DenseMat offsets(dim, n);
  for (int i = 0; i < n; ++i) {
    RngStream rng = root.Derive(static_cast<uint64_t>(i));
    matrices.push_back(rng.NormalMat(dim, dim) / std::sqrt(double(dim)));
    offsets.col(i) = rng.NormalVec(dim);
  }
  return AffineOperator(std::move(matrices), std::move(offsets));
}

namespace {

// Delta_0 vanishes up to rounding of G_i x - gamma G_i x - (1 - gamma) G_i x.
constexpr double kInitialDeltaTol = 1e-20;

}  // namespace

CheckResult CertifyEstimator(EstimatorKind kind, int n, int b,
                             const CertificationOptions& options) {
  if (kind != EstimatorKind::kLsvrg && kind != EstimatorKind::kSaga) {
    throw ConfigError("certification covers lsvrg and saga");
  }
  const bool svrg = kind == EstimatorKind::kLsvrg;
  CheckResult result;
  result.name = std::string(EstimatorKindName(kind)) + " n=" +
                std::to_string(n) + " b=" + std::to_string(b);
  const AffineOperator op =
      RandomAffineOperator(n, options.dim, options.seed ^ (uint64_t(n) << 8) ^
                                               uint64_t(b));
  RngStream rng(options.seed, 0x63657274ULL + static_cast<uint64_t>(n * 16 + b));

  double worst_bias = 0.0;
  double worst_variance_slack = std::numeric_limits<double>::infinity();
  double worst_audit_slack = std::numeric_limits<double>::infinity();
  double worst_initial_delta = 0.0;
  for (int s = 0; s < options.states; ++s) {
    const double gamma = 0.55 + 0.4 * rng.Uniform();
    const double p = 0.1 + 0.8 * rng.Uniform();
    const DenseVec x_k = rng.NormalVec(options.dim);
    const DenseVec x_km1 = rng.NormalVec(options.dim);
    const DenseVec exact =
        FrqExact(op.MeanUncounted(x_k), op.MeanUncounted(x_km1), gamma);

    LsvrgState svrg_state;
    SagaState saga_state;
    DenseMat reference;
    BatchEstimate estimate;
    if (svrg) {
      svrg_state = LsvrgInit(op, rng.NormalVec(options.dim), nullptr);
      reference = LsvrgReference(svrg_state, op);
      estimate = LsvrgBatchEstimate(svrg_state, op, gamma, x_k, x_km1);
    } else {
      // Stale table: entry i evaluated at its own random point.
      saga_state = SagaInit(op, rng.NormalVec(options.dim), nullptr);
      DenseVec gi;
      for (int i = 0; i < n; ++i) {
        op.ComponentInto(i, rng.NormalVec(options.dim), gi);
        saga_state.table.col(i) = gi;
      }
      saga_state.table_mean =
          saga_state.table.rowwise().sum() / static_cast<double>(n);
      reference = saga_state.table;
      estimate = SagaBatchEstimate(saga_state, op, gamma, x_k, x_km1);
    }

    const DenseVec mean = BruteExpectation(n, b, estimate, options.budget);
    worst_bias = std::max(worst_bias, (mean - exact).cwiseAbs().maxCoeff());
    const double variance = BruteVariance(n, b, estimate, exact, options.budget);
    const double delta = DeltaExact(op, gamma, x_k, x_km1, reference, b);
    const double tight = VarianceTightening(op, gamma, x_k, x_km1, reference, b);
    worst_variance_slack =
        std::min(worst_variance_slack, delta - tight - variance);

    DeltaAuditOptions audit;
    audit.kind = kind;
    audit.gamma = gamma;
    audit.batch_size = b;
    audit.snapshot_prob = p;
    audit.steps = options.audit_steps;
    audit.seed = options.seed * 1000 + static_cast<uint64_t>(s);
    audit.eta = 0.2 / *op.KnownLipschitz();
    audit.jump_scale = s % 2 == 0 ? 0.0 : 1.0;
    const DeltaAuditReport report = AuditDeltaRecursion(op, x_k, audit);
    worst_audit_slack = std::min(worst_audit_slack, report.min_slack);
    worst_initial_delta =
        std::max(worst_initial_delta, std::abs(report.initial_delta));
  }
  const bool unbiased = worst_bias <= options.unbiased_tol;
  const bool variance_ok = worst_variance_slack >= -options.variance_tol;
  const bool audit_ok = worst_audit_slack >= -options.audit_tol &&
                        worst_initial_delta <= kInitialDeltaTol;
  result.pass = unbiased && variance_ok && audit_ok;
  result.details = {{"states", options.states},
                    {"outcomes", OutcomeCount(n, b, options.budget)},
                    {"max_bias", worst_bias},
                    {"min_variance_slack", worst_variance_slack},
                    {"min_audit_slack", worst_audit_slack},
                    {"initial_delta", worst_initial_delta},
                    {"unbiased", unbiased},
                    {"variance_bound", variance_ok},
                    {"delta_recursion", audit_ok}};
  return result;
}

CheckResult CertifyTwoByTwo(const CoHypomonotoneInstance& inst, double kappa) {
  const CertificateReport report = WeakMintyCertificate(inst.g, inst.t, kappa);
  CheckResult result;
  result.name = std::string("weak-minty ") +
                TwoByTwoCouplingName(inst.coupling) +
                " eps=" + FormatDouble(inst.epsilon) +
                " kappa=" + FormatDouble(kappa);
  result.pass = report.pass;
  result.details = CertificateToJson(report);
  return result;
}

nlohmann::json ChecksToJson(const std::vector<CheckResult>& checks) {
  nlohmann::json out = nlohmann::json::array();
  bool all = true;
  for (const CheckResult& c : checks) {
    out.push_back({{"check", c.name},
                   {"result", c.pass ? "PASS" : "FAIL"},
                   {"details", c.details}});
    all = all && c.pass;
  }
  return {{"checks", out}, {"result", all ? "PASS" : "FAIL"}};
}

}  // namespace vrfr
