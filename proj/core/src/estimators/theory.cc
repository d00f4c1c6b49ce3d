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

#include "vrfr/estimators/theory.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "vrfr/core/types.h"

namespace vrfr {

const char* MethodName(Method method) {
  return method == Method::kVfr ? "vfr" : "vfrbs";
}

Method ParseMethod(std::string_view name) {
  if (name == "vfr") return Method::kVfr;
  if (name == "vfrbs") return Method::kVfrbs;
  throw ConfigError("unknown method '" + std::string(name) +
                    "' (expected vfr or vfrbs)");
}

namespace {

void CheckInputs(double gamma, const EstimatorConstants& consts,
                 double lipschitz, double kappa) {
  ValidateGamma(gamma);
  if (!(lipschitz > 0.0) || !std::isfinite(lipschitz)) {
    throw ConfigError("Lipschitz constant must be positive and finite");
  }
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw ConfigError("kappa must be non-negative and finite");
  }
  if (!(consts.rho > 0.0 && consts.rho <= 1.0) || consts.c < 0.0 ||
      consts.c_hat < 0.0) {
    throw ConfigError("estimator constants need rho in (0, 1], C, C_hat >= 0");
  }
}

void CheckFeasible(const TheoryConstants& t) {
  if (t.lipschitz * t.kappa > t.delta) {
    std::ostringstream msg;
    msg.precision(6);
    msg << MethodName(t.method) << ": L*kappa = " << t.lipschitz * t.kappa
        << " exceeds delta = " << t.delta
        << "; admissible kappa <= " << t.delta / t.lipschitz;
    throw InfeasibleParameters(msg.str(), t.delta / t.lipschitz);
  }
}

// 1 - M L^2 eta^2, clamped to zero when rounding puts eta at eta_max.
double Slack(const TheoryConstants& t, double eta) {
  const double s = 1.0 - t.m * t.lipschitz * t.lipschitz * eta * eta;
  return s > 1e-14 ? s : 0.0;
}

void FillStepDependent(TheoryConstants& t) {
  const double g = t.gamma;
  const double eta = t.eta;
  const double slack = Slack(t, eta);
  if (t.method == Method::kVfr) {
    const double l2e2 = t.lipschitz * t.lipschitz * eta * eta;
    t.theta1 = VfrTheta1(g, t.lipschitz, eta);
    if (slack > 0.0) {
      t.theta2 = 8.0 * (1.0 + l2e2) / (3.0 * (2.0 * g - 1.0) * slack);
    } else {
      t.theta2.reset();
    }
  } else {
    t.theta1 = VfrbsTheta1(g, eta, t.kappa);
    if (slack > 0.0) {
      t.theta2 = 4.0 * (3.0 * g - 1.0) / ((1.0 - g) * slack);
    } else {
      t.theta2.reset();
    }
    if (t.sigma) t.big_gamma = t.theta1 / (*t.sigma * *t.sigma);
  }
}

}  // namespace

double VfrSigma(EstimatorKind preset, double g) {
  ValidateGamma(g);
  switch (preset) {
    case EstimatorKind::kLsvrg:
      return std::sqrt(3.0 * (2.0 * g - 1.0)) /
             std::sqrt(8.0 + 49.0 * g + 13.0 * g * g + 48.0 * g * g * g);
    case EstimatorKind::kSaga:
      return std::sqrt(3.0 * (2.0 * g - 1.0)) /
             std::sqrt(10.0 + 61.0 * g + 13.0 * g * g + 48.0 * g * g * g);
    default:
      throw ConfigError("preset constants exist only for lsvrg and saga");
  }
}

double VfrBigGamma(EstimatorKind preset, double g) {
  ValidateGamma(g);
  double poly = 0.0;
  switch (preset) {
    case EstimatorKind::kLsvrg:
      poly = 8.0 + 49.0 * g + 13.0 * g * g + 48.0 * g * g * g;
      break;
    case EstimatorKind::kSaga:
      poly = 10.0 + 61.0 * g + 13.0 * g * g + 48.0 * g * g * g;
      break;
    default:
      throw ConfigError("preset constants exist only for lsvrg and saga");
  }
  return 2.0 * (5.0 * g * g + 7.0 * g - 3.0) * poly /
         (3.0 * g * g * (2.0 * g - 1.0) * (1.0 - g) * (1.0 + 5.0 * g));
}

double VfrbsSigma(EstimatorKind preset, double g) {
  ValidateGamma(g);
  switch (preset) {
    case EstimatorKind::kLsvrg:
      return std::sqrt(1.0 - g) / (2.0 * std::sqrt(8.0 + g + 7.0 * g * g));
    case EstimatorKind::kSaga:
      return std::sqrt(1.0 - g) /
             (2.0 * std::sqrt(g * (10.0 + g + 7.0 * g * g)));
    default:
      throw ConfigError("preset constants exist only for lsvrg and saga");
  }
}

double VfrTheta1(double g, double lipschitz, double eta) {
  return 2.0 * (1.0 + lipschitz * lipschitz * eta * eta) /
         (g * (1.0 - g) * eta * eta);
}

double VfrbsTheta1(double g, double eta, double kappa) {
  const double denom = g * (2.0 * g - 1.0) * eta - (3.0 * g - 1.0) * kappa;
  if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
  return (3.0 * g - 1.0) * eta / ((1.0 - g) * denom);
}

TheoryConstants VfrTheory(double gamma, const EstimatorConstants& consts,
                          double lipschitz, double kappa,
                          std::optional<EstimatorKind> preset) {
  CheckInputs(gamma, consts, lipschitz, kappa);
  const double g = gamma;
  TheoryConstants t;
  t.method = Method::kVfr;
  t.gamma = g;
  t.lipschitz = lipschitz;
  t.kappa = kappa;
  t.estimator = consts;
  const double two_g_1 = 2.0 * g - 1.0;
  t.m = g * (1.0 + 5.0 * g) / (3.0 * two_g_1) +
        (1.0 + 6.0 * g) / (3.0 * two_g_1) * consts.Lambda();
  t.delta = two_g_1 / (8.0 * std::sqrt(t.m));
  CheckFeasible(t);
  t.eta_max = 1.0 / (lipschitz * std::sqrt(t.m));
  t.eta = t.eta_max;
  t.eta_min = 8.0 * kappa / two_g_1;
  t.eta_min_strict = false;
  t.mu = 3.0 * two_g_1 / 4.0;
  if (preset) {
    t.sigma = VfrSigma(*preset, g);
    t.big_gamma = VfrBigGamma(*preset, g);
  }
  FillStepDependent(t);
  return t;
}

TheoryConstants VfrbsTheory(double gamma, const EstimatorConstants& consts,
                            double lipschitz, double kappa,
                            std::optional<EstimatorKind> preset) {
  CheckInputs(gamma, consts, lipschitz, kappa);
  const double g = gamma;
  TheoryConstants t;
  t.method = Method::kVfrbs;
  t.gamma = g;
  t.lipschitz = lipschitz;
  t.kappa = kappa;
  t.estimator = consts;
  t.m = 4.0 * g * g + 4.0 * g / (1.0 - g) * consts.Lambda();
  t.delta = g * (2.0 * g - 1.0) / ((3.0 * g - 1.0) * std::sqrt(t.m));
  CheckFeasible(t);
  t.eta_max = 1.0 / (lipschitz * std::sqrt(t.m));
  t.eta = t.eta_max;
  t.eta_min = (3.0 * g - 1.0) * kappa / (g * (2.0 * g - 1.0));
  t.eta_min_strict = true;
  // The strict lower bound is violated at equality L kappa = delta.
  if (kappa > 0.0 && !(t.eta > t.eta_min)) {
    throw InfeasibleParameters(
        "vfrbs: L*kappa equals delta, so the step interval is empty",
        t.delta / lipschitz);
  }
  t.mu = (1.0 - g) / (3.0 * g - 1.0);
  if (preset) t.sigma = VfrbsSigma(*preset, g);
  FillStepDependent(t);
  return t;
}

TheoryConstants ComputeTheory(Method method, double gamma,
                              const EstimatorConstants& consts,
                              double lipschitz, double kappa,
                              std::optional<EstimatorKind> preset) {
  return method == Method::kVfr
             ? VfrTheory(gamma, consts, lipschitz, kappa, preset)
             : VfrbsTheory(gamma, consts, lipschitz, kappa, preset);
}

TheoryConstants AtStep(const TheoryConstants& theory, double eta) {
  const bool below = theory.eta_min_strict ? !(eta > theory.eta_min)
                                           : eta < theory.eta_min;
  if (!(eta > 0.0) || below || eta > theory.eta_max * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "step " << eta << " outside the admissible range "
        << (theory.eta_min_strict ? "(" : "[") << theory.eta_min << ", "
        << theory.eta_max << "]";
    throw ConfigError(msg.str());
  }
  TheoryConstants t = theory;
  t.eta = eta;
  FillStepDependent(t);
  return t;
}

double VfrAveragedBound(const TheoryConstants& theory, double dist0_sq,
                        int k) {
  return theory.theta1 * dist0_sq / static_cast<double>(k + 1);
}

double VfrbsAveragedBound(const TheoryConstants& theory, double dist0_sq,
                          double residual0_sq, int k) {
  const double ge = theory.gamma * theory.eta;
  const double r0_sq = dist0_sq + ge * ge * residual0_sq;
  return theory.theta1 * r0_sq /
         (theory.eta * theory.eta * static_cast<double>(k + 1));
}

nlohmann::json TheoryToJson(const TheoryConstants& t) {
  auto opt = [](const std::optional<double>& v) -> nlohmann::json {
    if (v && std::isfinite(*v)) return *v;
    return nullptr;
  };
  nlohmann::json j;
  j["method"] = MethodName(t.method);
  j["gamma"] = t.gamma;
  j["L"] = t.lipschitz;
  j["kappa"] = t.kappa;
  j["rho"] = t.estimator.rho;
  j["C"] = t.estimator.c;
  j["C_hat"] = t.estimator.c_hat;
  j["Lambda"] = t.estimator.Lambda();
  j["M"] = t.m;
  j["delta"] = t.delta;
  j["max_kappa"] = t.delta / t.lipschitz;
  j["eta"] = t.eta;
  j["eta_times_L"] = t.eta * t.lipschitz;
  j["eta_max"] = t.eta_max;
  j["eta_min"] = t.eta_min;
  j["eta_min_strict"] = t.eta_min_strict;
  j["mu"] = t.mu;
  j["theta1"] = opt(t.theta1);
  j["theta2"] = opt(t.theta2);
  j["sigma"] = opt(t.sigma);
  j["Gamma"] = opt(t.big_gamma);
  return j;
}

}  // namespace vrfr
