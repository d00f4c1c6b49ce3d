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

#ifndef VRFR_ESTIMATORS_THEORY_H_
#define VRFR_ESTIMATORS_THEORY_H_

#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "vrfr/estimators/constants.h"
#include "vrfr/estimators/estimator.h"

namespace vrfr {

// Forward-reflected method for 0 = Gx (kVfr) or forward-reflected-backward
// splitting for 0 in Gx + Tx (kVfrbs).
enum class Method { kVfr, kVfrbs };

const char* MethodName(Method method);
Method ParseMethod(std::string_view name);

// Step-size theory for one (method, gamma, estimator constants, L, kappa).
//
// Admissible steps are eta_min <= eta <= eta_max (strict lower bound for
// VFRBS); `eta` is the recommended eta_max = 1/(L sqrt(M)). theta1 is the
// averaged-residual constant at `eta`; theta2 is empty when it is infinite,
// which happens exactly at eta = eta_max. sigma and big_gamma are the
// preset lower-bound factor and complexity constant for the loopless SVRG
// and SAGA presets; empty for other estimators.
struct TheoryConstants {
  Method method = Method::kVfr;
  double gamma = 0.75;
  double lipschitz = 1.0;
  double kappa = 0.0;
  EstimatorConstants estimator;
  double m = 0.0;
  double delta = 0.0;
  double eta = 0.0;
  double eta_max = 0.0;
  double eta_min = 0.0;
  bool eta_min_strict = false;
  double mu = 0.0;
  double theta1 = 0.0;
  std::optional<double> theta2;
  std::optional<double> sigma;
  std::optional<double> big_gamma;
};

// Throws InfeasibleParameters (carrying delta / L) when L kappa > delta, and
// ConfigError for gamma outside (1/2, 1) or non-positive L or negative kappa.
// `preset` selects the sigma/Gamma formulas (kLsvrg or kSaga).
TheoryConstants VfrTheory(double gamma, const EstimatorConstants& consts,
                          double lipschitz, double kappa,
                          std::optional<EstimatorKind> preset = std::nullopt);
TheoryConstants VfrbsTheory(double gamma, const EstimatorConstants& consts,
                            double lipschitz, double kappa,
                            std::optional<EstimatorKind> preset = std::nullopt);
TheoryConstants ComputeTheory(Method method, double gamma,
                              const EstimatorConstants& consts,
                              double lipschitz, double kappa,
                              std::optional<EstimatorKind> preset = std::nullopt);

// Re-evaluates theta1/theta2 at a user-chosen step inside the admissible
// range. Throws ConfigError if eta is outside it.
TheoryConstants AtStep(const TheoryConstants& theory, double eta);

// Averaged-residual constants at an arbitrary step.
double VfrTheta1(double gamma, double lipschitz, double eta);
double VfrbsTheta1(double gamma, double eta, double kappa);

// Right-hand sides of the averaged squared residual bounds after K + 1
// iterates. For VFR: theta1 * |x0 - x*|^2 / (K + 1). For VFRBS:
// theta1 * R0^2 / (eta^2 (K + 1)) with
// R0^2 = |x0 - x*|^2 + gamma^2 eta^2 |G x0 + v0|^2.
double VfrAveragedBound(const TheoryConstants& theory, double dist0_sq, int k);
double VfrbsAveragedBound(const TheoryConstants& theory, double dist0_sq,
                          double residual0_sq, int k);

// Preset lower-bound factors: eta >= sigma sqrt(b) p / L (loopless SVRG)
// or eta >= sigma b^{3/2} / (n L) (SAGA).
double VfrSigma(EstimatorKind preset, double gamma);
double VfrBigGamma(EstimatorKind preset, double gamma);
double VfrbsSigma(EstimatorKind preset, double gamma);

nlohmann::json TheoryToJson(const TheoryConstants& theory);

}  // namespace vrfr

#endif  // VRFR_ESTIMATORS_THEORY_H_
