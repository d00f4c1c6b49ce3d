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

#ifndef VRFR_VERIFY_CERTIFICATE_H_
#define VRFR_VERIFY_CERTIFICATE_H_

#include <nlohmann/json.hpp>

#include "vrfr/core/types.h"

namespace vrfr {

struct CertificateReport {
  double kappa = 0.0;
  // Eigenvalues (ascending) of S = 1/2(G + G' + T + T') + kappa (G+T)'(G+T).
  DenseVec full_eigenvalues;
  // Eigenvalues of the reduced form 1/2(T + T') + kappa (G+T)'(G+T).
  DenseVec reduced_eigenvalues;
  double full_min = 0.0;
  double reduced_min = 0.0;
  // The reduced form implies the full one only when 1/2(G + G') is PSD.
  bool reduction_valid = false;
  double tolerance = 0.0;
  // full_min >= -tolerance: G + T is kappa-co-hypomonotone.
  bool pass = false;
};

// Tolerance is 1e-12 scaled by the largest eigenvalue magnitude.
CertificateReport WeakMintyCertificate(const DenseMat& g, const DenseMat& t,
                                       double kappa);

nlohmann::json CertificateToJson(const CertificateReport& report);

}  // namespace vrfr

#endif  // VRFR_VERIFY_CERTIFICATE_H_
