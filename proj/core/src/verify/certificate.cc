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

#include "vrfr/verify/certificate.h"

#include <Eigen/Eigenvalues>
#include <algorithm>

namespace vrfr {

namespace {

DenseVec SymmetricEigenvalues(const DenseMat& m) {
  Eigen::SelfAdjointEigenSolver<DenseMat> solver(0.5 * (m + m.transpose()),
                                                 Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("symmetric eigensolver did not converge");
  }
  return solver.eigenvalues();
}

nlohmann::json ToArray(const DenseVec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

CertificateReport WeakMintyCertificate(const DenseMat& g, const DenseMat& t,
                                       double kappa) {
  if (g.rows() != g.cols() || t.rows() != t.cols() || g.rows() != t.rows()) {
    throw DimensionError("certificate needs square G and T of equal size");
  }
  if (!(kappa >= 0.0)) throw ConfigError("kappa must be nonnegative");
  const DenseMat sum = g + t;
  const DenseMat gram = kappa * (sum.transpose() * sum);
  CertificateReport report;
  report.kappa = kappa;
  report.full_eigenvalues = SymmetricEigenvalues(sum + gram);
  report.reduced_eigenvalues = SymmetricEigenvalues(t + gram);
  report.full_min = report.full_eigenvalues.minCoeff();
  report.reduced_min = report.reduced_eigenvalues.minCoeff();
  const double scale =
      std::max(1.0, report.full_eigenvalues.cwiseAbs().maxCoeff());
  report.tolerance = 1e-12 * scale;
  report.reduction_valid =
      SymmetricEigenvalues(g).minCoeff() >= -report.tolerance;
  report.pass = report.full_min >= -report.tolerance;
  return report;
}

nlohmann::json CertificateToJson(const CertificateReport& report) {
  return {{"kappa", report.kappa},
          {"full_eigenvalues", ToArray(report.full_eigenvalues)},
          {"reduced_eigenvalues", ToArray(report.reduced_eigenvalues)},
          {"full_min", report.full_min},
          {"reduced_min", report.reduced_min},
          {"reduction_valid", report.reduction_valid},
          {"tolerance", report.tolerance},
          {"pass", report.pass}};
}

}  // namespace vrfr
