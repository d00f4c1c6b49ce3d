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

#ifndef VRFR_CORE_TYPES_H_
#define VRFR_CORE_TYPES_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vrfr {

// Dense 64-bit vectors and matrices. Every iterate, operator value and
// estimator output in the library is a DenseVec.
using DenseVec = Eigen::VectorXd;
using DenseMat = Eigen::MatrixXd;

// Invalid user-facing configuration (batch sizes, probabilities, presets).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands whose dimensions do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failure: non-convergence, singular systems, non-finite data.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterate became non-finite or the residual left the divergence guard.
class DivergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

// The assumed nonmonotonicity level is too large for the requested scheme.
// `max_kappa` is the largest admissible value for the given constants.
class InfeasibleParameters : public std::domain_error {
 public:
  InfeasibleParameters(const std::string& what, double max_kappa)
      : std::domain_error(what), max_kappa_(max_kappa) {}
  double max_kappa() const { return max_kappa_; }

 private:
  double max_kappa_;
};

// Malformed external input. `line` is 1-based, or 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                          what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Checked vector helpers. All throw DimensionError on mismatched sizes.
void CheckSameDim(const DenseVec& a, const DenseVec& b, const char* context);
double Dot(const DenseVec& a, const DenseVec& b);
double Norm(const DenseVec& a);
// Returns alpha * x + y.
DenseVec Axpy(double alpha, const DenseVec& x, const DenseVec& y);
DenseVec Scale(double alpha, const DenseVec& x);

// Builds a vector from external values; rejects NaN and infinities.
DenseVec VecFromValues(std::span<const double> values);
// Throws NumericError if any entry of `v` is not finite.
void CheckFinite(const DenseVec& v, const char* context);

}  // namespace vrfr

#endif  // VRFR_CORE_TYPES_H_
