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

#ifndef VRFR_TOOLS_COMMANDS_H_
#define VRFR_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>

namespace vrfr::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInfeasible = 3;

struct GenDataArgs {
  std::string problem = "quadratic";
  int n = 500;
  int p1 = 10;
  int p2 = 10;
  uint64_t seed = 0;
  double clip = -0.1;
  std::string coupling;
  double epsilon = 0.01;
  int samples = 1000;
  int features = 20;
  double density = 0.3;
  std::string out;
};

struct TheoryArgs {
  std::string method = "vfr";
  double gamma = 0.75;
  std::string estimator = "svrg";
  int n = 1;
  int b = 1;
  double p = 0.5;
  double lipschitz = 1.0;
  double kappa = 0.0;
  double eta = 0.0;  // zero: recommended step
};

struct RunArgs {
  std::string config;
  std::string algorithm;  // empty: first entry
  int64_t seed = -1;      // negative: first configured seed
  std::string out;        // empty: stdout
};

struct SweepArgs {
  std::string config;
  std::string out_dir;
  unsigned threads = 0;
};

struct VerifyArgs {
  std::string suite = "all";
  uint64_t seed = 0;
  int states = 50;
};

struct ReportArgs {
  std::string dir;
  bool json = false;
};

int GenData(const GenDataArgs& args, std::ostream& out);
int Theory(const TheoryArgs& args, std::ostream& out);
int Run(const RunArgs& args, std::ostream& out);
int Sweep(const SweepArgs& args, std::ostream& out);
int Verify(const VerifyArgs& args, std::ostream& out);
int Report(const ReportArgs& args, std::ostream& out);

}  // namespace vrfr::cli

#endif  // VRFR_TOOLS_COMMANDS_H_
