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

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "vrfr/core/types.h"

int main(int argc, char** argv) {
  using namespace vrfr::cli;
  CLI::App app{"Variance-reduced forward-reflected solvers: experiments and checks"};
  app.require_subcommand(1);

  GenDataArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen-data", "Write a problem instance");
  gen_cmd->add_option("--problem", gen.problem,
                      "quadratic, wgan, cohypomonotone or libsvm");
  gen_cmd->add_option("--n", gen.n, "Number of components");
  gen_cmd->add_option("--p1", gen.p1, "First block dimension");
  gen_cmd->add_option("--p2", gen.p2, "Second block dimension");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--clip", gen.clip, "Quadratic eigenvalue floor");
  gen_cmd->add_option("--coupling", gen.coupling,
                      "wgan: identity|random; cohypomonotone: symmetric|skew");
  gen_cmd->add_option("--epsilon", gen.epsilon, "Co-hypomonotone epsilon");
  gen_cmd->add_option("--samples", gen.samples, "libsvm: rows");
  gen_cmd->add_option("--features", gen.features, "libsvm: features");
  gen_cmd->add_option("--density", gen.density, "libsvm: nonzero fraction");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  TheoryArgs theory;
  CLI::App* theory_cmd =
      app.add_subcommand("theory", "Print step-size theory constants as JSON");
  theory_cmd->add_option("--method", theory.method, "vfr or vfrbs");
  theory_cmd->add_option("--gamma", theory.gamma, "Reflection weight in (1/2, 1)");
  theory_cmd->add_option("--estimator", theory.estimator, "svrg, saga or full");
  theory_cmd->add_option("--n", theory.n, "Number of components");
  theory_cmd->add_option("--b", theory.b, "Batch size");
  theory_cmd->add_option("--p", theory.p, "Snapshot probability");
  theory_cmd->add_option("--L", theory.lipschitz, "Averaged Lipschitz constant");
  theory_cmd->add_option("--kappa", theory.kappa, "Weak-Minty modulus");
  theory_cmd->add_option("--eta", theory.eta,
                         "Evaluate constants at this step instead");

  RunArgs run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one (algorithm, seed)");
  run_cmd->add_option("--config", run.config, "Experiment JSON")->required();
  run_cmd->add_option("--algorithm", run.algorithm, "Algorithm label");
  run_cmd->add_option("--seed", run.seed, "Sampling seed");
  run_cmd->add_option("--out", run.out, "CSV file (default stdout)");

  SweepArgs sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Run all algorithms and seeds of a config");
  sweep_cmd->add_option("--config", sweep.config, "Experiment JSON")->required();
  sweep_cmd->add_option("--out-dir", sweep.out_dir,
                        "Output directory (default: config, then "
                        "$VRFR_OUTPUT_DIR, then vrfr_out)");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads");

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run verification suites (JSON report)");
  verify_cmd->add_option("--suite", verify.suite,
                         "estimators, certificate or all");
  verify_cmd->add_option("--seed", verify.seed, "Random state seed");
  verify_cmd->add_option("--states", verify.states, "Random states per case");

  ReportArgs report;
  CLI::App* report_cmd =
      app.add_subcommand("report", "Summarize mean CSVs in a directory");
  report_cmd->add_option("--dir", report.dir, "Sweep output directory");
  report_cmd->add_flag("--json", report.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return GenData(gen, std::cout);
    if (*theory_cmd) return Theory(theory, std::cout);
    if (*run_cmd) return Run(run, std::cout);
    if (*sweep_cmd) return Sweep(sweep, std::cout);
    if (*verify_cmd) return Verify(verify, std::cout);
    if (*report_cmd) return Report(report, std::cout);
  } catch (const vrfr::InfeasibleParameters& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
