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

#include "vrfr/harness/experiment.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <thread>

#include "vrfr/core/rng.h"
#include "vrfr/problems/cohypomonotone.h"
#include "vrfr/problems/instance_io.h"
#include "vrfr/problems/libsvm.h"
#include "vrfr/problems/logistic.h"
#include "vrfr/problems/quadratic_minimax.h"
#include "vrfr/problems/wgan.h"

namespace vrfr {

using nlohmann::json;

namespace {

constexpr uint64_t kStartStream = 0x7374617274ULL;

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open instance file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("instance file '" + path + "': " + e.what());
  }
}

DenseVec StartPoint(uint64_t seed, int dim) {
  RngStream rng(seed, kStartStream);
  return rng.NormalVec(dim);
}

void AttachAffine(ProblemInstance& p, AffineOperator op) {
  auto affine = std::make_shared<const AffineOperator>(std::move(op));
  p.affine = affine;
  p.op = affine;
  p.lipschitz = *affine->KnownLipschitz();
}

}  // namespace

ProblemInstance BuildProblem(const ProblemSpec& spec) {
  ProblemInstance p;
  p.name = spec.Name();
  switch (spec.kind) {
    case ProblemKind::kQuadratic: {
      const QuadraticMinimaxInstance inst =
          spec.instance_path.empty()
              ? GenerateQuadraticMinimax(spec.n, spec.p1, spec.p2,
                                         spec.data_seed, spec.clip)
              : QuadraticMinimaxFromJson(ReadJsonFile(spec.instance_path));
      AttachAffine(p, QuadraticMinimaxOperator(inst));
      if (spec.simplex) {
        p.constraint = SimplexConstraint(inst.p1, inst.p2);
      } else {
        p.x_star = AffineRoot(*p.affine);
      }
      p.start = StartPoint(spec.data_seed, inst.dim());
      break;
    }
    case ProblemKind::kWgan: {
      const WganInstance inst =
          spec.instance_path.empty()
              ? GenerateWgan(spec.n, spec.p1, spec.p2, spec.data_seed,
                             spec.coupling)
              : WganFromJson(ReadJsonFile(spec.instance_path));
      AttachAffine(p, WganOperator(inst));
      p.x_star = WganRoot(inst);
      p.start = StartPoint(spec.data_seed, inst.dim());
      break;
    }
    case ProblemKind::kLogistic: {
      const LibsvmData data =
          spec.libsvm_path.empty()
              ? SyntheticClassificationData(spec.samples, spec.features,
                                            spec.density, spec.data_seed)
              : ParseLibsvmFile(spec.libsvm_path);
      auto inst = std::make_shared<const LogisticAmbiguousInstance>(
          GenerateLogisticAmbiguous(data, spec.ambiguity, spec.tau,
                                    spec.noise_variance, spec.data_seed,
                                    spec.max_samples));
      p.op = std::make_shared<const LogisticAmbiguousOperator>(inst);
      p.constraint = LogisticConstraint(*inst);
      p.lipschitz = LogisticLipschitzSurrogate(*inst);
      p.start = DenseVec::Zero(inst->dim());
      p.storage = inst;
      break;
    }
    case ProblemKind::kCoHypomonotone: {
      const CoHypomonotoneInstance inst =
          spec.instance_path.empty()
              ? MakeCoHypomonotoneInstance(spec.epsilon, spec.two_by_two)
              : CoHypomonotoneFromJson(ReadJsonFile(spec.instance_path));
      AttachAffine(p, CoHypomonotoneOperator(inst));
      p.constraint = CoHypomonotoneMap(inst);
      p.x_star = CoHypomonotoneRoot(inst);
      p.kappa = inst.kappa;
      p.start = StartPoint(spec.data_seed, 2);
      break;
    }
  }
  return p;
}

Trajectory RunSingle(const ProblemSpec& spec, const ProblemInstance& problem,
                     const ResolvedAlgorithm& algorithm, uint64_t seed,
                     double epochs, int64_t max_iterations) {
  SolverConfig solver = algorithm.solver;
  solver.seed = seed;
  solver.max_iterations = max_iterations > 0 ? max_iterations : 0;
  solver.max_epochs = max_iterations > 0 ? 0.0 : epochs;
  const MonotoneMap* t =
      problem.constraint ? &*problem.constraint : nullptr;
  if (solver.algorithm == Algorithm::kVfr && t != nullptr) {
    throw ConfigError(algorithm.label +
                      ": vfr solves 0 = Gx; this problem has a constraint "
                      "(use vfrbs or og)");
  }
  json provenance = {{"problem", ProblemSpecToJson(spec)},
                     {"label", algorithm.label},
                     {"lipschitz", problem.lipschitz},
                     {"solver", SolverConfigToJson(solver)}};
  SolveOptions options;
  options.x_star = problem.x_star ? &*problem.x_star : nullptr;
  options.config_json = provenance.dump();
  return Solve(*problem.op, t, problem.start, solver, options);
}

std::string DefaultOutputDir() {
  const char* env = std::getenv("VRFR_OUTPUT_DIR");
  if (env != nullptr && *env != '\0') return env;
  return "vrfr_out";
}

std::string RunFileName(const std::string& problem, const std::string& label,
                        uint64_t seed) {
  return problem + "__" + label + "__seed" + std::to_string(seed) + ".csv";
}

std::string MeanFileName(const std::string& problem,
                         const std::string& label) {
  return problem + "__" + label + "__mean.csv";
}

std::vector<SweepResult> RunSweep(const ExperimentConfig& config,
                                  const ProblemInstance& problem,
                                  const SweepOptions& options) {
  const double lipschitz = config.lipschitz.value_or(problem.lipschitz);
  const int n = problem.op->n();
  std::vector<SweepResult> results;
  for (const AlgorithmSpec& spec : config.algorithms) {
    SweepResult r;
    r.label = spec.label;
    // The theory step must respect the instance's known modulus.
    AlgorithmSpec with_kappa = spec;
    with_kappa.kappa = std::max(spec.kappa, problem.kappa);
    r.algorithm = ResolveAlgorithm(with_kappa, n, lipschitz, config.metric);
    r.runs.resize(config.seeds.size());
    results.push_back(std::move(r));
  }

  const size_t jobs = results.size() * config.seeds.size();
  unsigned threads = options.threads > 0 ? options.threads
                                         : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs)));
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t job = next++; job < jobs; job = next++) {
      SweepResult& r = results[job / config.seeds.size()];
      const size_t s = job % config.seeds.size();
      r.runs[s] = RunSingle(config.problem, problem, r.algorithm,
                            config.seeds[s], config.epochs,
                            config.max_iterations);
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned i = 0; i < threads; ++i) {
    pool.push_back(std::async(std::launch::async, worker));
  }
  for (auto& f : pool) f.get();

  if (!options.output_dir.empty()) {
    std::filesystem::create_directories(options.output_dir);
  }
  for (SweepResult& r : results) {
    r.mean = Aggregate(r.runs);
    if (options.output_dir.empty()) continue;
    const std::filesystem::path dir(options.output_dir);
    for (size_t s = 0; s < r.runs.size(); ++s) {
      std::ofstream out(dir / RunFileName(problem.name, r.label, config.seeds[s]));
      WriteTrajectoryCsv(r.runs[s], out);
    }
    std::ofstream out(dir / MeanFileName(problem.name, r.label));
    WriteMeanCsv(r.mean, out);
  }
  return results;
}

}  // namespace vrfr
