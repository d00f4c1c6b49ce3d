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

#include "vrfr/harness/config.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "vrfr/estimators/constants.h"

namespace vrfr {

using nlohmann::json;

const char* ProblemKindName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kQuadratic:
      return "quadratic";
    case ProblemKind::kWgan:
      return "wgan";
    case ProblemKind::kLogistic:
      return "logistic";
    case ProblemKind::kCoHypomonotone:
      return "cohypomonotone";
  }
  return "?";
}

ProblemKind ParseProblemKind(std::string_view name) {
  if (name == "quadratic") return ProblemKind::kQuadratic;
  if (name == "wgan") return ProblemKind::kWgan;
  if (name == "logistic") return ProblemKind::kLogistic;
  if (name == "cohypomonotone") return ProblemKind::kCoHypomonotone;
  throw ConfigError("unknown problem kind '" + std::string(name) +
                    "' (expected quadratic, wgan, logistic or cohypomonotone)");
}

std::string ProblemSpec::Name() const {
  std::ostringstream out;
  out << ProblemKindName(kind);
  switch (kind) {
    case ProblemKind::kQuadratic:
      out << "-n" << n << (simplex ? "-simplex" : "");
      break;
    case ProblemKind::kWgan:
      out << "-n" << n << "-" << CouplingModeName(coupling);
      break;
    case ProblemKind::kLogistic:
      out << "-m" << ambiguity;
      break;
    case ProblemKind::kCoHypomonotone:
      out << "-" << TwoByTwoCouplingName(two_by_two);
      break;
  }
  return out.str();
}

const char* PresetName(Preset preset) {
  switch (preset) {
    case Preset::kNone:
      return "none";
    case Preset::kComparison:
      return "comparison";
    case Preset::kTheory:
      return "theory";
  }
  return "?";
}

Preset ParsePreset(std::string_view name) {
  if (name == "none") return Preset::kNone;
  if (name == "comparison") return Preset::kComparison;
  if (name == "theory") return Preset::kTheory;
  throw ConfigError("unknown preset '" + std::string(name) +
                    "' (expected none, comparison or theory)");
}

namespace {

// Largest b >= 1 with (scale * b)^3 <= n^2.
int CubeRootFloor(int n, int64_t scale) {
  const int64_t target = static_cast<int64_t>(n) * n;
  int64_t b = 1;
  while ((scale * (b + 1)) * (scale * (b + 1)) * (scale * (b + 1)) <= target) {
    ++b;
  }
  return static_cast<int>(b);
}

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  bool Has(const char* key) {
    seen_.insert(key);
    return j_.contains(key);
  }

  const json& Raw(const char* key) {
    seen_.insert(key);
    if (!j_.contains(key)) throw ConfigError(path_ + ": missing key '" + key + "'");
    return j_.at(key);
  }

  template <typename T>
  void Opt(const char* key, T& out) {
    if (!Has(key)) return;
    out = Get<T>(key);
  }

  template <typename T>
  T Get(const char* key) {
    const json& v = Raw(key);
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) throw ConfigError("");
      } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) throw ConfigError("");
        if constexpr (std::is_unsigned_v<T>) {
          if (v.is_number_integer() && !v.is_number_unsigned()) {
            throw ConfigError("");
          }
        }
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) throw ConfigError("");
      } else {
        if (!v.is_string()) throw ConfigError("");
      }
      return v.get<T>();
    } catch (const std::exception&) {
      throw ConfigError(path_ + "." + key + ": wrong type (" + v.dump() + ")");
    }
  }

  std::string Path(const char* key) const { return path_ + "." + key; }

  void Finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) {
        throw ConfigError(path_ + ": unknown key '" + it.key() + "'");
      }
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

ProblemSpec ParseProblem(const json& j) {
  Reader r(j, "problem");
  ProblemSpec spec;
  spec.kind = ParseProblemKind(r.Get<std::string>("kind"));
  r.Opt("data_seed", spec.data_seed);
  r.Opt("instance", spec.instance_path);
  switch (spec.kind) {
    case ProblemKind::kQuadratic:
      r.Opt("n", spec.n);
      r.Opt("p1", spec.p1);
      r.Opt("p2", spec.p2);
      r.Opt("clip", spec.clip);
      r.Opt("simplex", spec.simplex);
      break;
    case ProblemKind::kWgan:
      r.Opt("n", spec.n);
      r.Opt("p1", spec.p1);
      r.Opt("p2", spec.p2);
      if (r.Has("coupling")) {
        spec.coupling = ParseCouplingMode(r.Get<std::string>("coupling"));
      }
      break;
    case ProblemKind::kLogistic:
      r.Opt("libsvm", spec.libsvm_path);
      r.Opt("samples", spec.samples);
      r.Opt("features", spec.features);
      r.Opt("density", spec.density);
      r.Opt("ambiguity", spec.ambiguity);
      r.Opt("tau", spec.tau);
      r.Opt("noise_variance", spec.noise_variance);
      r.Opt("max_samples", spec.max_samples);
      break;
    case ProblemKind::kCoHypomonotone:
      r.Opt("epsilon", spec.epsilon);
      if (r.Has("coupling")) {
        spec.two_by_two = ParseTwoByTwoCoupling(r.Get<std::string>("coupling"));
      }
      break;
  }
  r.Finish();
  if (spec.n < 1 || spec.p1 < 1 || spec.p2 < 1) {
    throw ConfigError("problem: n, p1, p2 must be positive");
  }
  if (spec.kind == ProblemKind::kWgan &&
      spec.coupling == CouplingMode::kIdentity && spec.p1 != spec.p2) {
    throw ConfigError("problem: identity coupling needs p1 == p2");
  }
  if (spec.kind == ProblemKind::kLogistic &&
      (spec.ambiguity < 1 || spec.samples < 1 || spec.features < 1 ||
       !(spec.tau >= 0.0) || !(spec.noise_variance >= 0.0) ||
       !(spec.density > 0.0 && spec.density <= 1.0) || spec.max_samples < 0)) {
    throw ConfigError("problem: invalid logistic parameters");
  }
  if (spec.kind == ProblemKind::kCoHypomonotone && !(spec.epsilon > 0.0)) {
    throw ConfigError("problem: epsilon must be positive");
  }
  return spec;
}

}  // namespace

int TheoryBatchSize(int n) { return CubeRootFloor(n, 1); }

int ComparisonBatchSize(int n) { return CubeRootFloor(n, 2); }

double PresetSnapshotProb(int n) {
  return 1.0 / std::cbrt(static_cast<double>(n));
}

AlgorithmSpec ParseAlgorithmSpec(const json& j) {
  Reader r(j, "algorithm");
  AlgorithmSpec spec;
  spec.solver.algorithm = ParseAlgorithm(r.Get<std::string>("algorithm"));
  if (r.Has("estimator")) {
    spec.solver.estimator = ParseEstimatorKind(r.Get<std::string>("estimator"));
  } else if (spec.solver.algorithm == Algorithm::kOg) {
    spec.solver.estimator = EstimatorKind::kFullBatch;
  }
  if (spec.solver.algorithm == Algorithm::kOg &&
      spec.solver.estimator != EstimatorKind::kFullBatch) {
    throw ConfigError("algorithm: og is deterministic (estimator must be full)");
  }
  spec.label = spec.solver.algorithm == Algorithm::kOg
                   ? "og"
                   : std::string(AlgorithmName(spec.solver.algorithm)) + "-" +
                         EstimatorKindName(spec.solver.estimator);
  r.Opt("label", spec.label);
  if (spec.label.empty() ||
      spec.label.find_first_of("/\\ ") != std::string::npos) {
    throw ConfigError("algorithm.label must be a non-empty file-name token");
  }
  if (r.Has("preset")) spec.preset = ParsePreset(r.Get<std::string>("preset"));
  r.Opt("gamma", spec.solver.gamma);
  if (r.Has("eta")) {
    const json& eta = r.Raw("eta");
    if (eta.is_string()) {
      if (eta != "theory") {
        throw ConfigError("algorithm.eta: expected a number or \"theory\"");
      }
      spec.eta_theory = true;
    } else {
      spec.eta = r.Get<double>("eta");
    }
  }
  if (r.Has("eta_times_L")) spec.eta_times_l = r.Get<double>("eta_times_L");
  if (r.Has("batch_size")) spec.batch_size = r.Get<int>("batch_size");
  if (r.Has("snapshot_prob")) spec.snapshot_prob = r.Get<double>("snapshot_prob");
  r.Opt("record_every", spec.solver.record_every);
  r.Opt("kappa", spec.kappa);
  r.Opt("divergence_factor", spec.solver.divergence_factor);
  r.Finish();
  const int step_sources = static_cast<int>(spec.eta.has_value()) +
                           static_cast<int>(spec.eta_times_l.has_value()) +
                           static_cast<int>(spec.eta_theory);
  if (step_sources > 1) {
    throw ConfigError("algorithm: give at most one of eta, eta_times_L");
  }
  if ((spec.eta && !(*spec.eta > 0.0)) ||
      (spec.eta_times_l && !(*spec.eta_times_l > 0.0))) {
    throw ConfigError("algorithm: step must be positive");
  }
  if (!(spec.kappa >= 0.0)) throw ConfigError("algorithm.kappa must be >= 0");
  return spec;
}

ExperimentConfig ParseExperimentConfig(const json& j) {
  Reader r(j, "config");
  ExperimentConfig config;
  config.problem = ParseProblem(r.Raw("problem"));
  const json& algos = r.Raw("algorithms");
  if (!algos.is_array() || algos.empty()) {
    throw ConfigError("config.algorithms must be a non-empty array");
  }
  std::set<std::string> labels;
  for (const json& a : algos) {
    config.algorithms.push_back(ParseAlgorithmSpec(a));
    if (!labels.insert(config.algorithms.back().label).second) {
      throw ConfigError("duplicate algorithm label '" +
                        config.algorithms.back().label + "'");
    }
  }
  if (r.Has("seeds")) {
    const json& seeds = r.Raw("seeds");
    if (!seeds.is_array() || seeds.empty()) {
      throw ConfigError("config.seeds must be a non-empty array");
    }
    config.seeds.clear();
    std::set<uint64_t> distinct;
    for (const json& s : seeds) {
      if (!s.is_number_unsigned()) {
        throw ConfigError("config.seeds entries must be non-negative integers");
      }
      config.seeds.push_back(s.get<uint64_t>());
      if (!distinct.insert(config.seeds.back()).second) {
        throw ConfigError("config.seeds must be distinct");
      }
    }
  }
  r.Opt("epochs", config.epochs);
  r.Opt("max_iterations", config.max_iterations);
  if (r.Has("metric")) {
    const std::string metric = r.Get<std::string>("metric");
    if (metric == "operator") {
      config.metric = ResidualMetric::kOperator;
    } else if (metric == "forward_backward") {
      config.metric = ResidualMetric::kForwardBackward;
    } else {
      throw ConfigError("config.metric: expected operator or forward_backward");
    }
  }
  if (r.Has("lipschitz")) config.lipschitz = r.Get<double>("lipschitz");
  r.Opt("output_dir", config.output_dir);
  r.Finish();
  if (!(config.epochs > 0.0) && config.max_iterations <= 0) {
    throw ConfigError("config: need epochs > 0 or max_iterations > 0");
  }
  if (config.lipschitz && !(*config.lipschitz > 0.0)) {
    throw ConfigError("config.lipschitz must be positive");
  }
  return config;
}

ExperimentConfig LoadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  return ParseExperimentConfig(j);
}

json ProblemSpecToJson(const ProblemSpec& spec) {
  json j = {{"kind", ProblemKindName(spec.kind)}, {"data_seed", spec.data_seed}};
  if (!spec.instance_path.empty()) j["instance"] = spec.instance_path;
  switch (spec.kind) {
    case ProblemKind::kQuadratic:
      j.update({{"n", spec.n}, {"p1", spec.p1}, {"p2", spec.p2},
                {"clip", spec.clip}, {"simplex", spec.simplex}});
      break;
    case ProblemKind::kWgan:
      j.update({{"n", spec.n}, {"p1", spec.p1}, {"p2", spec.p2},
                {"coupling", CouplingModeName(spec.coupling)}});
      break;
    case ProblemKind::kLogistic:
      j.update({{"libsvm", spec.libsvm_path}, {"samples", spec.samples},
                {"features", spec.features}, {"density", spec.density},
                {"ambiguity", spec.ambiguity}, {"tau", spec.tau},
                {"noise_variance", spec.noise_variance},
                {"max_samples", spec.max_samples}});
      break;
    case ProblemKind::kCoHypomonotone:
      j.update({{"epsilon", spec.epsilon},
                {"coupling", TwoByTwoCouplingName(spec.two_by_two)}});
      break;
  }
  return j;
}

TheoryConstants TheoryForSolver(const SolverConfig& solver, int n,
                                double lipschitz, double kappa) {
  EstimatorConstants consts;
  std::optional<EstimatorKind> preset;
  switch (solver.estimator) {
    case EstimatorKind::kFullBatch:
      consts = FullBatchConstants();
      break;
    case EstimatorKind::kLsvrg:
      consts = LsvrgConstants(solver.gamma, solver.batch_size,
                              solver.snapshot_prob);
      preset = EstimatorKind::kLsvrg;
      break;
    case EstimatorKind::kSaga:
      consts = SagaConstants(solver.gamma, n, solver.batch_size);
      preset = EstimatorKind::kSaga;
      break;
    case EstimatorKind::kSvrgDoubleLoop:
      throw ConfigError(
          "no step-size theory for the double-loop estimator; give eta");
  }
  const Method method =
      solver.algorithm == Algorithm::kVfrbs ? Method::kVfrbs : Method::kVfr;
  return ComputeTheory(method, solver.gamma, consts, lipschitz, kappa, preset);
}

ResolvedAlgorithm ResolveAlgorithm(const AlgorithmSpec& spec, int n,
                                   double lipschitz, ResidualMetric metric) {
  if (!(lipschitz > 0.0)) throw ConfigError("Lipschitz constant must be > 0");
  ResolvedAlgorithm out;
  out.label = spec.label;
  out.solver = spec.solver;
  out.solver.metric = metric;
  SolverConfig& s = out.solver;
  const bool og = s.algorithm == Algorithm::kOg;
  const bool stochastic = s.estimator != EstimatorKind::kFullBatch;

  int batch = 1;
  double prob = 0.5;
  switch (spec.preset) {
    case Preset::kNone:
      break;
    case Preset::kComparison:
      batch = ComparisonBatchSize(n);
      prob = PresetSnapshotProb(n);
      break;
    case Preset::kTheory:
      batch = TheoryBatchSize(n);
      prob = PresetSnapshotProb(n);
      break;
  }
  s.batch_size = stochastic ? std::min(n, spec.batch_size.value_or(batch)) : n;
  s.snapshot_prob = spec.snapshot_prob.value_or(prob);
  if (s.snapshot_prob >= 1.0 && s.estimator == EstimatorKind::kLsvrg) {
    throw ConfigError(spec.label + ": snapshot_prob must be below 1");
  }

  const bool want_theory =
      spec.eta_theory ||
      (!spec.eta && !spec.eta_times_l && spec.preset == Preset::kTheory && !og);
  if (want_theory) {
    if (og) throw ConfigError(spec.label + ": OG has no step-size theory");
    out.theory = TheoryForSolver(s, n, lipschitz, spec.kappa);
    s.eta = out.theory->eta;
  } else if (spec.eta) {
    s.eta = *spec.eta;
  } else if (spec.eta_times_l) {
    s.eta = *spec.eta_times_l / lipschitz;
  } else if (spec.preset == Preset::kComparison || og) {
    s.eta = (og ? 1.0 : 0.5) / lipschitz;
  } else {
    throw ConfigError(spec.label + ": no step size (give eta or a preset)");
  }
  // The budget is set per run; validate everything else here.
  SolverConfig probe = s;
  probe.max_iterations = 1;
  ValidateSolverConfig(probe, n);
  return out;
}

json SolverConfigToJson(const SolverConfig& c) {
  return {{"algorithm", AlgorithmName(c.algorithm)},
          {"estimator", EstimatorKindName(c.estimator)},
          {"gamma", c.gamma},
          {"eta", c.eta},
          {"batch_size", c.batch_size},
          {"snapshot_prob", c.snapshot_prob},
          {"max_iterations", c.max_iterations},
          {"max_epochs", c.max_epochs},
          {"seed", c.seed},
          {"record_every", c.record_every},
          {"metric", c.metric == ResidualMetric::kOperator ? "operator"
                                                            : "forward_backward"},
          {"divergence_factor", c.divergence_factor}};
}

}  // namespace vrfr
