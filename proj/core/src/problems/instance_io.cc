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

#include "vrfr/problems/instance_io.h"

#include <string>

namespace vrfr {

using nlohmann::json;

json MatrixToJson(const DenseMat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMat MatrixFromJson(const json& j) {
  if (!j.is_array()) throw ConfigError("matrix must be an array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols =
      rows == 0 ? 0 : static_cast<Eigen::Index>(j.front().size());
  DenseMat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ConfigError("matrix rows must be arrays of equal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& v = row[static_cast<size_t>(c)];
      if (!v.is_number()) throw ConfigError("matrix entries must be numbers");
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

json VectorToJson(const DenseVec& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

DenseVec VectorFromJson(const json& j) {
  if (!j.is_array()) throw ConfigError("vector must be an array");
  DenseVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ConfigError("vector entries must be numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

namespace {

json Envelope(const char* generator, int version, uint64_t seed) {
  json j;
  j["generator"] = generator;
  j["version"] = version;
  j["seed"] = seed;
  return j;
}

void CheckEnvelope(const json& j, const char* generator, int version) {
  if (!j.is_object() || !j.contains("generator") || !j.contains("version")) {
    throw ConfigError("instance file lacks generator/version fields");
  }
  if (j.at("generator") != generator) {
    throw ConfigError("expected generator '" + std::string(generator) +
                      "', found " + j.at("generator").dump());
  }
  if (j.at("version") != version) {
    throw ConfigError("unsupported " + std::string(generator) +
                      " version " + j.at("version").dump());
  }
}

json MatrixList(const std::vector<DenseMat>& ms) {
  json out = json::array();
  for (const DenseMat& m : ms) out.push_back(MatrixToJson(m));
  return out;
}

std::vector<DenseMat> MatrixListFromJson(const json& j, size_t expected) {
  if (!j.is_array() || j.size() != expected) {
    throw ConfigError("matrix list has wrong length");
  }
  std::vector<DenseMat> out;
  for (const json& m : j) out.push_back(MatrixFromJson(m));
  return out;
}

}  // namespace

json InstanceToJson(const QuadraticMinimaxInstance& inst) {
  json j = Envelope("quadratic_minimax", kQuadraticGeneratorVersion, inst.seed);
  j["params"] = {{"n", inst.n}, {"p1", inst.p1}, {"p2", inst.p2},
                 {"clip", inst.clip}};
  j["data"] = {{"A", MatrixList(inst.a)},
               {"B", MatrixList(inst.b)},
               {"L", MatrixList(inst.l)},
               {"u_offsets", MatrixToJson(inst.u_offsets)},
               {"v_offsets", MatrixToJson(inst.v_offsets)}};
  return j;
}

QuadraticMinimaxInstance QuadraticMinimaxFromJson(const json& j) {
  CheckEnvelope(j, "quadratic_minimax", kQuadraticGeneratorVersion);
  try {
    QuadraticMinimaxInstance inst;
    inst.seed = j.at("seed").get<uint64_t>();
    const json& p = j.at("params");
    inst.n = p.at("n").get<int>();
    inst.p1 = p.at("p1").get<int>();
    inst.p2 = p.at("p2").get<int>();
    inst.clip = p.at("clip").get<double>();
    const json& d = j.at("data");
    const size_t n = static_cast<size_t>(inst.n);
    inst.a = MatrixListFromJson(d.at("A"), n);
    inst.b = MatrixListFromJson(d.at("B"), n);
    inst.l = MatrixListFromJson(d.at("L"), n);
    inst.u_offsets = MatrixFromJson(d.at("u_offsets"));
    inst.v_offsets = MatrixFromJson(d.at("v_offsets"));
    if (inst.u_offsets.rows() != inst.p1 || inst.v_offsets.rows() != inst.p2 ||
        inst.u_offsets.cols() != inst.n || inst.v_offsets.cols() != inst.n) {
      throw ConfigError("quadratic_minimax: offset shapes disagree with params");
    }
    return inst;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("quadratic_minimax: ") + e.what());
  }
}

json InstanceToJson(const WganInstance& inst) {
  json j = Envelope("wgan", kWganGeneratorVersion, inst.seed);
  j["params"] = {{"n", inst.n},
                 {"p1", inst.p1},
                 {"p2", inst.p2},
                 {"coupling", CouplingModeName(inst.mode)}};
  j["data"] = {{"K", MatrixToJson(inst.coupling)},
               {"samples", MatrixToJson(inst.samples)},
               {"noise", MatrixToJson(inst.noise)},
               {"theta_star", VectorToJson(inst.theta_star)}};
  return j;
}

WganInstance WganFromJson(const json& j) {
  CheckEnvelope(j, "wgan", kWganGeneratorVersion);
  try {
    WganInstance inst;
    inst.seed = j.at("seed").get<uint64_t>();
    const json& p = j.at("params");
    inst.n = p.at("n").get<int>();
    inst.p1 = p.at("p1").get<int>();
    inst.p2 = p.at("p2").get<int>();
    inst.mode = ParseCouplingMode(p.at("coupling").get<std::string>());
    const json& d = j.at("data");
    inst.coupling = MatrixFromJson(d.at("K"));
    inst.samples = MatrixFromJson(d.at("samples"));
    inst.noise = MatrixFromJson(d.at("noise"));
    inst.theta_star = VectorFromJson(d.at("theta_star"));
    if (inst.coupling.rows() != inst.p1 || inst.coupling.cols() != inst.p2 ||
        inst.samples.cols() != inst.n || inst.noise.cols() != inst.n) {
      throw ConfigError("wgan: data shapes disagree with params");
    }
    return inst;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("wgan: ") + e.what());
  }
}

json InstanceToJson(const CoHypomonotoneInstance& inst) {
  json j = Envelope("cohypomonotone", 1, 0);
  j["params"] = {{"epsilon", inst.epsilon},
                 {"coupling", TwoByTwoCouplingName(inst.coupling)}};
  j["data"] = {{"offset", VectorToJson(inst.offset)}};
  return j;
}

CoHypomonotoneInstance CoHypomonotoneFromJson(const json& j) {
  CheckEnvelope(j, "cohypomonotone", 1);
  try {
    const json& p = j.at("params");
    return MakeCoHypomonotoneInstance(
        p.at("epsilon").get<double>(),
        ParseTwoByTwoCoupling(p.at("coupling").get<std::string>()),
        VectorFromJson(j.at("data").at("offset")));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("cohypomonotone: ") + e.what());
  }
}

}  // namespace vrfr
