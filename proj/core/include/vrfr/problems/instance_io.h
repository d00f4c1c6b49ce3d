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

#ifndef VRFR_PROBLEMS_INSTANCE_IO_H_
#define VRFR_PROBLEMS_INSTANCE_IO_H_

#include <nlohmann/json.hpp>

#include "vrfr/core/types.h"
#include "vrfr/problems/cohypomonotone.h"
#include "vrfr/problems/quadratic_minimax.h"
#include "vrfr/problems/wgan.h"

namespace vrfr {

// Self-describing JSON containers: {"generator", "version", "seed",
// "params", "data"}. Matrices are stored row-major as nested arrays and
// doubles round-trip exactly. Readers check the generator name and version
// and throw ConfigError on mismatch or malformed content.

nlohmann::json MatrixToJson(const DenseMat& m);
DenseMat MatrixFromJson(const nlohmann::json& j);
nlohmann::json VectorToJson(const DenseVec& v);
DenseVec VectorFromJson(const nlohmann::json& j);

nlohmann::json InstanceToJson(const QuadraticMinimaxInstance& inst);
nlohmann::json InstanceToJson(const WganInstance& inst);
nlohmann::json InstanceToJson(const CoHypomonotoneInstance& inst);

QuadraticMinimaxInstance QuadraticMinimaxFromJson(const nlohmann::json& j);
WganInstance WganFromJson(const nlohmann::json& j);
CoHypomonotoneInstance CoHypomonotoneFromJson(const nlohmann::json& j);

}  // namespace vrfr

#endif  // VRFR_PROBLEMS_INSTANCE_IO_H_
