// Copyright 2026 The spherical_dubins Authors
//
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

// JSON forms of the public result types.
//
//   path:         {"r": 0.4, "segments": [{"dir": "L", "angle": 1.2}, ...]}
//   certificate:  {"pass": false, "degenerate": false, "b0": 0.1,
//                  "violations": [{"rule": "SIGN", "s": 0.3, "magnitude": 1e-3}]}

#pragma once

#include <json.hpp>

#include "sdubins/adjoint.hpp"
#include "sdubins/analysis.hpp"
#include "sdubins/experiments.hpp"
#include "sdubins/planner.hpp"

namespace sdubins {

nlohmann::json to_json(const PathSpec& p);
/// Throws InvalidPath on a malformed document, DomainError on a bad r.
PathSpec path_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CertificateReport& rep);
nlohmann::json to_json(const CandidateSolution& c, const TurnRadius& radius);
nlohmann::json to_json(const PlanResult& res, const TurnRadius& radius);
nlohmann::json to_json(const PerturbationCoeffs& k);
nlohmann::json to_json(const SweepRow& row);
nlohmann::json to_json(const ExistenceRow& row);

}  // namespace sdubins
