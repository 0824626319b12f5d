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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdubins/bvp.hpp"

namespace sdubins {

struct PlannedCandidate {
  CandidateSolution solution;
  bool admissible = true;  // passes the structural necessary conditions
};

struct PlanResult {
  /// Shortest admissible candidate. Holds an empty angle list for a goal at
  /// the start configuration.
  std::optional<CandidateSolution> best;
  std::vector<PlannedCandidate> candidates;  // every root found, sorted
  bool certified = false;
  std::vector<std::string> warnings;

  /// Direction word of `best`, "" for the empty path.
  std::string best_word() const;
};

/// Shortest path from the identity configuration to `goal`.
/// Throws NoPathFound when no family has a root.
PlanResult plan(const Rotation& goal, const TurnRadius& radius, const SolveOptions& opts = {});

/// Word of the shortest path. Propagates NoPathFound.
std::string classify(const Rotation& goal, const TurnRadius& radius,
                     const SolveOptions& opts = {});

}  // namespace sdubins
