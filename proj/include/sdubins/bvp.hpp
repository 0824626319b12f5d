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

// Two-point boundary value problem per candidate family: find arc angles
// whose path carries the identity configuration onto the goal rotation.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdubins/sphere_model.hpp"

namespace sdubins {

/// Direction word of a candidate path class, e.g. "LGR" or "RLRL".
class Family {
 public:
  explicit Family(std::vector<Direction> word);
  /// Throws InvalidPath on unknown letters, an empty word or "GG".
  static Family parse(std::string_view word);
  /// Zero-segment word of the trivial path.
  static Family empty_path() { return Family(); }

  const std::vector<Direction>& word() const { return word_; }
  std::string label() const;
  std::size_t segments() const { return word_.size(); }

  /// Four alternating turns. Solved with both middle arcs equal, so these
  /// have three free angles (first, shared middle, last).
  bool is_cccc() const;
  int unknowns() const { return is_cccc() ? 3 : static_cast<int>(word_.size()); }

  /// Per-segment angles from the free angles.
  std::vector<double> expand(std::span<const double> free_angles) const;

  bool operator==(const Family& o) const { return word_ == o.word_; }

 private:
  Family() = default;
  std::vector<Direction> word_;
};

/// The 17 candidate words: every word of length <= 3 allowed by the
/// optimality structure, plus LRLR and RLRL.
const std::vector<Family>& all_families();

/// Words of length <= 3 for r <= 1/2; the two CCCC words are added above.
std::vector<Family> enumerate_families(const TurnRadius& radius);

struct SolveOptions {
  /// Starts per dimension; 0 selects 16 for three unknowns and 64 below.
  int grid_pts = 0;
  double accept_tol = 1e-9;
  double min_angle = 1e-7;
  double fd_step = 1e-7;
  int max_iter = 60;
  double dedupe_tol = 1e-6;

  int grid_for(int unknowns) const;
};

struct CandidateSolution {
  Family family;
  std::vector<double> angles;  // one per segment, in (0, 2 pi)
  double residual = 0.0;       // rotation angle between endpoint and goal
  double length = 0.0;

  PathSpec path(const TurnRadius& radius) const;
};

/// Rotation angle between the endpoint of `family` with the given free
/// angles (started at the identity) and `goal`.
double residual(const Family& family, std::span<const double> free_angles, const Rotation& goal,
                const TurnRadius& radius);

/// Multi-start damped Newton over a uniform grid of start points.
/// Converged roots are deduplicated and canonicalized; roots with a
/// vanishing arc are re-solved in the shorter family they reduce to, so the
/// result may carry other family labels. Sorted by (length, angles); an
/// empty result means no root was found.
std::vector<CandidateSolution> solve_family(const Family& family, const Rotation& goal,
                                            const TurnRadius& radius,
                                            const SolveOptions& opts = {});

/// Total order used for deterministic output: length, then angles.
bool solution_less(const CandidateSolution& a, const CandidateSolution& b);

}  // namespace sdubins
