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

#include "sdubins/planner.hpp"

#include <algorithm>
#include <cmath>

#include "sdubins/adjoint.hpp"
#include "sdubins/errors.hpp"

namespace sdubins {

namespace {

constexpr double kIdentityTol = 1e-9;
constexpr double kTieTol = 1e-9;

bool same_solution(const CandidateSolution& a, const CandidateSolution& b, double tol) {
  if (!(a.family == b.family)) return false;
  for (std::size_t i = 0; i < a.angles.size(); ++i) {
    if (circular_distance(a.angles[i], b.angles[i]) >= tol) return false;
  }
  return true;
}

// Shorter wins; within kTieTol fewer segments, then the smaller word.
bool preferred(const CandidateSolution& c, const CandidateSolution& best) {
  if (c.length < best.length - kTieTol) return true;
  if (c.length > best.length + kTieTol) return false;
  if (c.family.segments() != best.family.segments()) {
    return c.family.segments() < best.family.segments();
  }
  return c.family.label() < best.family.label();
}

}  // namespace

std::string PlanResult::best_word() const { return best ? best->family.label() : std::string(); }

PlanResult plan(const Rotation& goal, const TurnRadius& radius, const SolveOptions& opts) {
  PlanResult out;
  if (radius.r() > 0.5) {
    out.warnings.push_back(
        "r > 1/2: the at-most-three-segment characterization does not apply; the best path "
        "found over the extended family set is not guaranteed optimal");
  }
  if (rotation_angle_between(Rotation(), goal) < kIdentityTol) {
    out.best = CandidateSolution{Family::empty_path(), {}, 0.0, 0.0};
    out.certified = true;
    return out;
  }

  std::vector<CandidateSolution> all;
  for (const Family& f : enumerate_families(radius)) {
    for (CandidateSolution& c : solve_family(f, goal, radius, opts)) {
      const bool dup = std::any_of(all.begin(), all.end(), [&](const CandidateSolution& o) {
        return same_solution(o, c, opts.dedupe_tol);
      });
      if (!dup) all.push_back(std::move(c));
    }
  }
  if (all.empty()) throw NoPathFound();
  std::sort(all.begin(), all.end(), solution_less);

  for (CandidateSolution& c : all) {
    const bool ok = structural_certificate(c.path(radius)).pass;
    if (ok && (!out.best || preferred(c, *out.best))) out.best = c;
    out.candidates.push_back({std::move(c), ok});
  }
  if (!out.best) {
    out.warnings.push_back("every candidate violates a structural necessary condition");
    return out;
  }
  out.certified = radius.r() <= 0.5 && pmp_certificate(out.best->path(radius)).pass;
  return out;
}

std::string classify(const Rotation& goal, const TurnRadius& radius, const SolveOptions& opts) {
  const PlanResult res = plan(goal, radius, opts);
  if (!res.best) throw NoPathFound();
  return res.best_word();
}

}  // namespace sdubins
