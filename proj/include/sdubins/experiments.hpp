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

// Batch experiments: the (r, phi) classification sweep and the existence
// study on the reversal goal.

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdubins/bvp.hpp"

namespace sdubins {

/// Goals are the endpoints of L_alpha R_{pi+phi} L_{pi+phi}; degrees here.
struct SweepConfig {
  double alpha_deg = 1.0;
  double phi_start_deg = 2.0;
  double phi_end_deg = 178.0;
  double phi_step_deg = 2.0;
  double r_start = 0.01;
  double r_end = 0.99;
  double r_step = 0.01;

  /// Throws DomainError on non-positive steps or empty ranges.
  void validate() const;
  std::vector<double> phi_values_deg() const;
  std::vector<double> r_values() const;
};

struct SweepRow {
  double r = 0.0;
  double phi_deg = 0.0;
  std::string best_family;    // "NONE" when no family has a root
  double best_length = 0.0;   // NaN for NONE
  std::string second_family;  // best of a different word, "" if none
  double second_length = 0.0; // NaN when second_family is empty

  bool operator==(const SweepRow&) const = default;
};

Rotation sweep_goal(double r, double phi_deg, double alpha_deg);

/// One grid point: plan on the sweep goal and record winner and runner-up.
SweepRow sweep_point(double r, double phi_deg, double alpha_deg, const SolveOptions& opts = {});

struct SweepOptions {
  SolveOptions solve;
  unsigned threads = 1;  // 0 picks the hardware concurrency
  std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Rows in (r, phi) lexicographic order whatever the thread count.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const SweepOptions& opts = {});

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(std::istream& is);

/// Writes the CSV to `destination`. Throws IOError naming it on failure.
void emit_csv(const std::vector<SweepRow>& rows, const std::string& destination);
std::vector<SweepRow> read_csv(const std::string& source);

enum class FamilyClass { CGC, CCC };

std::string to_string(FamilyClass c);
std::span<const char* const> class_words(FamilyClass c);

/// diag(1, -1, -1): back at the start point, heading reversed.
Rotation reversal_goal();

struct ExistenceRow {
  double r = 0.0;
  FamilyClass family_class = FamilyClass::CGC;
  bool exists = false;
  double min_length = 0.0;  // NaN when !exists
  std::optional<CandidateSolution> shortest;
};

/// Shortest root of any word of the class. Roots that reduce to a shorter
/// word do not count.
std::optional<CandidateSolution> class_solution(FamilyClass c, const Rotation& goal,
                                                const TurnRadius& radius,
                                                const SolveOptions& opts = {});

/// Per r, one row per class (CGC then CCC).
std::vector<ExistenceRow> existence_study(std::span<const double> r_grid,
                                          const Rotation& goal = reversal_goal(),
                                          const SolveOptions& opts = {});

/// Bisection for the r where the class stops having roots. Requires a root
/// at `lo` and none at `hi`; returns the midpoint of the final bracket.
double existence_threshold(FamilyClass c, double lo, double hi, const Rotation& goal,
                           double tol = 1e-3, const SolveOptions& opts = {});

}  // namespace sdubins
