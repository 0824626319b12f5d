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

// Minimum-principle machinery for the length-optimal problem.
//
// The costate is reduced to the scalars (A, B, C) with
//
//   A' = B,   B' = -A + u C,   C' = -u B,   H = 1 + C + u A,
//
// and u minimizing H (u = -U_max when A > 0, +U_max when A < 0, and
// u = 0 only where A vanishes identically). At every switch A = 0 and
// C = -1, so the whole trajectory is fixed by the single scalar B0 = B
// at the first switch.

#pragma once

#include <string>
#include <vector>

#include "sdubins/sphere_model.hpp"

namespace sdubins {

struct AdjointState {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;

  double norm() const { return std::sqrt(A * A + B * B + C * C); }
};

/// Closed-form flow of the costate across one segment of arc angle `angle`
/// (negative angles run backwards). Great-circle segments use the u = 0
/// generator with unit radius.
AdjointState adjoint_propagate(const AdjointState& psi0, Direction dir, double angle,
                               const TurnRadius& radius);

double hamiltonian(const AdjointState& psi, double u_g);

struct Violation {
  std::string rule;
  double s = 0.0;          // arc length where the violation was detected
  double magnitude = 0.0;  // how far the condition is missed
};

struct CertificateReport {
  bool pass = true;
  std::vector<Violation> violations;
  bool degenerate = false;  // fewer than two segments, no switch to anchor on
  double b0 = 0.0;          // B at the first switch of the costate used

  void add(Violation v) {
    violations.push_back(std::move(v));
    pass = false;
  }
};

struct AdjointSample {
  double s = 0.0;
  AdjointState psi;
  double u_g = 0.0;
  std::size_t segment = 0;
};

/// Costate along `p` with psi = (0, b0, -1) at the first switch, sampled at
/// `per_segment` evenly spaced points (ends included) of every segment.
std::vector<AdjointSample> adjoint_trajectory(const PathSpec& p, double b0,
                                              int per_segment = 100);

/// Word-level necessary conditions only: no GCG/GCC/CCG, middle arcs of CCC
/// longer than a half turn, equal middle arcs in CCCC, and at most three
/// segments when r <= 1/2.
CertificateReport structural_certificate(const PathSpec& p);

/// Structural conditions plus a costate check: the switch conditions
/// A = 0, C = -1 at every switch and the sign law U A <= 0 inside each turn.
/// Passing is necessary, not sufficient, for optimality.
CertificateReport pmp_certificate(const PathSpec& p);

}  // namespace sdubins
