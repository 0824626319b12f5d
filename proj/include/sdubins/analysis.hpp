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

// Numerical checks of the LRL -> RLR perturbation argument.
//
// A short first arc is prepended to R_{pi+phi} L_{pi+phi}:
//
//   R_L(alpha) R_R(pi+phi) R_L(pi+phi)
//       = R_R(pi+phi+xi) R_L(pi+phi+eta) R_R(beta),
//
// with xi, eta, beta = a_i alpha + b_i alpha^2 / 2 + ... The LRL path is
// longer by Delta(alpha) = alpha - xi - eta - beta, and to first order the
// lengths agree (a1 + a2 + a3 = 1) so the sign of b1 + b2 + b3 decides.
//
// Everything here uses the adjoint-side generators
//
//   Omega_L = [0 r 0; -r 0 -kx; 0 kx 0],   u_L = (-kx, 0, r),
//   Omega_R = [0 r 0; -r 0  kx; 0 -kx 0],  u_R = ( kx, 0, r),
//
// with kx = sqrt(1 - r^2) and R_X(t) = exp(Omega_X t). (An equivalent set
// swaps L and R and negates both matrices.) Omega_X = skew(-u_X), so
// R_X(t) = S_X(t)^T in terms of the configuration-space turns S_X, and
// conjugating by diag(1, -1, -1) maps R_L to S_R and R_R to S_L.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "sdubins/sphere_model.hpp"

namespace sdubins {

struct LiteralGenerators {
  Mat3 omega_l;
  Mat3 omega_r;
  Vec3 u_l;
  Vec3 u_r;
};

LiteralGenerators literal_generators(double r);

struct PerturbationCoeffs {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double b12 = 0.0;   // b1 + b2
  double b3 = 0.0;
  double bsum = 0.0;  // b1 + b2 + b3
};

/// Closed-form coefficients. Requires r in (0, 1/2] and phi in (0, pi).
PerturbationCoeffs perturbation_closed(double r, double phi);

struct PerturbationSample {
  double alpha = 0.0;
  double xi = 0.0;
  double eta = 0.0;
  double beta = 0.0;
  double residual = 0.0;

  double delta() const { return alpha - xi - eta - beta; }
};

/// Solves the matching equation for (xi, eta, beta) by Newton from zero.
/// Throws SolveFailed when the residual does not drop below 1e-12.
PerturbationSample solve_perturbation(double r, double phi, double alpha);

struct PerturbationFit {
  PerturbationCoeffs coeffs;
  std::vector<PerturbationSample> samples;
};

inline constexpr double kDefaultAlphas[] = {1e-3, 2e-3, 4e-3, 8e-3};

/// Least-squares fit of alpha, alpha^2 (plus alpha^3 and alpha^4 nuisance
/// terms) through solved samples. Needs at least four distinct alphas.
PerturbationFit perturbation_numeric(double r, double phi,
                                     std::span<const double> alphas = kDefaultAlphas);

/// The two competing paths in configuration space: the perturbed LRL word
/// (mirrored to R_alpha L R) and the matching shorter-or-not L R L.
struct PerturbedPaths {
  PathSpec original;
  PathSpec competitor;
};

PerturbedPaths perturbation_paths(double r, double phi, double alpha);

struct IdentityCheck {
  std::string name;
  double closed = 0.0;
  double product = 0.0;

  double diff() const { return std::abs(closed - product); }
};

/// Every quadratic-form identity used by the perturbation argument,
/// evaluated both in closed form and as a literal matrix product.
/// Requires r in (0, 1) and phi in (0, pi).
std::vector<IdentityCheck> identity_suite(double r, double phi);

}  // namespace sdubins
