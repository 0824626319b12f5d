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

#include "sdubins/analysis.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "sdubins/errors.hpp"

namespace sdubins {

namespace {

constexpr double kPerturbTol = 1e-12;

void check_open_unit(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("r must lie in (0, 1)");
}

void check_phi(double phi) {
  if (!(phi > 0.0 && phi < kPi)) throw DomainError("phi must lie in (0, pi)");
}

// Both sides of the matching equation.
struct Matching {
  Mat3 omega_l, omega_r;
  double phi;
  Mat3 lhs;

  Matching(double r, double phi_, double alpha) : phi(phi_) {
    const LiteralGenerators g = literal_generators(r);
    omega_l = g.omega_l;
    omega_r = g.omega_r;
    lhs = rodrigues(omega_l, alpha) * rodrigues(omega_r, kPi + phi) * rodrigues(omega_l, kPi + phi);
  }

  Vec3 residual(const std::array<double, 3>& x) const {
    const Mat3 rhs = rodrigues(omega_r, kPi + phi + x[0]) * rodrigues(omega_l, kPi + phi + x[1]) *
                     rodrigues(omega_r, x[2]);
    return log_vector(Rotation::trusted(rhs.transpose() * lhs));
  }
};

// Gaussian elimination with partial pivoting; `m` is the augmented n x (n+1) system.
template <std::size_t N>
std::array<double, N> solve_dense(std::array<std::array<double, N + 1>, N> m) {
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < N; ++i) {
      if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
    }
    std::swap(m[c], m[p]);
    if (m[c][c] == 0.0) throw SolveFailed("singular system");
    for (std::size_t i = c + 1; i < N; ++i) {
      const double f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= N; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::array<double, N> x{};
  for (std::size_t i = N; i-- > 0;) {
    double s = m[i][N];
    for (std::size_t j = i + 1; j < N; ++j) s -= m[i][j] * x[j];
    x[i] = s / m[i][i];
  }
  return x;
}

}  // namespace

LiteralGenerators literal_generators(double r) {
  check_open_unit(r);
  const double kx = std::sqrt(1.0 - r * r);
  LiteralGenerators g;
  g.omega_l = Mat3{{0.0, r, 0.0, -r, 0.0, -kx, 0.0, kx, 0.0}};
  g.omega_r = Mat3{{0.0, r, 0.0, -r, 0.0, kx, 0.0, -kx, 0.0}};
  g.u_l = {-kx, 0.0, r};
  g.u_r = {kx, 0.0, r};
  return g;
}

PerturbationCoeffs perturbation_closed(double r, double phi) {
  if (!(r > 0.0 && r <= 0.5)) throw DomainError("closed-form coefficients need r in (0, 1/2]");
  check_phi(phi);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  PerturbationCoeffs k;
  k.a2 = 1.0 - 2.0 * r * r * (1.0 + c);
  k.a1 = -k.a2;
  k.a3 = 1.0;
  k.b12 = 2.0 * k.a1 * (1.0 + (1.0 - 2.0 * r * r) * (1.0 + c)) / s;
  k.b3 = 2.0 * k.a1 * c / s;
  k.bsum = 4.0 * k.a1 * (1.0 + c) * (1.0 - r * r) / s;
  return k;
}

PerturbationSample solve_perturbation(double r, double phi, double alpha) {
  check_open_unit(r);
  check_phi(phi);
  constexpr double kStep = 1e-7;
  constexpr int kMaxIter = 60;
  const Matching eq(r, phi, alpha);

  std::array<double, 3> x{0.0, 0.0, 0.0};
  Vec3 f = eq.residual(x);
  double nf = f.norm();
  for (int it = 0; it < kMaxIter && nf > 1e-16; ++it) {
    std::array<Vec3, 3> jac;
    for (int j = 0; j < 3; ++j) {
      auto xp = x;
      xp[j] += kStep;
      jac[j] = (eq.residual(xp) - f) / kStep;
    }
    std::array<std::array<double, 4>, 3> sys{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) sys[i][j] = jac[j][i];
      sys[i][3] = -f[i];
    }
    const auto step = solve_dense<3>(sys);
    double lambda = 1.0;
    bool improved = false;
    for (int h = 0; h < 20 && !improved; ++h, lambda *= 0.5) {
      auto xt = x;
      for (int j = 0; j < 3; ++j) xt[j] += lambda * step[j];
      const Vec3 ft = eq.residual(xt);
      if (ft.norm() < nf) {
        x = xt;
        f = ft;
        nf = ft.norm();
        improved = true;
      }
    }
    if (!improved) break;
  }
  if (!(nf < kPerturbTol)) {
    throw SolveFailed("perturbation solve stalled at residual " + std::to_string(nf));
  }
  return {alpha, x[0], x[1], x[2], nf};
}

PerturbationFit perturbation_numeric(double r, double phi, std::span<const double> alphas) {
  if (alphas.size() < 4) throw DomainError("need at least four alpha values");
  PerturbationFit fit;
  double scale = 0.0;
  for (double a : alphas) {
    if (!(a > 0.0)) throw DomainError("alpha values must be positive");
    fit.samples.push_back(solve_perturbation(r, phi, a));
    scale = std::max(scale, a);
  }

  // Least squares on y = c1 t + ... + c4 t^4 in t = alpha / scale; the cubic
  // and quartic terms only soak up truncation error.
  constexpr std::size_t kTerms = 4;
  std::array<double, kTerms> coef[3];
  for (int which = 0; which < 3; ++which) {
    std::array<std::array<double, kTerms + 1>, kTerms> normal{};
    for (const PerturbationSample& smp : fit.samples) {
      const double t = smp.alpha / scale;
      std::array<double, kTerms> basis{};
      double tk = 1.0;
      for (double& b : basis) b = tk *= t;
      const double y = which == 0 ? smp.xi : (which == 1 ? smp.eta : smp.beta);
      for (std::size_t i = 0; i < kTerms; ++i) {
        for (std::size_t j = 0; j < kTerms; ++j) normal[i][j] += basis[i] * basis[j];
        normal[i][kTerms] += basis[i] * y;
      }
    }
    coef[which] = solve_dense<kTerms>(normal);
  }
  const auto a_of = [&](int w) { return coef[w][0] / scale; };
  const auto b_of = [&](int w) { return 2.0 * coef[w][1] / (scale * scale); };
  fit.coeffs.a1 = a_of(0);
  fit.coeffs.a2 = a_of(1);
  fit.coeffs.a3 = a_of(2);
  fit.coeffs.b12 = b_of(0) + b_of(1);
  fit.coeffs.b3 = b_of(2);
  fit.coeffs.bsum = fit.coeffs.b12 + fit.coeffs.b3;
  return fit;
}

PerturbedPaths perturbation_paths(double r, double phi, double alpha) {
  const PerturbationSample smp = solve_perturbation(r, phi, alpha);
  const TurnRadius radius(r);
  const double big = kPi + phi;
  // Conjugation by diag(1, -1, -1) swaps the roles of L and R.
  return {PathSpec(radius, {{Direction::R, alpha}, {Direction::L, big}, {Direction::R, big}}),
          PathSpec(radius, {{Direction::L, big + smp.xi},
                            {Direction::R, big + smp.eta},
                            {Direction::L, smp.beta}})};
}

std::vector<IdentityCheck> identity_suite(double r, double phi) {
  check_open_unit(r);
  check_phi(phi);
  const LiteralGenerators g = literal_generators(r);
  const Mat3& ol = g.omega_l;
  const Mat3& orr = g.omega_r;
  const Vec3& ul = g.u_l;
  const Vec3& ur = g.u_r;
  const Vec3 e2{0.0, 1.0, 0.0};
  const Mat3 rr = rodrigues(orr, kPi + phi);
  const Mat3 rl = rodrigues(ol, kPi + phi);
  const Mat3 rrl = rr * rl;

  const double r2 = r * r;
  const double k = 4.0 * r2 * (1.0 - r2);
  const double kx = std::sqrt(1.0 - r2);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double a1 = -(1.0 - 2.0 * r2 * (1.0 + c));

  std::vector<IdentityCheck> out = {
      {"Omega_L u_R . e2", -2.0 * r * kx, dot(e2, ol * ur)},
      {"Omega_R u_L . e2", 2.0 * r * kx, dot(e2, orr * ul)},
      {"C1 e2' Omega_L^2 e2", -1.0, sandwich(e2, ol * ol, e2)},
      {"C1 e2' Omega_R^2 e2", -1.0, sandwich(e2, orr * orr, e2)},
      {"C1 e2' Omega_R Omega_L e2", 1.0 - 2.0 * r2, sandwich(e2, orr * ol, e2)},
      {"C1 e2' Omega_L Omega_R e2", 1.0 - 2.0 * r2, sandwich(e2, ol * orr, e2)},
      {"C1 e2' Omega_R^2 Omega_L e2", 0.0, sandwich(e2, orr * orr * ol, e2)},
      {"C1 e2' Omega_L^2 Omega_R e2", 0.0, sandwich(e2, ol * ol * orr, e2)},
      {"C2 A100LR", k * s * (c + (2.0 * r2 - 1.0) * (1.0 + c)), sandwich(ul, orr * rrl, ur)},
      {"C2 A010LR", k * s * (c + (2.0 * r2 - 1.0) * (1.0 + c)), sandwich(ul, rrl * ol, ur)},
      {"C2 A100LR (a1 form)", k * a1 * s, sandwich(ul, orr * rrl, ur)},
      {"C3 A000RL", -k * s, sandwich(ur, ol * rr, ul)},
      {"C3 A001RL", -k * s, sandwich(ur, rl * orr, ul)},
      {"C4 A000RR", k * s * (1.0 - 2.0 * r2 * (1.0 + c)), sandwich(ur, ol * rrl, ur)},
      {"C4 A010RR", k * s, sandwich(ur, rl * ol, ur)},
      {"C5 A200LR", -k * (1.0 - c * c + (1.0 - 2.0 * r2) * c * (1.0 + c)),
       sandwich(ul, orr * orr * rrl, ur)},
      {"C5 A110LR", k * (c * c + (1.0 - 2.0 * r2) * (1.0 - c * c)), sandwich(ul, orr * rrl * ol, ur)},
      {"C5 A020LR", -k * (1.0 - c * c + (1.0 - 2.0 * r2) * c * (1.0 + c)),
       sandwich(ul, rrl * ol * ol, ur)},
      {"C6 B000RL", k * (1.0 - 2.0 * r2) * (1.0 + c), sandwich(ur, ol * ol * rrl, ul)},
      {"C6 A011RL", -k * c, sandwich(ur, rrl * ol * orr, ul)},
      {"C6 A002RL", k * (1.0 - 2.0 * r2) * (1.0 + c), sandwich(ur, rl * orr * orr, ul)},
  };
  return out;
}

}  // namespace sdubins
