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

#include "sdubins/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sdubins {

namespace {

constexpr double kSwitchTol = 1e-8;
constexpr double kSignTol = 1e-8;
constexpr double kEqualTol = 1e-9;
// Slack for the half-turn boundary case (teardrop).
constexpr double kHalfTurnTol = 1e-6;

bool is_turn(Direction d) { return d != Direction::G; }

// Arc length of every segment start, plus the total at the back.
std::vector<double> segment_starts(const PathSpec& p) {
  std::vector<double> out{0.0};
  for (const Segment& s : p.segments()) {
    out.push_back(out.back() + segment_generator(s.dir, p.radius()).scale * s.angle);
  }
  return out;
}

// Costate at every segment start for psi = (0, b0, -1) at the first switch.
std::vector<AdjointState> switch_states(const PathSpec& p, double b0) {
  const auto& segs = p.segments();
  std::vector<AdjointState> out(segs.size());
  const AdjointState anchor{0.0, b0, -1.0};
  out[0] = adjoint_propagate(anchor, segs[0].dir, -segs[0].angle, p.radius());
  if (segs.size() > 1) out[1] = anchor;
  for (std::size_t i = 2; i < segs.size(); ++i) {
    out[i] = adjoint_propagate(out[i - 1], segs[i - 1].dir, segs[i - 1].angle, p.radius());
  }
  return out;
}

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Choose B0 so that the sign law holds at every sample, when possible.
// A(s) is affine in B0, so every sample bounds B0 from one side.
double feasible_b0(const PathSpec& p, int per_segment) {
  const auto at0 = adjoint_trajectory(p, 0.0, per_segment);
  const auto at1 = adjoint_trajectory(p, 1.0, per_segment);
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < at0.size(); ++i) {
    const double sgn = sign_of(at0[i].u_g);
    if (sgn == 0.0) continue;
    const double k = sgn * (at1[i].psi.A - at0[i].psi.A);
    const double rhs = -sgn * at0[i].psi.A;
    if (std::abs(k) < 1e-14) continue;
    if (k > 0.0) {
      hi = std::min(hi, rhs / k);
    } else {
      lo = std::max(lo, rhs / k);
    }
  }
  if (std::isinf(lo) && std::isinf(hi)) return 0.0;
  if (std::isinf(lo)) return hi - 1.0;
  if (std::isinf(hi)) return lo + 1.0;
  return 0.5 * (lo + hi);
}

}  // namespace

AdjointState adjoint_propagate(const AdjointState& psi0, Direction dir, double angle,
                               const TurnRadius& radius) {
  // exp(r Omega phi) expanded with the Euler-Rodrigues formula.
  const double r = dir == Direction::G ? 1.0 : radius.r();
  const double u = control_value(dir, radius);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double v = 1.0 - c;
  const double ru = r * u;
  const double r2u = r * ru;
  const auto& [a, b, cc] = psi0;
  return {(1.0 - r * r * v) * a + r * s * b + r2u * v * cc,
          -r * s * a + c * b + ru * s * cc,
          r2u * v * a - ru * s * b + (1.0 - ru * ru * v) * cc};
}

double hamiltonian(const AdjointState& psi, double u_g) { return 1.0 + psi.C + u_g * psi.A; }

std::vector<AdjointSample> adjoint_trajectory(const PathSpec& p, double b0, int per_segment) {
  std::vector<AdjointSample> out;
  if (p.empty()) return out;
  const auto starts = segment_starts(p);
  const auto states = switch_states(p, b0);
  const int n = std::max(per_segment, 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Segment& seg = p.segments()[i];
    const double scale = segment_generator(seg.dir, p.radius()).scale;
    const double u = control_value(seg.dir, p.radius());
    for (int j = 0; j < n; ++j) {
      const double t = seg.angle * j / (n - 1);
      out.push_back({starts[i] + scale * t, adjoint_propagate(states[i], seg.dir, t, p.radius()),
                     u, i});
    }
  }
  return out;
}

CertificateReport structural_certificate(const PathSpec& raw) {
  CertificateReport rep;
  const PathSpec p = raw.normalized();
  const auto& segs = p.segments();
  const auto starts = segment_starts(p);
  rep.degenerate = segs.size() < 2;

  for (std::size_t i = 0; i + 2 < segs.size(); ++i) {
    const bool t0 = is_turn(segs[i].dir);
    const bool t1 = is_turn(segs[i + 1].dir);
    const bool t2 = is_turn(segs[i + 2].dir);
    const double mid_len = starts[i + 2] - starts[i + 1];
    if (!t0 && t1 && !t2) rep.add({"GCG", starts[i + 1], mid_len});
    if (!t0 && t1 && t2) rep.add({"GCC", starts[i + 1], mid_len});
    if (t0 && t1 && !t2) rep.add({"CCG", starts[i + 1], mid_len});
    if (t0 && t1 && t2 && segs[i + 1].angle <= kPi - kHalfTurnTol) {
      rep.add({"CCC_MIDDLE", starts[i + 1], kPi - segs[i + 1].angle});
    }
  }
  for (std::size_t i = 0; i + 3 < segs.size(); ++i) {
    if (is_turn(segs[i].dir) && is_turn(segs[i + 1].dir) && is_turn(segs[i + 2].dir) &&
        is_turn(segs[i + 3].dir)) {
      const double diff = std::abs(segs[i + 1].angle - segs[i + 2].angle);
      if (diff > kEqualTol) rep.add({"CCCC_EQUAL", starts[i + 1], diff});
    }
  }
  if (p.radius().r() <= 0.5 && segs.size() > 3) {
    rep.add({"SEGMENT_COUNT", 0.0, static_cast<double>(segs.size())});
  }
  return rep;
}

CertificateReport pmp_certificate(const PathSpec& raw) {
  constexpr int kPerSegment = 100;
  CertificateReport rep = structural_certificate(raw);
  const PathSpec p = raw.normalized();
  const auto& segs = p.segments();
  if (segs.size() < 2) return rep;

  // Anchor the costate at the first switch. A great arc anywhere forces
  // |psi| = 1, hence B0 = 0. Otherwise the first arc bounded by two switches
  // fixes B0 through A = 0 at its far end; a single switch leaves B0 free
  // within the sign-law constraints.
  const bool has_great =
      std::any_of(segs.begin(), segs.end(), [](const Segment& s) { return !is_turn(s.dir); });
  double b0 = 0.0;
  if (!has_great) {
    bool fixed = false;
    if (segs.size() >= 3) {
      const auto a_end = [&](double b) {
        return adjoint_propagate({0.0, b, -1.0}, segs[1].dir, segs[1].angle, p.radius()).A;
      };
      const double a0 = a_end(0.0);
      const double slope = a_end(1.0) - a0;
      if (std::abs(slope) > 1e-12) {
        b0 = -a0 / slope;
        fixed = true;
      }
    }
    if (!fixed) b0 = feasible_b0(p, kPerSegment);
  }
  rep.b0 = b0;

  const auto starts = segment_starts(p);
  const auto states = switch_states(p, b0);
  for (std::size_t i = 1; i < segs.size(); ++i) {
    const AdjointState& psi = states[i];
    if (std::abs(psi.A) > kSwitchTol) rep.add({"SWITCH_A", starts[i], std::abs(psi.A)});
    if (std::abs(psi.C + 1.0) > kSwitchTol) rep.add({"SWITCH_C", starts[i], std::abs(psi.C + 1.0)});
  }

  const auto traj = adjoint_trajectory(p, b0, kPerSegment);
  std::vector<Violation> worst(segs.size());
  for (const AdjointSample& smp : traj) {
    double miss = 0.0;
    std::string rule;
    if (smp.u_g == 0.0) {
      miss = std::abs(smp.psi.A);
      rule = "GREAT_ARC_A";
    } else {
      miss = sign_of(smp.u_g) * smp.psi.A;
      rule = "SIGN";
    }
    if (miss > kSignTol && miss > worst[smp.segment].magnitude) {
      worst[smp.segment] = {rule, smp.s, miss};
    }
  }
  for (Violation& v : worst) {
    if (!v.rule.empty()) rep.add(std::move(v));
  }
  return rep;
}

}  // namespace sdubins
