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

#include "sdubins/sphere_model.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "sdubins/errors.hpp"

namespace sdubins {

char to_char(Direction d) {
  switch (d) {
    case Direction::L:
      return 'L';
    case Direction::R:
      return 'R';
    case Direction::G:
      return 'G';
  }
  return '?';
}

Direction direction_from_char(char c) {
  switch (c) {
    case 'L':
      return Direction::L;
    case 'R':
      return Direction::R;
    case 'G':
      return Direction::G;
    default:
      throw InvalidPath(std::string("unknown segment direction '") + c + "'");
  }
}

TurnRadius::TurnRadius(double r) : r_(r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("turn radius must lie in (0, 1), got " + std::to_string(r));
  }
}

TurnRadius TurnRadius::from_u_max(double u_max) {
  if (!(u_max > 0.0) || !std::isfinite(u_max)) {
    throw DomainError("U_max must be positive and finite");
  }
  return TurnRadius(1.0 / std::sqrt(1.0 + u_max * u_max));
}

PathSpec::PathSpec(TurnRadius radius, std::vector<Segment> segments)
    : radius_(radius), segments_(std::move(segments)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (!std::isfinite(segments_[i].angle)) throw InvalidPath("segment angle is not finite");
    segments_[i].angle = canonical_angle(segments_[i].angle);
    if (i > 0 && segments_[i].dir == Direction::G && segments_[i - 1].dir == Direction::G) {
      throw InvalidPath("two consecutive great-circle segments at index " + std::to_string(i));
    }
  }
}

std::string PathSpec::word() const {
  std::string w;
  for (const Segment& s : segments_) w.push_back(to_char(s.dir));
  return w;
}

PathSpec PathSpec::normalized(double zero_tol) const {
  std::vector<Segment> cur = segments_;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Segment> next;
    for (const Segment& s : cur) {
      const double a = canonical_angle(s.angle);
      if (a < zero_tol || kTwoPi - a < zero_tol) {
        changed = true;
        continue;
      }
      if (!next.empty() && next.back().dir == s.dir) {
        next.back().angle = canonical_angle(next.back().angle + a);
        changed = true;
        continue;
      }
      next.push_back({s.dir, a});
    }
    cur = std::move(next);
  }
  return PathSpec(radius_, std::move(cur));
}

Generator segment_generator(Direction dir, const TurnRadius& radius) {
  // r * skew((u, 0, 1)) with u = +-U_max has axial vector (+-kx, 0, kz).
  switch (dir) {
    case Direction::L:
      return {{-radius.kx(), 0.0, radius.kz()}, radius.r()};
    case Direction::R:
      return {{radius.kx(), 0.0, radius.kz()}, radius.r()};
    case Direction::G:
      break;
  }
  return {{0.0, 0.0, 1.0}, 1.0};
}

double control_value(Direction dir, const TurnRadius& radius) {
  switch (dir) {
    case Direction::L:
      return -radius.u_max();
    case Direction::R:
      return radius.u_max();
    case Direction::G:
      break;
  }
  return 0.0;
}

Config propagate(const Config& c, const Segment& seg, const TurnRadius& radius) {
  const Generator g = segment_generator(seg.dir, radius);
  return Config(c.rot() * exp_skew(g.axis, seg.angle));
}

Config ode_oracle_propagate(const Config& c, double u_g, double arclen, double step) {
  if (!(step > 0.0 && step <= 1e-3)) throw DomainError("ODE step must lie in (0, 1e-3]");
  if (arclen < 0.0) throw DomainError("arc length must be non-negative");

  struct Frame {
    Vec3 x, t, n;
    Frame operator+(const Frame& o) const { return {x + o.x, t + o.t, n + o.n}; }
    Frame operator*(double s) const { return {x * s, t * s, n * s}; }
  };
  const auto rhs = [u_g](const Frame& f) -> Frame {
    return {f.t, -f.x + f.n * u_g, -f.t * u_g};
  };

  const auto steps = static_cast<long>(std::ceil(arclen / step));
  Frame f{c.X(), c.T(), c.N()};
  if (steps > 0) {
    const double h = arclen / static_cast<double>(steps);
    for (long i = 0; i < steps; ++i) {
      const Frame k1 = rhs(f);
      const Frame k2 = rhs(f + k1 * (0.5 * h));
      const Frame k3 = rhs(f + k2 * (0.5 * h));
      const Frame k4 = rhs(f + k3 * h);
      f = f + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    }
  }
  return Config(Rotation::orthonormalized(Mat3::from_columns(f.x, f.t, f.n)));
}

Config path_endpoint(const PathSpec& p, const Config& start) {
  Config c = start;
  for (const Segment& s : p.segments()) c = propagate(c, s, p.radius());
  return c;
}

double path_length(const PathSpec& p) {
  double len = 0.0;
  for (const Segment& s : p.segments()) len += segment_generator(s.dir, p.radius()).scale * s.angle;
  return len;
}

std::vector<PathSample> sample_path(const PathSpec& p, const Config& start, double ds) {
  if (!(ds > 0.0)) throw DomainError("sampling step must be positive");
  constexpr double kMergeTol = 1e-9;

  std::vector<PathSample> out;
  out.push_back({0.0, start.X()});
  Config seg_start = start;
  double s0 = 0.0;
  for (const Segment& seg : p.segments()) {
    const Generator g = segment_generator(seg.dir, p.radius());
    const double len = g.scale * seg.angle;
    const double s1 = s0 + len;
    auto k = static_cast<long>(std::floor(s0 / ds)) + 1;
    for (double s = static_cast<double>(k) * ds; s < s1 - kMergeTol;
         s = static_cast<double>(++k) * ds) {
      if (s <= s0 + kMergeTol) continue;
      const Config c = propagate(seg_start, {seg.dir, (s - s0) / g.scale}, p.radius());
      out.push_back({s, c.X()});
    }
    seg_start = propagate(seg_start, seg, p.radius());
    if (len > kMergeTol) out.push_back({s1, seg_start.X()});
    s0 = s1;
  }
  return out;
}

void write_samples_csv(std::ostream& os, const std::vector<PathSample>& samples) {
  os << "s,x,y,z\n";
  os << std::setprecision(12);
  for (const PathSample& p : samples) {
    os << p.s << ',' << p.x.x << ',' << p.x.y << ',' << p.x.z << '\n';
  }
}

}  // namespace sdubins
