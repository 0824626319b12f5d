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

// Unit-speed vehicle on the unit sphere with bounded geodesic curvature.
//
// A configuration is the rotation whose columns are the position X, the
// unit tangent T and the normal N = X x T. Along the path
//
//   X' = T,   T' = -X + u N,   N' = -u T,
//
// i.e. R' = R skew((u, 0, 1)). Constant u gives a rotation about a fixed
// body axis, so every segment is a right multiplication by exp_skew.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sdubins/so3.hpp"

namespace sdubins {

/// L turns with u = -U_max, R with u = +U_max, G follows a great circle.
enum class Direction { L, R, G };

char to_char(Direction d);
Direction direction_from_char(char c);  // throws InvalidPath

/// Radius r of the tightest small circle, r = 1 / sqrt(1 + U_max^2).
class TurnRadius {
 public:
  /// Throws DomainError unless 0 < r < 1.
  explicit TurnRadius(double r);
  static TurnRadius from_u_max(double u_max);

  double r() const { return r_; }
  double u_max() const { return std::sqrt(1.0 - r_ * r_) / r_; }
  double kx() const { return std::sqrt(1.0 - r_ * r_); }
  double kz() const { return r_; }

 private:
  double r_;
};

struct Segment {
  Direction dir = Direction::G;
  double angle = 0.0;  // radians, arc angle about the segment's own center
};

/// Ordered arcs traversed from a start configuration.
class PathSpec {
 public:
  /// Angles are wrapped into [0, 2 pi). Throws InvalidPath on two
  /// consecutive G segments.
  PathSpec(TurnRadius radius, std::vector<Segment> segments);

  const TurnRadius& radius() const { return radius_; }
  const std::vector<Segment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  std::size_t size() const { return segments_.size(); }

  /// Direction word, e.g. "LRL".
  std::string word() const;

  /// Drops arcs shorter than `zero_tol` and merges neighbours of equal
  /// direction modulo 2 pi, repeating until stable.
  PathSpec normalized(double zero_tol = 1e-12) const;

 private:
  TurnRadius radius_;
  std::vector<Segment> segments_;
};

class Config {
 public:
  Config() = default;
  explicit Config(const Rotation& rot) : rot_(rot) {}

  const Rotation& rot() const { return rot_; }
  Vec3 X() const { return rot_.col(0); }
  Vec3 T() const { return rot_.col(1); }
  Vec3 N() const { return rot_.col(2); }

 private:
  Rotation rot_;
};

/// Body-frame rotation axis of a segment and its arc length per radian.
struct Generator {
  Vec3 axis;
  double scale = 1.0;
};

Generator segment_generator(Direction dir, const TurnRadius& radius);

/// Signed geodesic curvature u_g used by a segment direction.
double control_value(Direction dir, const TurnRadius& radius);

Config propagate(const Config& c, const Segment& seg, const TurnRadius& radius);

/// Fixed-step RK4 integration of the frame equations with constant u_g.
/// Columns are re-orthonormalized once at the end. Requires step <= 1e-3.
Config ode_oracle_propagate(const Config& c, double u_g, double arclen, double step = 1e-3);

Config path_endpoint(const PathSpec& p, const Config& start = Config());

double path_length(const PathSpec& p);

struct PathSample {
  double s = 0.0;
  Vec3 x;
};

/// Positions at multiples of `ds` plus every segment boundary.
std::vector<PathSample> sample_path(const PathSpec& p, const Config& start = Config(),
                                    double ds = 0.01);

/// CSV with header `s,x,y,z`.
void write_samples_csv(std::ostream& os, const std::vector<PathSample>& samples);

}  // namespace sdubins
