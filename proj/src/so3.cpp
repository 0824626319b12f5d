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

#include "sdubins/so3.hpp"

#include <algorithm>
#include <sstream>

#include "sdubins/errors.hpp"

namespace sdubins {

namespace {

Vec3 vee_antisym(const Mat3& m) {
  // vee(m - m^T)
  return {m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1)};
}

std::string describe(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

}  // namespace

double Mat3::max_abs() const {
  double out = 0.0;
  for (double v : a) out = std::max(out, std::abs(v));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

std::ostream& operator<<(std::ostream& os, const Mat3& m) {
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? "; " : "") << m(i, 0) << ", " << m(i, 1) << ", " << m(i, 2);
  }
  return os << "]";
}

Rotation Rotation::from_matrix(const Mat3& m, double tol) {
  const double ortho = (m.transpose() * m - Mat3::identity()).max_abs();
  if (ortho > tol) throw InvalidRotation("|m^T m - I| = " + describe(ortho));
  const double det = m.det();
  if (std::abs(det - 1.0) > tol) throw InvalidRotation("det = " + describe(det));
  return Rotation(m);
}

Rotation Rotation::orthonormalized(const Mat3& m) {
  const Vec3 c0 = m.col(0).normalized();
  Vec3 c1 = m.col(1);
  c1 = (c1 - c0 * dot(c0, c1)).normalized();
  const Vec3 c2 = cross(c0, c1);
  return Rotation(Mat3::from_columns(c0, c1, c2));
}

Mat3 skew(const Vec3& v) { return Mat3{{0.0, -v.z, v.y, v.z, 0.0, -v.x, -v.y, v.x, 0.0}}; }

Vec3 axial(const Mat3& m, double tol) {
  const double asym = (m + m.transpose()).max_abs();
  if (asym > tol) throw NotSkew("|m + m^T| = " + describe(asym));
  return vee_antisym(m) * 0.5;
}

Mat3 rodrigues(const Mat3& k, double angle) {
  return Mat3::identity() + k * std::sin(angle) + (k * k) * (1.0 - std::cos(angle));
}

Rotation exp_skew(const Vec3& axial_unit, double angle, double tol) {
  const double n = axial_unit.norm();
  if (std::abs(n - 1.0) > tol) throw NotUnit("|a| = " + describe(n));
  return Rotation::trusted(rodrigues(skew(axial_unit), angle));
}

double rotation_angle_between(const Rotation& a, const Rotation& b) {
  const Mat3 m = a.matrix().transpose() * b.matrix();
  const double s = 0.5 * vee_antisym(m).norm();
  const double c = 0.5 * (m.trace() - 1.0);
  return std::atan2(s, c);
}

Vec3 log_vector(const Rotation& r) {
  const Mat3& m = r.matrix();
  const Vec3 w = vee_antisym(m);
  const double s = 0.5 * w.norm();
  const double c = 0.5 * (m.trace() - 1.0);
  const double theta = std::atan2(s, c);
  if (c >= 0.0) {
    if (s == 0.0) return {};
    return w * (0.5 * theta / s);
  }
  // Near pi the skew part vanishes; recover the axis from (m + m^T)/2 =
  // c I + (1 - c) u u^T and take the sign from the skew part.
  int k = 0;
  for (int i = 1; i < 3; ++i) {
    if (m(i, i) > m(k, k)) k = i;
  }
  const double denom = 1.0 - c;
  Vec3 u{0.5 * (m(0, k) + m(k, 0)) / denom, 0.5 * (m(1, k) + m(k, 1)) / denom,
         0.5 * (m(2, k) + m(k, 2)) / denom};
  Vec3 kth{};
  if (k == 0) kth.x = c / denom;
  if (k == 1) kth.y = c / denom;
  if (k == 2) kth.z = c / denom;
  u = (u - kth).normalized();
  if (dot(u, w) < 0.0) u = -u;
  return u * theta;
}

FixedDirections fixed_directions(const Rotation& r) {
  FixedDirections out;
  if (rotation_angle_between(r, Rotation()) < 1e-12) {
    out.all = true;
    return out;
  }
  // The rotation axis spans the null space of r - I; its rows are
  // orthogonal to it, so the best-conditioned row cross product is the axis.
  const Mat3 d = r.matrix() - Mat3::identity();
  const Vec3 rows[3] = {d.row(0), d.row(1), d.row(2)};
  Vec3 best = cross(rows[0], rows[1]);
  for (const Vec3& c : {cross(rows[0], rows[2]), cross(rows[1], rows[2])}) {
    if (c.norm() > best.norm()) best = c;
  }
  const Vec3 u = best.normalized();
  out.dirs = {u, -u};
  return out;
}

double canonical_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double circular_distance(double a, double b) {
  const double d = canonical_angle(a - b);
  return std::min(d, kTwoPi - d);
}

}  // namespace sdubins
