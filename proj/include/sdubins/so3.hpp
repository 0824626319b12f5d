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

// Small fixed-size linear algebra for SO(3): 3-vectors, 3x3 matrices,
// skew generators and the closed-form rotation exponential.
//
// Skew convention: skew(a) * v == cross(a, v).

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <vector>

namespace sdubins {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Structural tolerance for rotation/skew invariants.
inline constexpr double kStructTol = 1e-10;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3 normalized() const { return *this / norm(); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> a{};

  static constexpr Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
  static constexpr Mat3 zero() { return Mat3{}; }
  static constexpr Mat3 diag(double d0, double d1, double d2) {
    return Mat3{{d0, 0, 0, 0, d1, 0, 0, 0, d2}};
  }
  static constexpr Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    return Mat3{{c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z}};
  }

  constexpr double operator()(int i, int j) const { return a[3 * i + j]; }
  constexpr double& operator()(int i, int j) { return a[3 * i + j]; }

  constexpr Vec3 row(int i) const { return {a[3 * i], a[3 * i + 1], a[3 * i + 2]}; }
  constexpr Vec3 col(int j) const { return {a[j], a[3 + j], a[6 + j]}; }

  constexpr Mat3 transpose() const {
    return Mat3{{a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]}};
  }
  constexpr double trace() const { return a[0] + a[4] + a[8]; }
  double det() const { return dot(row(0), cross(row(1), row(2))); }

  constexpr Mat3 operator+(const Mat3& o) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.a[k] = a[k] + o.a[k];
    return r;
  }
  constexpr Mat3 operator-(const Mat3& o) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.a[k] = a[k] - o.a[k];
    return r;
  }
  constexpr Mat3 operator*(double s) const {
    Mat3 r;
    for (int k = 0; k < 9; ++k) r.a[k] = a[k] * s;
    return r;
  }
  constexpr Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        r.a[3 * i + j] = a[3 * i] * o.a[j] + a[3 * i + 1] * o.a[3 + j] + a[3 * i + 2] * o.a[6 + j];
      }
    }
    return r;
  }
  constexpr Vec3 operator*(const Vec3& v) const {
    return {a[0] * v.x + a[1] * v.y + a[2] * v.z, a[3] * v.x + a[4] * v.y + a[5] * v.z,
            a[6] * v.x + a[7] * v.y + a[8] * v.z};
  }

  /// Largest absolute entry.
  double max_abs() const;
};

constexpr Mat3 operator*(double s, const Mat3& m) { return m * s; }

/// Quadratic form u^T M v.
constexpr double sandwich(const Vec3& u, const Mat3& m, const Vec3& v) { return dot(u, m * v); }

std::ostream& operator<<(std::ostream& os, const Vec3& v);
std::ostream& operator<<(std::ostream& os, const Mat3& m);

/// Proper orthogonal 3x3 matrix. Construction validates; products of valid
/// rotations are trusted and never re-orthonormalized.
class Rotation {
 public:
  Rotation() : m_(Mat3::identity()) {}

  /// Throws InvalidRotation when m^T m != I or det(m) != 1 beyond `tol`.
  static Rotation from_matrix(const Mat3& m, double tol = kStructTol);

  /// Gram-Schmidt on the columns of `m`, for inputs that are only
  /// approximately orthonormal (user input, ODE integration).
  static Rotation orthonormalized(const Mat3& m);

  /// Wraps `m` without validation. Use only for products of rotations.
  static Rotation trusted(const Mat3& m) { return Rotation(m); }

  const Mat3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  Vec3 col(int j) const { return m_.col(j); }

  Rotation transpose() const { return Rotation(m_.transpose()); }
  Rotation operator*(const Rotation& o) const { return Rotation(m_ * o.m_); }
  Vec3 operator*(const Vec3& v) const { return m_ * v; }

 private:
  explicit Rotation(const Mat3& m) : m_(m) {}
  Mat3 m_;
};

Mat3 skew(const Vec3& axial);

/// Inverse of skew(). Throws NotSkew if |m + m^T| exceeds `tol` entrywise.
Vec3 axial(const Mat3& m, double tol = kStructTol);

/// I + K sin(angle) + K^2 (1 - cos(angle)), valid for any K whose axial
/// vector is unit length.
Mat3 rodrigues(const Mat3& k, double angle);

/// Rotation by `angle` radians about the unit vector `axial_unit`.
/// Throws NotUnit when |axial_unit| deviates from 1 by more than `tol`.
Rotation exp_skew(const Vec3& axial_unit, double angle, double tol = kStructTol);

/// Geodesic distance on SO(3), in [0, pi].
///
/// Mathematically arccos((tr(a^T b) - 1) / 2); evaluated through atan2 of
/// the skew and trace parts so that small angles keep full precision.
double rotation_angle_between(const Rotation& a, const Rotation& b);

/// Axis-angle vector of `r` (the matrix logarithm's axial vector), with
/// angle in [0, pi].
Vec3 log_vector(const Rotation& r);

/// Directions w with r w = w.
struct FixedDirections {
  bool all = false;        // r is the identity
  std::vector<Vec3> dirs;  // {u, -u} otherwise
};

FixedDirections fixed_directions(const Rotation& r);

/// Wraps an angle into [0, 2 pi).
double canonical_angle(double angle);

/// Distance between two angles on the circle, in [0, pi].
double circular_distance(double a, double b);

}  // namespace sdubins
