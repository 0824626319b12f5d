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

// Shared helpers for the test suites: seeded generators and oracles that
// do not go through the library's own formulas.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "sdubins/sphere_model.hpp"

namespace sdubins::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Vec3 unit_vector() {
    std::normal_distribution<double> n;
    Vec3 v{n(gen_), n(gen_), n(gen_)};
    while (v.norm() < 1e-6) v = {n(gen_), n(gen_), n(gen_)};
    return v.normalized();
  }

  Rotation rotation() { return exp_skew(unit_vector(), uniform(0.0, kPi)); }

  Direction direction() { return static_cast<Direction>(integer(0, 2)); }
  Direction turn() { return integer(0, 1) == 0 ? Direction::L : Direction::R; }

 private:
  std::mt19937_64 gen_;
};

inline double max_diff(const Mat3& a, const Mat3& b) { return (a - b).max_abs(); }

inline double max_diff(const Vec3& a, const Vec3& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

// Matrix exponential by scaling and squaring of a truncated Taylor series.
inline Mat3 expm_oracle(const Mat3& a) {
  int squarings = 0;
  double scale = 1.0;
  while (a.max_abs() * scale > 0.05) {
    scale *= 0.5;
    ++squarings;
  }
  const Mat3 x = a * scale;
  Mat3 term = Mat3::identity();
  Mat3 sum = Mat3::identity();
  for (int k = 1; k <= 20; ++k) {
    term = term * x * (1.0 / k);
    sum = sum + term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// Word letters -> Direction vector, for building paths in tests.
inline std::vector<Segment> segments_of(const char* word, std::vector<double> angles) {
  std::vector<Segment> out;
  for (std::size_t i = 0; word[i] != '\0'; ++i) out.push_back({direction_from_char(word[i]), angles[i]});
  return out;
}

inline Rotation endpoint_of(double r, const char* word, std::vector<double> angles) {
  return path_endpoint(PathSpec(TurnRadius(r), segments_of(word, std::move(angles)))).rot();
}

}  // namespace sdubins::testing
