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

#include "sdubins/bvp.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sdubins/errors.hpp"

namespace sdubins {

namespace {

constexpr const char* kWords[] = {"L",   "R",   "G",   "LR",  "RL",  "LG",   "GL",   "RG",  "GR",
                                  "LGL", "LGR", "RGL", "RGR", "LRL", "RLR", "LRLR", "RLRL"};

// Residual below which Newton stops iterating; the achievable floor in
// double precision is a few 1e-16.
constexpr double kResidualFloor = 1e-15;
constexpr int kMaxHalvings = 12;
constexpr int kMaxReductions = 3;

bool word_allowed(const std::vector<Direction>& w) {
  std::string s;
  for (Direction d : w) s.push_back(to_char(d));
  return std::find(std::begin(kWords), std::end(kWords), s) != std::end(kWords);
}

// Endpoint map of one family with everything angle-independent precomputed.
struct Model {
  int segments = 0;
  int unknowns = 0;
  std::array<Mat3, 4> k{};
  std::array<Mat3, 4> k2{};
  std::array<int, 4> var{};
  Mat3 goal;

  Model(const Family& f, const Rotation& g, const TurnRadius& radius) : goal(g.matrix()) {
    segments = static_cast<int>(f.segments());
    unknowns = f.unknowns();
    for (int i = 0; i < segments; ++i) {
      k[i] = skew(segment_generator(f.word()[i], radius).axis);
      k2[i] = k[i] * k[i];
      var[i] = f.is_cccc() ? (i == 0 ? 0 : (i == 3 ? 2 : 1)) : i;
    }
  }

  Mat3 endpoint(const double* x) const {
    Mat3 e = Mat3::identity();
    for (int i = 0; i < segments; ++i) {
      const double t = x[var[i]];
      e = e * (Mat3::identity() + k[i] * std::sin(t) + k2[i] * (1.0 - std::cos(t)));
    }
    return e;
  }

  /// Axis-angle of endpoint^T * goal.
  Vec3 residual(const double* x) const {
    return log_vector(Rotation::trusted(endpoint(x).transpose() * goal));
  }
};

// Newton step: square solve for three unknowns, Gauss-Newton below.
bool solve_step(const std::array<Vec3, 3>& jac, const Vec3& f, int n, double* step) {
  if (n == 3) {
    const double det = dot(jac[0], cross(jac[1], jac[2]));
    if (!(std::abs(det) > 1e-300)) return false;
    // Cramer's rule on J d = -f.
    step[0] = -dot(f, cross(jac[1], jac[2])) / det;
    step[1] = -dot(jac[0], cross(f, jac[2])) / det;
    step[2] = -dot(jac[0], cross(jac[1], f)) / det;
    return std::isfinite(step[0]) && std::isfinite(step[1]) && std::isfinite(step[2]);
  }
  if (n == 2) {
    const double a = dot(jac[0], jac[0]);
    const double b = dot(jac[0], jac[1]);
    const double c = dot(jac[1], jac[1]);
    const double det = a * c - b * b;
    if (!(std::abs(det) > 1e-300)) return false;
    const double g0 = -dot(jac[0], f);
    const double g1 = -dot(jac[1], f);
    step[0] = (c * g0 - b * g1) / det;
    step[1] = (a * g1 - b * g0) / det;
    return std::isfinite(step[0]) && std::isfinite(step[1]);
  }
  const double a = dot(jac[0], jac[0]);
  if (!(a > 1e-300)) return false;
  step[0] = -dot(jac[0], f) / a;
  return std::isfinite(step[0]);
}

// Damped Newton from x (modified in place). Returns the final residual.
double newton(const Model& m, double* x, const SolveOptions& o) {
  const int n = m.unknowns;
  Vec3 f = m.residual(x);
  double nf = f.norm();
  std::array<Vec3, 3> jac{};
  double step[3] = {0, 0, 0};
  double trial[3] = {0, 0, 0};
  for (int it = 0; it < o.max_iter && nf > kResidualFloor; ++it) {
    for (int j = 0; j < n; ++j) {
      const double keep = x[j];
      x[j] = keep + o.fd_step;
      jac[j] = (m.residual(x) - f) / o.fd_step;
      x[j] = keep;
    }
    if (!solve_step(jac, f, n, step)) break;
    double lambda = 1.0;
    bool improved = false;
    for (int h = 0; h < kMaxHalvings; ++h, lambda *= 0.5) {
      for (int j = 0; j < n; ++j) trial[j] = x[j] + lambda * step[j];
      const Vec3 ft = m.residual(trial);
      const double nt = ft.norm();
      if (nt < nf) {
        std::copy(trial, trial + n, x);
        f = ft;
        nf = nt;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return nf;
}

Vec3 axis_of(Direction d, const TurnRadius& radius) { return segment_generator(d, radius).axis; }

// Necessary conditions that every root with residual below `tol` must meet,
// from u^T (goal - endpoint) v <= |goal - endpoint|_2 <= residual.
bool may_have_root(const Family& f, const Rotation& goal, const TurnRadius& radius, double tol) {
  const auto& w = f.word();
  if (f.is_cccc()) return true;
  const Vec3 first = axis_of(w.front(), radius);
  const Vec3 last = axis_of(w.back(), radius);
  if (w.size() == 1) return (goal * first - first).norm() <= tol;
  const double target = dot(first, goal * last);
  if (w.size() == 2) return std::abs(target - dot(first, last)) <= tol;
  // u_a^T S_b(t) u_c = p + q cos t + s sin t
  const Vec3 b = axis_of(w[1], radius);
  const double p = dot(first, b) * dot(b, last);
  const double q = dot(first, last) - p;
  const double s = dot(first, cross(b, last));
  const double amp = std::hypot(q, s);
  return target <= p + amp + tol && target >= p - amp - tol;
}

struct Collector {
  const Rotation& goal;
  const TurnRadius& radius;
  const SolveOptions& opts;
  std::vector<CandidateSolution> found;

  bool known(const Family& f, const std::vector<double>& angles) const {
    for (const CandidateSolution& c : found) {
      if (!(c.family == f)) continue;
      bool same = true;
      for (std::size_t i = 0; i < angles.size() && same; ++i) {
        same = circular_distance(c.angles[i], angles[i]) < opts.dedupe_tol;
      }
      if (same) return true;
    }
    return false;
  }

  // Takes a converged root of `f` given by its free angles.
  void accept(const Family& f, std::vector<double> free, double res, int depth) {
    for (double& a : free) a = canonical_angle(a);
    if (f.is_cccc() && !(free[1] > kPi)) return;
    const std::vector<double> angles = f.expand(free);

    const bool vanishing = std::any_of(angles.begin(), angles.end(), [&](double a) {
      return a < opts.min_angle || kTwoPi - a < opts.min_angle;
    });
    if (vanishing) {
      reduce(f, angles, depth);
      return;
    }
    if (known(f, angles)) return;
    CandidateSolution c{f, angles, res, 0.0};
    const PathSpec path = c.path(radius);
    c.residual = rotation_angle_between(path_endpoint(path).rot(), goal);
    if (!(c.residual < opts.accept_tol)) return;
    c.length = path_length(path);
    found.push_back(std::move(c));
  }

  // Drops vanishing arcs, merges equal neighbours and re-solves the shorter
  // word from the merged angles.
  void reduce(const Family& f, const std::vector<double>& angles, int depth) {
    if (depth >= kMaxReductions) return;
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < angles.size(); ++i) segs.push_back({f.word()[i], angles[i]});
    std::vector<Segment> merged;
    for (const Segment& s : segs) {
      if (s.angle < opts.min_angle || kTwoPi - s.angle < opts.min_angle) continue;
      if (!merged.empty() && merged.back().dir == s.dir) {
        merged.back().angle = canonical_angle(merged.back().angle + s.angle);
      } else {
        merged.push_back(s);
      }
    }
    if (merged.empty()) return;
    std::vector<Direction> word;
    std::vector<double> free;
    for (const Segment& s : merged) {
      word.push_back(s.dir);
      free.push_back(s.angle);
    }
    if (!word_allowed(word)) return;
    const Family reduced(word);
    const Model m(reduced, goal, radius);
    const double res = newton(m, free.data(), opts);
    if (res < opts.accept_tol) accept(reduced, free, res, depth + 1);
  }
};

}  // namespace

Family::Family(std::vector<Direction> word) : word_(std::move(word)) {
  if (word_.empty()) throw InvalidPath("empty family word");
  for (std::size_t i = 1; i < word_.size(); ++i) {
    if (word_[i] == Direction::G && word_[i - 1] == Direction::G) {
      throw InvalidPath("family word contains GG");
    }
  }
  if (!word_allowed(word_)) throw InvalidPath("not a candidate family: " + label());
}

Family Family::parse(std::string_view word) {
  std::vector<Direction> w;
  for (char c : word) w.push_back(direction_from_char(c));
  return Family(std::move(w));
}

std::string Family::label() const {
  std::string s;
  for (Direction d : word_) s.push_back(to_char(d));
  return s;
}

bool Family::is_cccc() const {
  return word_.size() == 4 &&
         std::none_of(word_.begin(), word_.end(), [](Direction d) { return d == Direction::G; });
}

std::vector<double> Family::expand(std::span<const double> free_angles) const {
  if (static_cast<int>(free_angles.size()) != unknowns()) {
    throw InvalidPath("family " + label() + " takes " + std::to_string(unknowns()) + " angles");
  }
  if (is_cccc()) return {free_angles[0], free_angles[1], free_angles[1], free_angles[2]};
  return {free_angles.begin(), free_angles.end()};
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const char* w : kWords) out.push_back(Family::parse(w));
    return out;
  }();
  return families;
}

std::vector<Family> enumerate_families(const TurnRadius& radius) {
  std::vector<Family> out;
  for (const Family& f : all_families()) {
    if (f.segments() <= 3 || radius.r() > 0.5) out.push_back(f);
  }
  return out;
}

int SolveOptions::grid_for(int unknowns) const {
  if (grid_pts > 0) return unknowns >= 3 ? grid_pts : 4 * grid_pts;
  return unknowns >= 3 ? 16 : 64;
}

PathSpec CandidateSolution::path(const TurnRadius& radius) const {
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < angles.size(); ++i) segs.push_back({family.word()[i], angles[i]});
  return PathSpec(radius, std::move(segs));
}

double residual(const Family& family, std::span<const double> free_angles, const Rotation& goal,
                const TurnRadius& radius) {
  const std::vector<double> angles = family.expand(free_angles);
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < angles.size(); ++i) segs.push_back({family.word()[i], angles[i]});
  // Build the path without canonicalizing so full turns act as given.
  Config c;
  for (const Segment& s : segs) c = propagate(c, s, radius);
  return rotation_angle_between(c.rot(), goal);
}

bool solution_less(const CandidateSolution& a, const CandidateSolution& b) {
  if (a.length != b.length) return a.length < b.length;
  if (a.angles != b.angles) return a.angles < b.angles;
  return a.family.label() < b.family.label();
}

std::vector<CandidateSolution> solve_family(const Family& family, const Rotation& goal,
                                            const TurnRadius& radius, const SolveOptions& opts) {
  Collector col{goal, radius, opts, {}};
  if (!may_have_root(family, goal, radius, opts.accept_tol)) return {};

  const Model model(family, goal, radius);
  const int n = family.unknowns();
  const int pts = opts.grid_for(n);
  std::array<double, 3> lo{0.0, 0.0, 0.0};
  std::array<double, 3> width{kTwoPi, kTwoPi, kTwoPi};
  if (family.is_cccc()) {
    lo[1] = kPi;
    width[1] = kPi;
  }
  const auto coord = [&](int dim, int i) { return lo[dim] + (i + 0.5) * width[dim] / pts; };

  const int total = n == 3 ? pts * pts * pts : (n == 2 ? pts * pts : pts);
  for (int idx = 0; idx < total; ++idx) {
    double x[3] = {coord(0, idx % pts), 0.0, 0.0};
    if (n >= 2) x[1] = coord(1, (idx / pts) % pts);
    if (n >= 3) x[2] = coord(2, idx / (pts * pts));
    const double res = newton(model, x, opts);
    if (res < opts.accept_tol) col.accept(family, std::vector<double>(x, x + n), res, 0);
  }
  std::sort(col.found.begin(), col.found.end(), solution_less);
  return col.found;
}

}  // namespace sdubins
