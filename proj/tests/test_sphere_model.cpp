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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sdubins/errors.hpp"
#include "sdubins/sphere_model.hpp"
#include "support.hpp"

using namespace sdubins;
using sdubins::testing::max_diff;
using sdubins::testing::Rng;

namespace {

const double kTeardropR = std::sqrt(3.0) / 2.0;

PathSpec teardrop() {
  return PathSpec(TurnRadius(kTeardropR), {{Direction::L, kPi}, {Direction::R, kPi}, {Direction::L, kPi}});
}

void check_frame(const Config& c, double tol) {
  CHECK(c.X().norm() == doctest::Approx(1.0).epsilon(tol));
  CHECK(c.T().norm() == doctest::Approx(1.0).epsilon(tol));
  CHECK(std::abs(dot(c.X(), c.T())) < tol);
  CHECK(max_diff(c.N(), cross(c.X(), c.T())) < tol);
}

}  // namespace

TEST_CASE("TurnRadius") {
  CHECK_THROWS_AS(TurnRadius(0.0), DomainError);
  CHECK_THROWS_AS(TurnRadius(1.0), DomainError);
  CHECK_THROWS_AS(TurnRadius(-0.2), DomainError);
  for (double r : {0.01, 0.3, 0.5, 0.99}) {
    const TurnRadius t(r);
    CHECK(1.0 / std::sqrt(1.0 + t.u_max() * t.u_max()) == doctest::Approx(r).epsilon(1e-12));
    CHECK(TurnRadius::from_u_max(t.u_max()).r() == doctest::Approx(r).epsilon(1e-12));
    CHECK(t.kx() * t.kx() + t.kz() * t.kz() == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("segment generators") {
  const Generator g = segment_generator(Direction::G, TurnRadius(0.3));
  CHECK(max_diff(g.axis, Vec3{0, 0, 1}) == 0.0);
  CHECK(g.scale == 1.0);

  const Generator r = segment_generator(Direction::R, TurnRadius(0.5));
  CHECK(max_diff(r.axis, Vec3{std::sqrt(3.0) / 2, 0, 0.5}) < 1e-15);
  CHECK(r.scale == 0.5);

  const Generator l = segment_generator(Direction::L, TurnRadius(0.5));
  CHECK(max_diff(l.axis, Vec3{-std::sqrt(3.0) / 2, 0, 0.5}) < 1e-15);

  // r M(u) is the body-frame generator read off the frame equations.
  for (double rr : {0.2, 0.5, 0.8}) {
    const TurnRadius t(rr);
    for (Direction d : {Direction::L, Direction::R}) {
      const Generator gen = segment_generator(d, t);
      const Vec3 m{control_value(d, t), 0.0, 1.0};
      CHECK(max_diff(gen.axis, m * rr) < 1e-15);
      CHECK(gen.axis.norm() == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
}

TEST_CASE("PathSpec canonicalizes and rejects GG") {
  const TurnRadius t(0.4);
  const PathSpec p(t, {{Direction::L, -1.0}, {Direction::G, 2 * kPi + 0.5}});
  CHECK(p.segments()[0].angle == doctest::Approx(2 * kPi - 1.0));
  CHECK(p.segments()[1].angle == doctest::Approx(0.5));
  CHECK(p.word() == "LG");
  CHECK_THROWS_AS(PathSpec(t, {{Direction::G, 1.0}, {Direction::G, 1.0}}), InvalidPath);
  CHECK_THROWS_AS(direction_from_char('X'), InvalidPath);
}

TEST_CASE("normalized drops empty arcs and merges neighbours") {
  const TurnRadius t(0.4);
  const PathSpec p(t, {{Direction::L, 1.0}, {Direction::R, 0.0}, {Direction::L, 2.0}, {Direction::G, 1e-14}});
  const PathSpec n = p.normalized();
  REQUIRE(n.size() == 1);
  CHECK(n.segments()[0].dir == Direction::L);
  CHECK(n.segments()[0].angle == doctest::Approx(3.0));
  // Same endpoint before and after.
  CHECK(max_diff(path_endpoint(p).rot().matrix(), path_endpoint(n).rot().matrix()) < 1e-12);

  const PathSpec wrap(t, {{Direction::R, 4.0}, {Direction::R, 2 * kPi - 4.0}});
  CHECK(wrap.normalized().empty());
}

TEST_CASE("propagate examples") {
  const TurnRadius t(0.4);
  Rng rng(3);
  const Config c(rng.rotation());
  CHECK(max_diff(propagate(c, {Direction::G, 0.0}, t).rot().matrix(), c.rot().matrix()) == 0.0);

  const Config q = propagate(Config(), {Direction::G, kPi / 2}, t);
  CHECK(std::abs(dot(q.X(), Config().X())) < 1e-15);

  for (double rr : {0.1, 0.4, 0.9}) {
    for (Direction d : {Direction::L, Direction::R, Direction::G}) {
      const Config back = propagate(c, {d, 2 * kPi}, TurnRadius(rr));
      CHECK(max_diff(back.rot().matrix(), c.rot().matrix()) < 1e-14);
    }
  }
}

TEST_CASE("analytic propagation matches RK4 on the frame equations") {
  CHECK(max_diff(ode_oracle_propagate(Config(), 0.0, kPi / 2).rot().matrix(),
                 propagate(Config(), {Direction::G, kPi / 2}, TurnRadius(0.5)).rot().matrix()) < 1e-8);
  const TurnRadius t(0.3);
  CHECK(max_diff(ode_oracle_propagate(Config(), -t.u_max(), t.r() * 2.0).rot().matrix(),
                 propagate(Config(), {Direction::L, 2.0}, t).rot().matrix()) < 1e-8);

  Rng rng(50);
  for (int i = 0; i < 50; ++i) {
    const TurnRadius rr(rng.uniform(0.05, 0.95));
    const Direction d = rng.direction();
    const double angle = rng.uniform(0.0, 2 * kPi);
    const Config c(rng.rotation());
    const Generator g = segment_generator(d, rr);
    const Config oracle = ode_oracle_propagate(c, control_value(d, rr), g.scale * angle);
    const Config analytic = propagate(c, {d, angle}, rr);
    CHECK(max_diff(oracle.rot().matrix(), analytic.rot().matrix()) < 1e-8);
  }
  CHECK_THROWS_AS(ode_oracle_propagate(Config(), 0.0, 1.0, 2e-3), DomainError);
}

TEST_CASE("RK4 keeps the frame orthonormal for any constant control") {
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    const Config c = ode_oracle_propagate(Config(rng.rotation()), rng.uniform(-20, 20), rng.uniform(0, 3));
    check_frame(c, 1e-8);
  }
}

TEST_CASE("small-circle centre is fixed along a turn and N along a geodesic") {
  Rng rng(60);
  for (int i = 0; i < 20; ++i) {
    const TurnRadius t(rng.uniform(0.05, 0.95));
    const Config c0(rng.rotation());
    const Direction d = rng.turn();
    const double u = control_value(d, t);
    const Vec3 centre0 = c0.X() * u + c0.N();
    for (double a = 0.0; a < 2 * kPi; a += 0.37) {
      const Config c = propagate(c0, {d, a}, t);
      CHECK(max_diff(c.X() * u + c.N(), centre0) < 1e-9);
      // The centre is the small-circle pole: constant angular distance r.
      CHECK(std::abs(dot(c.X(), centre0.normalized())) ==
            doctest::Approx(std::sqrt(1 - t.r() * t.r())).epsilon(1e-12));
    }
    for (double a = 0.0; a < 2 * kPi; a += 0.37) {
      const Config c = propagate(c0, {Direction::G, a}, t);
      CHECK(max_diff(c.N(), c0.N()) < 1e-10);
    }
  }
}

TEST_CASE("path_endpoint and path_length") {
  const TurnRadius t(0.4);
  Rng rng(4);
  const Config start(rng.rotation());
  CHECK(max_diff(path_endpoint(PathSpec(t, {}), start).rot().matrix(), start.rot().matrix()) == 0.0);
  CHECK(path_length(PathSpec(t, {})) == 0.0);
  CHECK(path_length(PathSpec(t, {{Direction::G, 1.0}})) == 1.0);

  const Config two = path_endpoint(PathSpec(t, {{Direction::L, 1.1}, {Direction::L, 2.3}}), start);
  const Config one = path_endpoint(PathSpec(t, {{Direction::L, 3.4}}), start);
  CHECK(max_diff(two.rot().matrix(), one.rot().matrix()) < 1e-14);

  CHECK(path_length(PathSpec(t, {{Direction::L, 1.0}, {Direction::G, 2.0}, {Direction::R, 3.0}})) ==
        doctest::Approx(0.4 + 2.0 + 1.2));
}

TEST_CASE("teardrop returns to the start point with reversed heading") {
  const Config end = path_endpoint(teardrop());
  CHECK(max_diff(end.X(), Vec3{1, 0, 0}) < 1e-14);
  CHECK(max_diff(end.T(), Vec3{0, -1, 0}) < 1e-14);
  CHECK(max_diff(end.rot().matrix(), Mat3::diag(1, -1, -1)) < 1e-14);
  CHECK(path_length(teardrop()) == doctest::Approx(3 * kPi * kTeardropR).epsilon(1e-15));
  CHECK(path_length(teardrop()) == doctest::Approx(8.1621).epsilon(1e-5));

  const PathSpec mirrored(TurnRadius(kTeardropR), {{Direction::R, kPi}, {Direction::L, kPi}, {Direction::R, kPi}});
  CHECK(max_diff(path_endpoint(mirrored).rot().matrix(), Mat3::diag(1, -1, -1)) < 1e-14);
}

TEST_CASE("sample_path") {
  const TurnRadius t(0.4);
  const std::vector<PathSample> g = sample_path(PathSpec(t, {{Direction::G, kPi}}), Config(), kPi / 2);
  REQUIRE(g.size() == 3);
  CHECK(std::acos(dot(g[0].x, g[1].x)) == doctest::Approx(kPi / 2));
  CHECK(std::acos(std::clamp(dot(g[0].x, g[2].x), -1.0, 1.0)) == doctest::Approx(kPi));

  Rng rng(12);
  for (int i = 0; i < 10; ++i) {
    const PathSpec p(TurnRadius(rng.uniform(0.1, 0.9)),
                     {{rng.turn(), rng.uniform(0.1, 6)}, {Direction::G, rng.uniform(0.1, 3)}, {rng.turn(), rng.uniform(0.1, 6)}});
    const std::vector<PathSample> s = sample_path(p, Config(rng.rotation()), 0.05);
    CHECK(s.front().s == 0.0);
    CHECK(s.back().s == doctest::Approx(path_length(p)).epsilon(1e-12));
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(s[k].x.norm() == doctest::Approx(1.0).epsilon(1e-9));
      if (k > 0) CHECK(s[k].s > s[k - 1].s);
    }
  }
  CHECK_THROWS_AS(sample_path(PathSpec(t, {{Direction::G, 1.0}}), Config(), 0.0), DomainError);
}

TEST_CASE("teardrop tangency points lie on one great circle") {
  const PathSpec p = teardrop();
  const std::vector<PathSample> s = sample_path(p);
  const double seg = kTeardropR * kPi;
  std::vector<Vec3> knots;
  for (const PathSample& q : s) {
    for (int k = 0; k <= 3; ++k) {
      if (std::abs(q.s - k * seg) < 1e-9) knots.push_back(q.x);
    }
  }
  REQUIRE(knots.size() == 4);
  const Vec3 normal = cross(knots[1], knots[2]).normalized();
  for (const Vec3& k : knots) CHECK(std::abs(dot(normal, k)) < 1e-8);
}

TEST_CASE("samples CSV") {
  std::ostringstream os;
  write_samples_csv(os, {{0.0, {1, 0, 0}}, {0.5, {0, 1, 0}}});
  CHECK(os.str() == "s,x,y,z\n0,1,0,0\n0.5,0,1,0\n");
}
