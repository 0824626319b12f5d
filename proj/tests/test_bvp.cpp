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

#include <algorithm>
#include <set>

#include "sdubins/bvp.hpp"
#include "sdubins/errors.hpp"
#include "support.hpp"

using namespace sdubins;
using sdubins::testing::endpoint_of;
using sdubins::testing::max_diff;
using sdubins::testing::Rng;

namespace {

const Rotation kReversal = Rotation::trusted(Mat3::diag(1, -1, -1));

Rotation mirror(const Rotation& g) {
  const Mat3 d = Mat3::diag(1, 1, -1);
  return Rotation::trusted(d * g.matrix() * d);
}

std::string swap_lr(std::string w) {
  for (char& c : w) c = c == 'L' ? 'R' : (c == 'R' ? 'L' : c);
  return w;
}

}  // namespace

TEST_CASE("Family parsing and the candidate set") {
  CHECK(Family::parse("LGR").label() == "LGR");
  CHECK(Family::parse("RLRL").is_cccc());
  CHECK(Family::parse("RLRL").unknowns() == 3);
  CHECK(Family::parse("LG").unknowns() == 2);
  CHECK_THROWS_AS(Family::parse("GG"), InvalidPath);
  CHECK_THROWS_AS(Family::parse(""), InvalidPath);
  CHECK_THROWS_AS(Family::parse("LLR"), InvalidPath);
  CHECK_THROWS_AS(Family::parse("LXR"), InvalidPath);
  CHECK_THROWS_AS(Family::parse("LRLRL"), InvalidPath);

  const std::vector<double> e = Family::parse("LRLR").expand(std::vector<double>{1.0, 4.0, 2.0});
  CHECK(e == std::vector<double>{1.0, 4.0, 4.0, 2.0});

  CHECK(all_families().size() == 17);
  std::set<std::string> labels;
  for (const Family& f : all_families()) {
    labels.insert(f.label());
    CHECK(f.label().find("GG") == std::string::npos);
  }
  CHECK(labels.size() == 17);
}

TEST_CASE("enumerate_families depends on the radius") {
  const auto small = enumerate_families(TurnRadius(0.3));
  CHECK(small.size() == 15);
  for (const Family& f : small) CHECK(f.segments() <= 3);
  CHECK(enumerate_families(TurnRadius(0.5)).size() == 15);

  const auto big = enumerate_families(TurnRadius(0.6));
  CHECK(big.size() == 17);
  CHECK(std::count_if(big.begin(), big.end(), [](const Family& f) { return f.is_cccc(); }) == 2);
}

TEST_CASE("grid sizes") {
  SolveOptions o;
  CHECK(o.grid_for(3) == 16);
  CHECK(o.grid_for(2) == 64);
  o.grid_pts = 8;
  CHECK(o.grid_for(3) == 8);
  CHECK(o.grid_for(1) == 32);
}

TEST_CASE("residual") {
  const TurnRadius t(0.4);
  CHECK(residual(Family::parse("G"), std::vector<double>{0.0}, Rotation(), t) == 0.0);
  CHECK(residual(Family::parse("G"), std::vector<double>{1.0}, exp_skew({0, 0, 1}, 1.0), t) < 1e-15);
  const Rotation goal = endpoint_of(0.4, "LRL", {0.7, 4.0, 3.9});
  CHECK(residual(Family::parse("LRL"), std::vector<double>{0.7, 4.0, 3.9}, goal, t) < 1e-12);
  CHECK(residual(Family::parse("LRL"), std::vector<double>{0.7, 4.0, 3.8}, goal, t) > 1e-3);

  const Rotation cccc = endpoint_of(0.7, "RLRL", {0.5, 4.0, 4.0, 1.5});
  CHECK(residual(Family::parse("RLRL"), std::vector<double>{0.5, 4.0, 1.5}, cccc, TurnRadius(0.7)) < 1e-12);
}

TEST_CASE("solve_family recovers the teardrop") {
  const TurnRadius t(std::sqrt(3.0) / 2);
  const auto sols = solve_family(Family::parse("LRL"), kReversal, t);
  REQUIRE_FALSE(sols.empty());
  const bool found = std::any_of(sols.begin(), sols.end(), [](const CandidateSolution& s) {
    return s.family.label() == "LRL" &&
           std::all_of(s.angles.begin(), s.angles.end(), [](double a) { return std::abs(a - kPi) < 1e-6; });
  });
  CHECK(found);
}

TEST_CASE("CGC has no root on the reversal goal past r = 1/sqrt(2)") {
  CHECK(solve_family(Family::parse("LGL"), kReversal, TurnRadius(0.8)).empty());
  CHECK_FALSE(solve_family(Family::parse("LGL"), kReversal, TurnRadius(0.6)).empty());
}

TEST_CASE("every returned solution reproduces the goal") {
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const TurnRadius t(rng.uniform(0.1, 0.9));
    const Rotation goal = rng.rotation();
    for (const Family& f : enumerate_families(t)) {
      for (const CandidateSolution& s : solve_family(f, goal, t)) {
        const PathSpec p = s.path(t);
        CHECK(rotation_angle_between(path_endpoint(p).rot(), goal) < 1e-9);
        CHECK(s.residual < 1e-9);
        CHECK(s.length == doctest::Approx(path_length(p)).epsilon(1e-14));
        CHECK(s.angles.size() == s.family.segments());
        for (double a : s.angles) {
          CHECK(a > 0.0);
          CHECK(a < 2 * kPi);
        }
      }
    }
  }
}

TEST_CASE("solutions are sorted, distinct and deterministic") {
  const TurnRadius t(0.35);
  const Rotation goal = endpoint_of(0.35, "RLR", {2.0, 4.5, 1.0});
  const auto a = solve_family(Family::parse("RLR"), goal, t);
  const auto b = solve_family(Family::parse("RLR"), goal, t);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].angles == b[i].angles);
    if (i > 0) {
      CHECK_FALSE(solution_less(a[i], a[i - 1]));
      double dist = 0.0;
      for (std::size_t k = 0; k < a[i].angles.size(); ++k) {
        dist = std::max(dist, circular_distance(a[i].angles[k], a[i - 1].angles[k]));
      }
      if (a[i].family == a[i - 1].family) CHECK(dist >= 1e-6);
    }
  }
}

TEST_CASE("forward-inverse closure on random three-segment paths") {
  Rng rng(42);
  const char* words[] = {"LGL", "LGR", "RGL", "RGR", "LRL", "RLR"};
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(0.05, 0.5);
    const char* w = words[rng.integer(0, 5)];
    std::vector<double> ang;
    for (int k = 0; k < 3; ++k) ang.push_back(rng.uniform(0.2, 2 * kPi - 0.2));
    const TurnRadius t(r);
    const PathSpec fwd(t, testing::segments_of(w, ang));
    const auto sols = solve_family(Family::parse(w), path_endpoint(fwd).rot(), t);
    REQUIRE_FALSE(sols.empty());
    CHECK(sols.front().length <= path_length(fwd) + 1e-7);
  }
}

TEST_CASE("the constructed LRL angles are among the roots") {
  Rng rng(43);
  for (int i = 0; i < 10; ++i) {
    const double r = rng.uniform(0.1, 0.5);
    const std::vector<double> ang{rng.uniform(0.3, 6.0), rng.uniform(0.3, 6.0), rng.uniform(0.3, 6.0)};
    const TurnRadius t(r);
    const auto sols = solve_family(Family::parse("LRL"), endpoint_of(r, "LRL", ang), t);
    const bool found = std::any_of(sols.begin(), sols.end(), [&](const CandidateSolution& s) {
      if (s.family.label() != "LRL") return false;
      for (int k = 0; k < 3; ++k) {
        if (circular_distance(s.angles[k], ang[k]) > 1e-6) return false;
      }
      return true;
    });
    const bool shorter = !sols.empty() && sols.front().length < r * (ang[0] + ang[1] + ang[2]);
    CHECK((found || shorter));
  }
}

TEST_CASE("mirroring the goal swaps L and R") {
  Rng rng(44);
  for (int i = 0; i < 8; ++i) {
    const TurnRadius t(rng.uniform(0.1, 0.5));
    const Rotation goal = rng.rotation();
    for (const char* w : {"LRL", "LGR", "RG", "L"}) {
      const auto a = solve_family(Family::parse(w), goal, t);
      const auto b = solve_family(Family::parse(swap_lr(w)), mirror(goal), t);
      REQUIRE(a.size() == b.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].length == doctest::Approx(b[k].length).epsilon(1e-9));
        CHECK(b[k].family.label() == swap_lr(a[k].family.label()));
      }
    }
  }
}

TEST_CASE("roots with a vanishing arc are reported in the shorter word") {
  const TurnRadius t(0.4);
  const Rotation goal = endpoint_of(0.4, "LG", {1.3, 0.9});
  const auto sols = solve_family(Family::parse("LGL"), goal, t);
  REQUIRE_FALSE(sols.empty());
  CHECK(sols.front().family.label() == "LG");
  CHECK(sols.front().length == doctest::Approx(0.4 * 1.3 + 0.9).epsilon(1e-9));
}

TEST_CASE("single-segment families") {
  const TurnRadius t(0.4);
  const auto g = solve_family(Family::parse("G"), exp_skew({0, 0, 1}, 1.0), t);
  REQUIRE(g.size() == 1);
  CHECK(g[0].angles[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(solve_family(Family::parse("L"), exp_skew({0, 0, 1}, 1.0), t).empty());
}

TEST_CASE("CCCC roots keep equal middle arcs") {
  const TurnRadius t(0.7);
  const Rotation goal = endpoint_of(0.7, "LRLR", {0.8, 3.9, 3.9, 1.1});
  const auto sols = solve_family(Family::parse("LRLR"), goal, t, SolveOptions{.grid_pts = 10});
  REQUIRE_FALSE(sols.empty());
  for (const CandidateSolution& s : sols) {
    if (s.family.is_cccc()) CHECK(s.angles[1] == s.angles[2]);
  }
}
