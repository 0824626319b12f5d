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

#include "sdubins/io.hpp"

#include <cmath>

#include "sdubins/errors.hpp"

namespace sdubins {

using nlohmann::json;

namespace {

// NaN has no JSON spelling.
json num(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

}  // namespace

json to_json(const PathSpec& p) {
  json segs = json::array();
  for (const Segment& s : p.segments()) {
    segs.push_back({{"dir", std::string(1, to_char(s.dir))}, {"angle", s.angle}});
  }
  return {{"r", p.radius().r()}, {"segments", segs}};
}

PathSpec path_from_json(const json& j) {
  try {
    std::vector<Segment> segs;
    for (const json& s : j.at("segments")) {
      const std::string dir = s.at("dir").get<std::string>();
      if (dir.size() != 1) throw InvalidPath("direction must be one of L, R, G: " + dir);
      segs.push_back({direction_from_char(dir[0]), s.at("angle").get<double>()});
    }
    return PathSpec(TurnRadius(j.at("r").get<double>()), std::move(segs));
  } catch (const json::exception& e) {
    throw InvalidPath(std::string("malformed path document: ") + e.what());
  }
}

json to_json(const CertificateReport& rep) {
  json v = json::array();
  for (const Violation& x : rep.violations) {
    v.push_back({{"rule", x.rule}, {"s", x.s}, {"magnitude", x.magnitude}});
  }
  return {{"pass", rep.pass}, {"degenerate", rep.degenerate}, {"b0", rep.b0}, {"violations", v}};
}

json to_json(const CandidateSolution& c, const TurnRadius& radius) {
  return {{"family", c.family.label()},
          {"angles", c.angles},
          {"length", c.length},
          {"residual", c.residual},
          {"path", to_json(c.path(radius))}};
}

json to_json(const PlanResult& res, const TurnRadius& radius) {
  json cands = json::array();
  for (const PlannedCandidate& c : res.candidates) {
    json j = to_json(c.solution, radius);
    j["admissible"] = c.admissible;
    cands.push_back(std::move(j));
  }
  return {{"r", radius.r()},
          {"best", res.best ? to_json(*res.best, radius) : json(nullptr)},
          {"certified", res.certified},
          {"warnings", res.warnings},
          {"candidates", cands}};
}

json to_json(const PerturbationCoeffs& k) {
  return {{"a1", k.a1}, {"a2", k.a2}, {"a3", k.a3}, {"b12", k.b12}, {"b3", k.b3}, {"bsum", k.bsum}};
}

json to_json(const SweepRow& row) {
  return {{"r", row.r},
          {"phi_deg", row.phi_deg},
          {"best_family", row.best_family},
          {"best_length", num(row.best_length)},
          {"second_family", row.second_family},
          {"second_length", num(row.second_length)}};
}

json to_json(const ExistenceRow& row) {
  json j = {{"r", row.r},
            {"family", to_string(row.family_class)},
            {"exists", row.exists},
            {"min_length", num(row.min_length)}};
  if (row.shortest) j["word"] = row.shortest->family.label();
  return j;
}

}  // namespace sdubins
