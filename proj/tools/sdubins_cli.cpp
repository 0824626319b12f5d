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

// Command-line front end. Exit codes: 0 success, 1 bad arguments or input,
// 2 when no path reaches the goal.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sdubins/errors.hpp"
#include "sdubins/io.hpp"

namespace {

using namespace sdubins;
using nlohmann::json;

constexpr int kExitArgs = 1;
constexpr int kExitNoPath = 2;

struct Globals {
  double accept_tol = 1e-9;
  int grid_pts = 0;
  double min_angle = 1e-7;
  std::string out;
  std::string format;

  SolveOptions solve() const {
    SolveOptions o;
    o.accept_tol = accept_tol;
    o.grid_pts = grid_pts;
    o.min_angle = min_angle;
    return o;
  }
  bool json_out(const char* fallback) const {
    return (format.empty() ? fallback : format) == std::string("json");
  }
};

struct GoalArgs {
  std::vector<double> matrix;
  std::vector<double> axis;
  double angle = 0.0;
  std::string path_file;
};

// Writes to --out when given, stdout otherwise.
void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary | std::ios::trunc);
  if (!f) throw IOError(g.out, "cannot open for writing");
  f << text;
  if (!f) throw IOError(g.out, "write failed");
}

json load_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw IOError(file, "cannot open for reading");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidPath(file + ": " + e.what());
  }
}

Rotation goal_from(const GoalArgs& a, const TurnRadius& radius) {
  const int given = !a.matrix.empty() + !a.axis.empty() + !a.path_file.empty();
  if (given != 1) {
    throw DomainError("give exactly one of --goal, --goal-axis/--goal-angle, --goal-path");
  }
  if (!a.matrix.empty()) {
    Mat3 m;
    for (int i = 0; i < 9; ++i) m.a[i] = a.matrix[i];
    // Accept printed matrices, then snap back onto SO(3).
    Rotation::from_matrix(m, 1e-6);
    return Rotation::orthonormalized(m);
  }
  if (!a.axis.empty()) {
    const Vec3 ax{a.axis[0], a.axis[1], a.axis[2]};
    if (ax.norm() == 0.0) throw DomainError("--goal-axis must be non-zero");
    return exp_skew(ax.normalized(), a.angle);
  }
  const PathSpec p = path_from_json(load_json(a.path_file));
  return path_endpoint(PathSpec(radius, p.segments())).rot();
}

void add_goal_options(CLI::App* cmd, GoalArgs& a) {
  cmd->add_option("--goal", a.matrix, "goal rotation, 9 numbers row-major")->expected(9);
  auto* axis = cmd->add_option("--goal-axis", a.axis, "goal as rotation axis x,y,z")
                   ->expected(3)
                   ->delimiter(',');
  cmd->add_option("--goal-angle", a.angle, "rotation angle about --goal-axis (rad)")->needs(axis);
  cmd->add_option("--goal-path", a.path_file, "goal as the endpoint of a path JSON file");
}

std::string fmt(double v) {
  if (std::isnan(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string plan_csv(const PlanResult& res) {
  std::ostringstream os;
  os << "family,length,admissible,best,angles\n";
  for (const PlannedCandidate& c : res.candidates) {
    const bool best = res.best && c.solution.family == res.best->family &&
                      c.solution.angles == res.best->angles;
    os << c.solution.family.label() << ',' << fmt(c.solution.length) << ','
       << (c.admissible ? 1 : 0) << ',' << (best ? 1 : 0) << ',';
    for (std::size_t i = 0; i < c.solution.angles.size(); ++i) {
      os << (i ? " " : "") << fmt(c.solution.angles[i]);
    }
    os << '\n';
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Shortest curvature-bounded paths on the unit sphere"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--accept-tol", g.accept_tol, "BVP acceptance tolerance")->check(CLI::PositiveNumber);
  app.add_option("--grid-pts", g.grid_pts, "multi-start points per dimension (0: default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--min-angle", g.min_angle, "arcs below this collapse to a shorter word")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  double r = 0.0;
  double phi = 0.0;

  auto* plan_cmd = app.add_subcommand("plan", "shortest path from the identity to a goal");
  GoalArgs plan_goal;
  std::string emit_path;
  double emit_ds = 0.01;
  plan_cmd->add_option("--r", r, "turn radius in (0, 1)")->required();
  add_goal_options(plan_cmd, plan_goal);
  plan_cmd->add_option("--emit-path", emit_path, "write samples of the best path as CSV");
  plan_cmd->add_option("--ds", emit_ds, "arc-length spacing for --emit-path")
      ->check(CLI::PositiveNumber);

  auto* classify_cmd = app.add_subcommand("classify", "word of the shortest path");
  GoalArgs classify_goal;
  classify_cmd->add_option("--r", r, "turn radius in (0, 1)")->required();
  add_goal_options(classify_cmd, classify_goal);

  auto* sweep_cmd = app.add_subcommand("sweep", "classification sweep over (r, phi)");
  SweepConfig cfg;
  unsigned threads = 1;
  bool progress = false;
  sweep_cmd->add_option("--alpha-deg", cfg.alpha_deg);
  sweep_cmd->add_option("--phi-start", cfg.phi_start_deg, "degrees");
  sweep_cmd->add_option("--phi-end", cfg.phi_end_deg, "degrees");
  sweep_cmd->add_option("--phi-step", cfg.phi_step_deg, "degrees");
  sweep_cmd->add_option("--r-start", cfg.r_start);
  sweep_cmd->add_option("--r-end", cfg.r_end);
  sweep_cmd->add_option("--r-step", cfg.r_step);
  sweep_cmd->add_option("--threads", threads, "worker threads (0: all cores)");
  sweep_cmd->add_flag("--progress", progress, "report progress on stderr");

  auto* exist_cmd = app.add_subcommand("existence", "which path classes reach the goal per r");
  std::vector<double> r_list;
  GoalArgs exist_goal;
  bool bisect = false;
  exist_cmd->add_option("--r-list", r_list, "radii")->delimiter(',')->required();
  exist_cmd->add_option("--goal", exist_goal.matrix, "goal (default diag(1,-1,-1))")->expected(9);
  exist_cmd->add_flag("--bisect", bisect, "also locate the CGC and CCC existence boundaries");

  auto* id_cmd = app.add_subcommand("identities", "closed forms against matrix products");
  id_cmd->add_option("--r", r)->required();
  id_cmd->add_option("--phi", phi, "radians")->required();

  auto* perturb_cmd = app.add_subcommand("perturb", "fitted and closed perturbation coefficients");
  perturb_cmd->add_option("--r", r)->required();
  perturb_cmd->add_option("--phi", phi, "radians")->required();

  auto* cert_cmd = app.add_subcommand("certify", "necessary-condition certificate of a path");
  std::string path_file;
  bool structural_only = false;
  cert_cmd->add_option("--path", path_file, "path JSON file")->required();
  cert_cmd->add_flag("--structural", structural_only, "word-level rules only");

  auto* sample_cmd = app.add_subcommand("sample", "positions along a path");
  double ds = 0.01;
  sample_cmd->add_option("--path", path_file, "path JSON file")->required();
  sample_cmd->add_option("--ds", ds, "arc-length spacing")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgs;
  }

  if (plan_cmd->parsed() || classify_cmd->parsed()) {
    const TurnRadius radius(r);
    const Rotation goal = goal_from(plan_cmd->parsed() ? plan_goal : classify_goal, radius);
    const PlanResult res = plan(goal, radius, g.solve());
    for (const std::string& w : res.warnings) std::cerr << "warning: " << w << '\n';
    if (!res.best) throw NoPathFound();
    if (classify_cmd->parsed()) {
      emit(g, g.json_out("csv") ? json{{"family", res.best_word()}}.dump() + "\n"
                                : res.best_word() + "\n");
      return 0;
    }
    if (!emit_path.empty()) {
      std::ofstream f(emit_path, std::ios::binary | std::ios::trunc);
      if (!f) throw IOError(emit_path, "cannot open for writing");
      write_samples_csv(f, sample_path(res.best->path(radius), Config(), emit_ds));
    }
    emit(g, g.json_out("json") ? to_json(res, radius).dump(2) + "\n" : plan_csv(res));
    return 0;
  }

  if (sweep_cmd->parsed()) {
    SweepOptions so;
    so.solve = g.solve();
    so.threads = threads;
    if (progress) {
      so.progress = [](std::size_t done, std::size_t total) {
        if (done % 100 == 0 || done == total) std::cerr << done << '/' << total << '\n';
      };
    }
    const std::vector<SweepRow> rows = run_sweep(cfg, so);
    if (g.json_out("csv")) {
      json arr = json::array();
      for (const SweepRow& row : rows) arr.push_back(to_json(row));
      emit(g, arr.dump(2) + "\n");
    } else {
      std::ostringstream os;
      write_csv(os, rows);
      emit(g, os.str());
    }
    return 0;
  }

  if (exist_cmd->parsed()) {
    Rotation goal = reversal_goal();
    if (!exist_goal.matrix.empty()) goal = goal_from(exist_goal, TurnRadius(0.5));
    const std::vector<ExistenceRow> rows = existence_study(r_list, goal, g.solve());
    json thresholds;
    if (bisect) {
      thresholds["CGC"] = existence_threshold(FamilyClass::CGC, 0.6, 0.8, goal, 1e-4, g.solve());
      thresholds["CCC"] = existence_threshold(FamilyClass::CCC, 0.8, 0.95, goal, 1e-4, g.solve());
    }
    if (g.json_out("csv")) {
      json arr = json::array();
      for (const ExistenceRow& row : rows) arr.push_back(to_json(row));
      json doc = {{"rows", arr}};
      if (bisect) doc["thresholds"] = thresholds;
      emit(g, doc.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << "r,family,exists,min_length,word\n";
      for (const ExistenceRow& row : rows) {
        os << fmt(row.r) << ',' << to_string(row.family_class) << ',' << (row.exists ? 1 : 0)
           << ',' << fmt(row.min_length) << ','
           << (row.shortest ? row.shortest->family.label() : "") << '\n';
      }
      if (bisect) {
        os << "# threshold CGC " << fmt(thresholds["CGC"].get<double>()) << "\n# threshold CCC "
           << fmt(thresholds["CCC"].get<double>()) << '\n';
      }
      emit(g, os.str());
    }
    return 0;
  }

  if (id_cmd->parsed()) {
    const std::vector<IdentityCheck> checks = identity_suite(r, phi);
    if (g.json_out("csv")) {
      json arr = json::array();
      for (const IdentityCheck& c : checks) {
        arr.push_back({{"name", c.name}, {"closed", c.closed}, {"numeric", c.product}, {"diff", c.diff()}});
      }
      emit(g, arr.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << std::left << std::setw(32) << "name" << std::right << std::setw(20) << "closed"
         << std::setw(20) << "numeric" << std::setw(12) << "|diff|" << '\n';
      for (const IdentityCheck& c : checks) {
        os << std::left << std::setw(32) << c.name << std::right << std::setprecision(12)
           << std::setw(20) << c.closed << std::setw(20) << c.product << std::setprecision(3)
           << std::setw(12) << c.diff() << '\n';
      }
      emit(g, os.str());
    }
    return 0;
  }

  if (perturb_cmd->parsed()) {
    const PerturbationFit fit = perturbation_numeric(r, phi);
    json samples = json::array();
    for (const PerturbationSample& s : fit.samples) {
      samples.push_back({{"alpha", s.alpha},
                         {"xi", s.xi},
                         {"eta", s.eta},
                         {"beta", s.beta},
                         {"delta", s.delta()},
                         {"residual", s.residual}});
    }
    json doc = {{"r", r}, {"phi", phi}, {"fitted", to_json(fit.coeffs)}, {"samples", samples}};
    doc["closed"] = r <= 0.5 ? to_json(perturbation_closed(r, phi)) : json(nullptr);
    emit(g, doc.dump(2) + "\n");
    return 0;
  }

  if (cert_cmd->parsed()) {
    const PathSpec p = path_from_json(load_json(path_file));
    const CertificateReport rep = structural_only ? structural_certificate(p) : pmp_certificate(p);
    emit(g, to_json(rep).dump(2) + "\n");
    return 0;
  }

  if (sample_cmd->parsed()) {
    const PathSpec p = path_from_json(load_json(path_file));
    std::ostringstream os;
    write_samples_csv(os, sample_path(p, Config(), ds));
    emit(g, os.str());
    return 0;
  }
  return kExitArgs;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NoPathFound& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoPath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitArgs;
  }
}
