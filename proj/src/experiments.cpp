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

#include "sdubins/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "sdubins/errors.hpp"
#include "sdubins/planner.hpp"

namespace sdubins {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr char kHeader[] = "r,phi_deg,best_family,best_length,second_family,second_length";

std::vector<double> grid(double start, double end, double step) {
  const auto n = static_cast<std::size_t>(std::llround((end - start) / step)) + 1;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = start + static_cast<double>(i) * step;
  return out;
}

double deg2rad(double d) { return d * kPi / 180.0; }

std::string fmt(double v) {
  if (std::isnan(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_num(const std::string& s) {
  if (s.empty()) return kNaN;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw InvalidPath("bad number in CSV: " + s);
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

constexpr const char* kCgcWords[] = {"LGL", "LGR", "RGL", "RGR"};
constexpr const char* kCccWords[] = {"LRL", "RLR"};

}  // namespace

void SweepConfig::validate() const {
  if (!(phi_step_deg > 0.0) || !(r_step > 0.0)) throw DomainError("sweep steps must be positive");
  if (!(phi_end_deg >= phi_start_deg) || !(r_end >= r_start)) {
    throw DomainError("sweep ranges must be non-empty");
  }
  if (!(r_start > 0.0 && r_end < 1.0)) throw DomainError("sweep radii must lie in (0, 1)");
}

std::vector<double> SweepConfig::phi_values_deg() const {
  return grid(phi_start_deg, phi_end_deg, phi_step_deg);
}

std::vector<double> SweepConfig::r_values() const { return grid(r_start, r_end, r_step); }

Rotation sweep_goal(double r, double phi_deg, double alpha_deg) {
  const double big = kPi + deg2rad(phi_deg);
  const PathSpec p(TurnRadius(r),
                   {{Direction::L, deg2rad(alpha_deg)}, {Direction::R, big}, {Direction::L, big}});
  return path_endpoint(p).rot();
}

SweepRow sweep_point(double r, double phi_deg, double alpha_deg, const SolveOptions& opts) {
  SweepRow row{r, phi_deg, "NONE", kNaN, "", kNaN};
  PlanResult res;
  try {
    res = plan(sweep_goal(r, phi_deg, alpha_deg), TurnRadius(r), opts);
  } catch (const NoPathFound&) {
    return row;
  }
  if (!res.best) return row;
  row.best_family = res.best->family.label();
  row.best_length = res.best->length;
  for (const PlannedCandidate& c : res.candidates) {
    if (!c.admissible || c.solution.family == res.best->family) continue;
    row.second_family = c.solution.family.label();
    row.second_length = c.solution.length;
    break;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const SweepOptions& opts) {
  cfg.validate();
  const std::vector<double> rs = cfg.r_values();
  const std::vector<double> phis = cfg.phi_values_deg();
  const std::size_t total = rs.size() * phis.size();
  std::vector<SweepRow> rows(total);

  unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mu;
  const auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      rows[i] = sweep_point(rs[i / phis.size()], phis[i % phis.size()], cfg.alpha_deg, opts.solve);
      const std::size_t d = ++done;
      if (opts.progress) {
        std::lock_guard lock(progress_mu);
        opts.progress(d, total);
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kHeader << '\n';
  for (const SweepRow& r : rows) {
    os << fmt(r.r) << ',' << fmt(r.phi_deg) << ',' << r.best_family << ',' << fmt(r.best_length)
       << ',' << r.second_family << ',' << fmt(r.second_length) << '\n';
  }
}

std::vector<SweepRow> parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kHeader) throw InvalidPath("missing sweep CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split(line);
    if (f.size() != 6) throw InvalidPath("sweep CSV row needs 6 fields: " + line);
    rows.push_back({parse_num(f[0]), parse_num(f[1]), f[2], parse_num(f[3]), f[4], parse_num(f[5])});
  }
  return rows;
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IOError(destination, "cannot open for writing");
  write_csv(out, rows);
  out.flush();
  if (!out) throw IOError(destination, "write failed");
}

std::vector<SweepRow> read_csv(const std::string& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw IOError(source, "cannot open for reading");
  return parse_csv(in);
}

std::string to_string(FamilyClass c) { return c == FamilyClass::CGC ? "CGC" : "CCC"; }

std::span<const char* const> class_words(FamilyClass c) {
  if (c == FamilyClass::CGC) return kCgcWords;
  return kCccWords;
}

Rotation reversal_goal() { return Rotation::trusted(Mat3::diag(1.0, -1.0, -1.0)); }

std::optional<CandidateSolution> class_solution(FamilyClass c, const Rotation& goal,
                                                const TurnRadius& radius,
                                                const SolveOptions& opts) {
  std::optional<CandidateSolution> best;
  for (const char* w : class_words(c)) {
    const Family f = Family::parse(w);
    for (CandidateSolution& s : solve_family(f, goal, radius, opts)) {
      if (!(s.family == f)) continue;
      if (!best || solution_less(s, *best)) best = std::move(s);
    }
  }
  return best;
}

std::vector<ExistenceRow> existence_study(std::span<const double> r_grid, const Rotation& goal,
                                          const SolveOptions& opts) {
  std::vector<ExistenceRow> out;
  for (double r : r_grid) {
    const TurnRadius radius(r);
    for (FamilyClass c : {FamilyClass::CGC, FamilyClass::CCC}) {
      ExistenceRow row{r, c, false, kNaN, class_solution(c, goal, radius, opts)};
      if (row.shortest) {
        row.exists = true;
        row.min_length = row.shortest->length;
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

double existence_threshold(FamilyClass c, double lo, double hi, const Rotation& goal, double tol,
                           const SolveOptions& opts) {
  const auto exists = [&](double r) {
    return class_solution(c, goal, TurnRadius(r), opts).has_value();
  };
  if (!(lo < hi) || !exists(lo) || exists(hi)) {
    throw DomainError("existence bracket must have a root at lo and none at hi");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (exists(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace sdubins
