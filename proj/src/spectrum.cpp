// Copyright 2026 The SQF Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sqf/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sqf/generators.hpp"
#include "sqf/kernels.hpp"
#include "sqf/samplers.hpp"

namespace sqf {

namespace {

constexpr double kEndpointFraction = 0.05;

void check_spectrum_size(const IsingModel& model) {
  if (model.num_vars() > kMaxSpectrumVars) {
    throw SizeLimitError("dense spectrum is limited to " + std::to_string(kMaxSpectrumVars) +
                         " variables, model has " + std::to_string(model.num_vars()));
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

AnnealSchedule::AnnealSchedule(std::vector<SchedulePoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw ValidationError("schedule needs at least two points");
  if (points_.front().s != 0.0 || points_.back().s != 1.0) {
    throw ValidationError("schedule must span s = 0 to s = 1");
  }
  double peak_a = 0.0;
  double peak_b = 0.0;
  for (std::size_t p = 0; p < points_.size(); ++p) {
    const auto& pt = points_[p];
    if (!std::isfinite(pt.s) || !std::isfinite(pt.a) || !std::isfinite(pt.b) || pt.a < 0.0 || pt.b < 0.0) {
      throw ValidationError("schedule values must be finite and non-negative");
    }
    if (p > 0) {
      const auto& prev = points_[p - 1];
      if (!(pt.s > prev.s)) throw ValidationError("schedule s must be strictly increasing");
      if (pt.a > prev.a) throw ValidationError("schedule A(s) must be non-increasing");
      if (pt.b < prev.b) throw ValidationError("schedule B(s) must be non-decreasing");
    }
    peak_a = std::max(peak_a, pt.a);
    peak_b = std::max(peak_b, pt.b);
  }
  if (points_.back().a > kEndpointFraction * peak_a) throw ValidationError("schedule A(1) must be near 0");
  if (points_.front().b > kEndpointFraction * peak_b) throw ValidationError("schedule B(0) must be near 0");
}

AnnealSchedule AnnealSchedule::linear(double scale_ghz) {
  if (!(scale_ghz > 0.0) || !std::isfinite(scale_ghz)) throw ValidationError("energy scale must be positive");
  return AnnealSchedule({{0.0, scale_ghz, 0.0}, {1.0, 0.0, scale_ghz}});
}

AnnealSchedule AnnealSchedule::from_csv(std::istream& in) {
  std::vector<SchedulePoint> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cells = split_csv(line);
    if (cells.size() < 3) throw ParseError("schedule line " + std::to_string(line_no) + ": expected 3 columns");
    try {
      SchedulePoint pt;
      pt.s = std::stod(cells[0]);
      pt.a = std::stod(cells[1]);
      pt.b = std::stod(cells[2]);
      points.push_back(pt);
    } catch (const std::logic_error&) {
      if (points.empty() && line_no == 1) continue;  // header
      throw ParseError("schedule line " + std::to_string(line_no) + ": not a number");
    }
  }
  return AnnealSchedule(std::move(points));
}

AnnealSchedule AnnealSchedule::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open schedule file '" + path + "'");
  return from_csv(in);
}

std::pair<double, double> AnnealSchedule::at(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) throw ValidationError("anneal fraction must lie in [0, 1]");
  auto hi = std::lower_bound(points_.begin(), points_.end(), s,
                             [](const SchedulePoint& p, double v) { return p.s < v; });
  if (hi->s == s) return {hi->a, hi->b};
  auto lo = hi - 1;
  const double t = (s - lo->s) / (hi->s - lo->s);
  return {lo->a + t * (hi->a - lo->a), lo->b + t * (hi->b - lo->b)};
}

Eigen::MatrixXd build_hamiltonian(const IsingModel& model, const AnnealSchedule& schedule, double s) {
  check_spectrum_size(model);
  const auto [a, b] = schedule.at(s);
  return kernels::transverse_field_matrix(kernels::CompiledModel::from(model), a, b);
}

std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) throw ValidationError("grid needs at least two points");
  std::vector<double> grid(points);
  for (std::size_t p = 0; p < points; ++p) {
    grid[p] = static_cast<double>(p) / static_cast<double>(points - 1);
  }
  return grid;
}

SpectrumSweep sweep_spectrum(const IsingModel& model, const AnnealSchedule& schedule,
                             const std::vector<double>& s_grid, std::size_t k, bool parallel) {
  check_spectrum_size(model);
  const std::size_t dim = std::size_t{1} << model.num_vars();
  if (k < 1 || k > dim) {
    throw ValidationError("k must lie in [1, " + std::to_string(dim) + "], got " + std::to_string(k));
  }
  std::vector<double> a_values;
  std::vector<double> b_values;
  for (const double s : s_grid) {
    const auto [a, b] = schedule.at(s);
    a_values.push_back(a);
    b_values.push_back(b);
  }
  const auto compiled = kernels::CompiledModel::from(model);
  SpectrumSweep sweep;
  sweep.s_grid = s_grid;
  sweep.k = k;
  sweep.levels = parallel ? kernels::omp::lowest_levels(compiled, a_values, b_values, k)
                          : kernels::serial::lowest_levels(compiled, a_values, b_values, k);
  return sweep;
}

GapReport min_gap(const SpectrumSweep& sweep) {
  if (sweep.k < 2) throw ValidationError("min_gap needs at least two levels per point");
  if (sweep.s_grid.empty()) throw ValidationError("min_gap needs a non-empty sweep");
  GapReport report;
  for (std::size_t p = 0; p < sweep.s_grid.size(); ++p) {
    const double gap = sweep.levels[p][1] - sweep.levels[p][0];
    report.gap_curve.emplace_back(sweep.s_grid[p], gap);
    if (p == 0 || gap < report.min_gap) {
      report.min_gap = gap;
      report.s_at_min = sweep.s_grid[p];
    }
  }
  return report;
}

DiscriminatingQubit discriminating_qubit(const IsingModel& model) {
  if (model.num_vars() > kMaxEnumerationVars) {
    throw SizeLimitError("discriminating_qubit enumerates at most " + std::to_string(kMaxEnumerationVars) +
                         " variables");
  }
  const std::size_t n = model.num_vars();
  const auto energies = kernels::omp::enumerate_energies(kernels::CompiledModel::from(model));
  const double ground = *std::min_element(energies.begin(), energies.end());

  bool has_excited = false;
  double excited = 0.0;
  for (const double e : energies) {
    if (same_level(e, ground)) continue;
    if (!has_excited || e < excited) excited = e;
    has_excited = true;
  }
  if (!has_excited) throw ValidationError("model has a single classical level; no qubit discriminates");

  std::vector<Spin> spins(n);
  std::vector<Spin> ground_state;
  std::vector<Spin> excited_state;
  for (std::uint64_t x = 0; x < energies.size(); ++x) {
    const bool in_ground = same_level(energies[x], ground);
    const bool in_excited = !in_ground && same_level(energies[x], excited);
    if (!in_ground && !in_excited) continue;
    kernels::decode_state(x, spins);
    auto& slot = in_ground ? ground_state : excited_state;
    if (slot.empty() || spins < slot) slot = spins;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (ground_state[i] != excited_state[i]) return {model.labels()[i], ground_state[i]};
  }
  throw Error("ground and excited assignments coincide");
}

std::vector<GapWideningRow> gap_widening_experiment(std::size_t n, const std::vector<std::uint64_t>& seeds,
                                                    const AnnealSchedule& schedule,
                                                    const std::vector<double>& s_grid) {
  if (n < 2) throw ValidationError("gap widening needs n >= 2 so a variable stays active");
  std::vector<GapWideningRow> rows;
  for (const auto seed : seeds) {
    const IsingModel model = random_complete_ising(n, seed);
    GapWideningRow row;
    row.seed = seed;
    row.unique_ground = classical_spectrum(model).front().degeneracy == 1;
    const auto before = min_gap(sweep_spectrum(model, schedule, s_grid, 2));
    row.frozen = discriminating_qubit(model);
    FreezeDirective directive;
    directive.frozen.emplace(row.frozen.label, row.frozen.value);
    const auto after = min_gap(sweep_spectrum(freeze(model, directive), schedule, s_grid, 2));
    row.gap_before = before.min_gap;
    row.s_before = before.s_at_min;
    row.gap_after = after.min_gap;
    row.s_after = after.s_at_min;
    row.ratio = row.gap_after / row.gap_before;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sqf
