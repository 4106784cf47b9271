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


#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sqf/ising_model.hpp"

namespace sqf {

/// Largest model accepted by the dense Hamiltonian builder (2^14 states).
inline constexpr std::size_t kMaxSpectrumVars = 14;

struct SchedulePoint {
  double s = 0.0;
  double a = 0.0;  // GHz
  double b = 0.0;  // GHz
};

/// Tabulated A(s), B(s); evaluated by linear interpolation.
class AnnealSchedule {
 public:
  /// Validates: s strictly increasing from 0 to 1, A non-increasing and B
  /// non-decreasing, all values finite and non-negative, A(1) and B(0)
  /// within 5% of their peaks.
  explicit AnnealSchedule(std::vector<SchedulePoint> points);

  /// A(s) = scale (1 - s), B(s) = scale s.
  static AnnealSchedule linear(double scale_ghz = 5.0);
  /// CSV with columns s, A_GHz, B_GHz; a header row and '#' comments are skipped.
  static AnnealSchedule from_csv(std::istream& in);
  static AnnealSchedule load_csv(const std::string& path);

  /// (A(s), B(s)); throws ValidationError for s outside [0, 1].
  std::pair<double, double> at(double s) const;
  const std::vector<SchedulePoint>& points() const { return points_; }

 private:
  std::vector<SchedulePoint> points_;
};

/// A(s) (-sum sigma_x) + B(s) H_problem as a dense real symmetric matrix on
/// 2^n states. The model offset is left out; it shifts every level equally.
Eigen::MatrixXd build_hamiltonian(const IsingModel& model, const AnnealSchedule& schedule, double s);

std::vector<double> uniform_grid(std::size_t points = 201);

struct SpectrumSweep {
  std::vector<double> s_grid;
  std::vector<std::vector<double>> levels;  // levels[p] ascending, size k
  std::size_t k = 0;
};

SpectrumSweep sweep_spectrum(const IsingModel& model, const AnnealSchedule& schedule,
                             const std::vector<double>& s_grid, std::size_t k, bool parallel = true);

struct GapReport {
  double min_gap = 0.0;
  double s_at_min = 0.0;
  std::vector<std::pair<double, double>> gap_curve;
};

/// E_1 - E_0 along the sweep and its minimum (first occurrence).
GapReport min_gap(const SpectrumSweep& sweep);

struct DiscriminatingQubit {
  Label label;
  Spin value = 1;  // the ground-state value
};

/**
 * First label (in model order) where the classical ground assignment and the
 * lowest assignment of the next distinct energy differ. Degenerate levels
 * resolve to their lexicographically smallest assignment (-1 before +1).
 */
DiscriminatingQubit discriminating_qubit(const IsingModel& model);

struct GapWideningRow {
  std::uint64_t seed = 0;
  double gap_before = 0.0;
  double gap_after = 0.0;
  double ratio = 0.0;
  double s_before = 0.0;
  double s_after = 0.0;
  DiscriminatingQubit frozen;
  bool unique_ground = true;
};

/// Per seed: min gap of random_complete_ising(n, seed), then again after
/// freezing its discriminating qubit, under the same schedule and grid.
std::vector<GapWideningRow> gap_widening_experiment(std::size_t n, const std::vector<std::uint64_t>& seeds,
                                                    const AnnealSchedule& schedule = AnnealSchedule::linear(),
                                                    const std::vector<double>& s_grid = uniform_grid());

}  // namespace sqf
