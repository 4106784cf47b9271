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


// Per-item bodies shared by the serial and OpenMP kernel loops.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "sqf/kernels.hpp"

namespace sqf::kernels::detail {

// Local fields are kept up to date incrementally, so a rejected proposal
// costs O(1). Proposals with beta * delta above kRejectExponent are rejected
// without drawing (acceptance probability below 1e-17).
inline constexpr double kRejectExponent = 40.0;

inline void anneal_shot(const CompiledModel& model, std::span<const double> betas,
                        std::uint64_t seed, std::span<Spin> spins, std::vector<std::size_t>& order,
                        std::vector<double>& field) {
  std::mt19937_64 rng(seed);
  // 53-bit uniform in [0, 1)
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (auto& s : spins) s = (rng() & 1U) ? Spin{1} : Spin{-1};
  order.resize(model.n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  field.resize(model.n);
  for (std::size_t i = 0; i < model.n; ++i) field[i] = model.local_field(spins, i);

  for (const double beta : betas) {
    std::shuffle(order.begin(), order.end(), rng);
    for (const std::size_t i : order) {
      const double delta = -2.0 * spins[i] * field[i];
      if (delta > 0.0) {
        const double exponent = beta * delta;
        if (exponent > kRejectExponent) continue;
        // 1 - x <= exp(-x) <= 1 / (1 + x) settles most draws without exp
        const double u = uniform();
        if (u >= 1.0 / (1.0 + exponent)) continue;
        if (u >= 1.0 - exponent && !(u < std::exp(-exponent))) continue;
      }
      spins[i] = static_cast<Spin>(-spins[i]);
      const double change = 2.0 * spins[i];
      for (std::size_t p = model.row_start[i]; p < model.row_start[i + 1]; ++p) {
        field[model.neighbour[p]] += change * model.weight[p];
      }
    }
  }
}

inline std::vector<double> lowest_eigenvalues(const CompiledModel& model, double a, double b,
                                              std::size_t k) {
  const Eigen::MatrixXd h = transverse_field_matrix(model, a, b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + static_cast<std::ptrdiff_t>(k)};
}

}  // namespace sqf::kernels::detail
