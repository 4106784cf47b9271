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


/** @file
 * Data-parallel inner loops. Every kernel has a serial reference in
 * `kernels::serial` and an OpenMP version in `kernels::omp` that produces
 * bit-identical output; the serial versions exist for testing and
 * benchmarking.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sqf/ising_model.hpp"

namespace sqf::kernels {

struct Coupling {
  std::size_t i;
  std::size_t j;
  double value;
};

/// Positional snapshot of an IsingModel with CSR adjacency for fast local fields.
struct CompiledModel {
  std::size_t n = 0;
  std::vector<double> bias;
  std::vector<Coupling> couplings;  // canonical order, same as IsingModel
  double offset = 0.0;
  std::vector<std::size_t> row_start;  // n + 1 entries
  std::vector<std::size_t> neighbour;
  std::vector<double> weight;

  static CompiledModel from(const IsingModel& model);

  /// Same summation order as IsingModel::energy_of, so results are bitwise equal.
  double energy(std::span<const Spin> spins) const { return energy_without_offset(spins) + offset; }
  double energy_without_offset(std::span<const Spin> spins) const;
  double local_field(std::span<const Spin> spins, std::size_t i) const;
};

struct AnnealSettings {
  std::size_t sweeps = 1000;
  double beta_start = 0.1;
  double beta_end = 10.0;
};

/// Geometric inverse-temperature ladder, one entry per sweep.
std::vector<double> beta_ladder(const AnnealSettings& settings);

/// Independent per-shot seed derived from (seed, shot) with splitmix64 mixing.
std::uint64_t shot_seed(std::uint64_t seed, std::uint64_t shot);

/// Spins of state `index` in enumeration order: bit i set means s_i = +1.
void decode_state(std::uint64_t index, std::span<Spin> spins);

/// Dense H = a * (-sum sigma_x) + b * (sum h sigma_z + sum J sigma_z sigma_z),
/// offset excluded. Basis bit i = 0 is sigma_z = +1 on variable i.
Eigen::MatrixXd transverse_field_matrix(const CompiledModel& model, double a, double b);

namespace serial {

/// Runs `shots` independent single-spin-flip Metropolis anneals; returns
/// shots * n spins, row-major by shot.
std::vector<Spin> anneal(const CompiledModel& model, const AnnealSettings& settings,
                         std::uint64_t seed, std::size_t shots);

/// Energy of every state 0 .. 2^n - 1 (see decode_state).
std::vector<double> enumerate_energies(const CompiledModel& model);

/// For each (a, b) schedule point, the k lowest eigenvalues ascending.
std::vector<std::vector<double>> lowest_levels(const CompiledModel& model,
                                               std::span<const double> a_values,
                                               std::span<const double> b_values, std::size_t k);

}  // namespace serial

namespace omp {

std::vector<Spin> anneal(const CompiledModel& model, const AnnealSettings& settings,
                         std::uint64_t seed, std::size_t shots);

std::vector<double> enumerate_energies(const CompiledModel& model);

std::vector<std::vector<double>> lowest_levels(const CompiledModel& model,
                                               std::span<const double> a_values,
                                               std::span<const double> b_values, std::size_t k);

}  // namespace omp

/// Caps OpenMP threads (no-op without OpenMP). 0 leaves the runtime default.
void set_thread_limit(int threads);
int max_threads();

}  // namespace sqf::kernels
