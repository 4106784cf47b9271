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


#include <cstdint>

#include "kernel_bodies.hpp"

namespace sqf::kernels::omp {

std::vector<Spin> anneal(const CompiledModel& model, const AnnealSettings& settings,
                         std::uint64_t seed, std::size_t shots) {
  const auto betas = beta_ladder(settings);
  std::vector<Spin> out(shots * model.n);
  const auto count = static_cast<std::int64_t>(shots);

#pragma omp parallel
  {
    std::vector<std::size_t> order;
    std::vector<double> field;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < count; ++k) {
      const auto shot = static_cast<std::size_t>(k);
      detail::anneal_shot(model, betas, shot_seed(seed, shot),
                          std::span<Spin>(out).subspan(shot * model.n, model.n), order, field);
    }
  }
  return out;
}

std::vector<double> enumerate_energies(const CompiledModel& model) {
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << model.n);
  std::vector<double> energies(static_cast<std::size_t>(count));

#pragma omp parallel
  {
    std::vector<Spin> spins(model.n);
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < count; ++x) {
      decode_state(static_cast<std::uint64_t>(x), spins);
      energies[static_cast<std::size_t>(x)] = model.energy(spins);
    }
  }
  return energies;
}

std::vector<std::vector<double>> lowest_levels(const CompiledModel& model,
                                               std::span<const double> a_values,
                                               std::span<const double> b_values, std::size_t k) {
  std::vector<std::vector<double>> levels(a_values.size());
  const auto count = static_cast<std::int64_t>(a_values.size());

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < count; ++p) {
    const auto q = static_cast<std::size_t>(p);
    levels[q] = detail::lowest_eigenvalues(model, a_values[q], b_values[q], k);
  }
  return levels;
}

}  // namespace sqf::kernels::omp
