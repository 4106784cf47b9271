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


#include "kernel_bodies.hpp"

namespace sqf::kernels::serial {

std::vector<Spin> anneal(const CompiledModel& model, const AnnealSettings& settings,
                         std::uint64_t seed, std::size_t shots) {
  const auto betas = beta_ladder(settings);
  std::vector<Spin> out(shots * model.n);
  std::vector<std::size_t> order;
  std::vector<double> field;
  for (std::size_t k = 0; k < shots; ++k) {
    detail::anneal_shot(model, betas, shot_seed(seed, k),
                        std::span<Spin>(out).subspan(k * model.n, model.n), order, field);
  }
  return out;
}

std::vector<double> enumerate_energies(const CompiledModel& model) {
  const std::uint64_t count = std::uint64_t{1} << model.n;
  std::vector<double> energies(count);
  std::vector<Spin> spins(model.n);
  for (std::uint64_t x = 0; x < count; ++x) {
    decode_state(x, spins);
    energies[x] = model.energy(spins);
  }
  return energies;
}

std::vector<std::vector<double>> lowest_levels(const CompiledModel& model,
                                               std::span<const double> a_values,
                                               std::span<const double> b_values, std::size_t k) {
  std::vector<std::vector<double>> levels(a_values.size());
  for (std::size_t p = 0; p < a_values.size(); ++p) {
    levels[p] = detail::lowest_eigenvalues(model, a_values[p], b_values[p], k);
  }
  return levels;
}

}  // namespace sqf::kernels::serial
