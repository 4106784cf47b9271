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


#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sqf/kernels.hpp"

namespace sqf::kernels {

CompiledModel CompiledModel::from(const IsingModel& model) {
  CompiledModel out;
  out.n = model.num_vars();
  out.bias = model.linear_terms();
  out.offset = model.offset();
  out.couplings.reserve(model.quadratic_terms().size());
  std::vector<std::size_t> degree(out.n, 0);
  for (const auto& [key, value] : model.quadratic_terms()) {
    out.couplings.push_back({key.first, key.second, value});
    ++degree[key.first];
    ++degree[key.second];
  }
  out.row_start.assign(out.n + 1, 0);
  for (std::size_t i = 0; i < out.n; ++i) out.row_start[i + 1] = out.row_start[i] + degree[i];
  out.neighbour.resize(out.row_start[out.n]);
  out.weight.resize(out.row_start[out.n]);
  std::vector<std::size_t> fill(out.row_start.begin(), out.row_start.end() - 1);
  for (const auto& c : out.couplings) {
    out.neighbour[fill[c.i]] = c.j;
    out.weight[fill[c.i]++] = c.value;
    out.neighbour[fill[c.j]] = c.i;
    out.weight[fill[c.j]++] = c.value;
  }
  return out;
}

double CompiledModel::energy_without_offset(std::span<const Spin> spins) const {
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) e += bias[i] * spins[i];
  for (const auto& c : couplings) e += c.value * spins[c.i] * spins[c.j];
  return e;
}

double CompiledModel::local_field(std::span<const Spin> spins, std::size_t i) const {
  double field = bias[i];
  for (std::size_t p = row_start[i]; p < row_start[i + 1]; ++p) field += weight[p] * spins[neighbour[p]];
  return field;
}

std::vector<double> beta_ladder(const AnnealSettings& settings) {
  std::vector<double> betas(settings.sweeps);
  if (settings.sweeps == 1) {
    betas[0] = settings.beta_end;
    return betas;
  }
  const double ratio = settings.beta_end / settings.beta_start;
  for (std::size_t t = 0; t < settings.sweeps; ++t) {
    betas[t] = settings.beta_start *
               std::pow(ratio, static_cast<double>(t) / static_cast<double>(settings.sweeps - 1));
  }
  return betas;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t shot_seed(std::uint64_t seed, std::uint64_t shot) {
  return splitmix64(splitmix64(seed) ^ splitmix64(shot + 0x632be59bd9b4e019ULL));
}

void decode_state(std::uint64_t index, std::span<Spin> spins) {
  for (std::size_t i = 0; i < spins.size(); ++i) spins[i] = ((index >> i) & 1U) ? Spin{1} : Spin{-1};
}

Eigen::MatrixXd transverse_field_matrix(const CompiledModel& model, double a, double b) {
  const std::size_t dim = std::size_t{1} << model.n;
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
  std::vector<Spin> spins(model.n);
  for (std::size_t basis = 0; basis < dim; ++basis) {
    // |0> is the sigma_z = +1 eigenstate
    for (std::size_t i = 0; i < model.n; ++i) spins[i] = ((basis >> i) & 1U) ? Spin{-1} : Spin{1};
    const auto row = static_cast<Eigen::Index>(basis);
    h(row, row) = b * model.energy_without_offset(spins);
    for (std::size_t i = 0; i < model.n; ++i) {
      h(row, static_cast<Eigen::Index>(basis ^ (std::size_t{1} << i))) = -a;
    }
  }
  return h;
}

void set_thread_limit(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sqf::kernels
