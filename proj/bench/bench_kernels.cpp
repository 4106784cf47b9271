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


// Serial reference versus OpenMP kernels. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "sqf/generators.hpp"
#include "sqf/kernels.hpp"
#include "sqf/spectrum.hpp"

namespace {

using sqf::kernels::CompiledModel;

CompiledModel nae_model(std::size_t n) {
  return CompiledModel::from(sqf::random_nae3sat(n, sqf::kDefaultClauseRatio, 1, true).model);
}

template <auto Kernel>
void BM_anneal(benchmark::State& state) {
  const auto model = nae_model(static_cast<std::size_t>(state.range(0)));
  const sqf::kernels::AnnealSettings settings{100, 0.1, 10.0};
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(model, settings, 7, 64));
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_anneal<sqf::kernels::serial::anneal>)->Name("anneal/serial")->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_anneal<sqf::kernels::omp::anneal>)->Name("anneal/omp")->Arg(100)->Unit(benchmark::kMillisecond);

template <auto Kernel>
void BM_enumerate(benchmark::State& state) {
  const auto model = CompiledModel::from(sqf::random_complete_ising(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(model));
}
BENCHMARK(BM_enumerate<sqf::kernels::serial::enumerate_energies>)
    ->Name("enumerate/serial")->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate<sqf::kernels::omp::enumerate_energies>)
    ->Name("enumerate/omp")->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

template <auto Kernel>
void BM_levels(benchmark::State& state) {
  const auto model = CompiledModel::from(sqf::random_complete_ising(static_cast<std::size_t>(state.range(0)), 1));
  const auto grid = sqf::uniform_grid(21);
  std::vector<double> a;
  std::vector<double> b;
  for (double s : grid) {
    a.push_back(5.0 * (1.0 - s));
    b.push_back(5.0 * s);
  }
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(model, a, b, 2));
}
BENCHMARK(BM_levels<sqf::kernels::serial::lowest_levels>)->Name("spectrum/serial")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_levels<sqf::kernels::omp::lowest_levels>)->Name("spectrum/omp")->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
