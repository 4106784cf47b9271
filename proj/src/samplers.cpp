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


#include "sqf/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace sqf {

bool same_level(double a, double b) {
  return std::abs(a - b) <= kLevelTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

namespace {

bool record_less(const SampleRecord& a, const SampleRecord& b) {
  if (a.energy != b.energy) return a.energy < b.energy;
  return a.spins < b.spins;
}

void check_enumeration_size(const IsingModel& model) {
  if (model.num_vars() > kMaxEnumerationVars) {
    throw SizeLimitError("exhaustive enumeration is limited to " + std::to_string(kMaxEnumerationVars) +
                         " variables, model has " + std::to_string(model.num_vars()));
  }
}

std::vector<double> all_energies(const IsingModel& model, bool parallel) {
  check_enumeration_size(model);
  const auto compiled = kernels::CompiledModel::from(model);
  return parallel ? kernels::omp::enumerate_energies(compiled)
                  : kernels::serial::enumerate_energies(compiled);
}

}  // namespace

SampleSet::SampleSet(std::vector<Label> labels, std::vector<SampleRecord> records)
    : labels_(std::move(labels)), records_(std::move(records)) {
  for (const auto& r : records_) {
    if (r.count == 0) throw ValidationError("sample record with zero multiplicity");
    if (r.spins.size() != labels_.size()) throw ValidationError("sample record width mismatch");
    for (const Spin s : r.spins) checked_spin(s);
    total_shots_ += r.count;
  }
  std::sort(records_.begin(), records_.end(), record_less);
  for (std::size_t k = 1; k < records_.size(); ++k) {
    if (records_[k].spins == records_[k - 1].spins) throw ValidationError("duplicate sample record");
  }
}

SampleSet SampleSet::from_shots(const IsingModel& model, std::span<const Spin> flat,
                                std::size_t shots) {
  const std::size_t n = model.num_vars();
  if (flat.size() != shots * n) throw ValidationError("shot buffer size mismatch");
  std::map<std::vector<Spin>, std::size_t> counts;
  if (n == 0) {
    if (shots > 0) counts[{}] = shots;
  } else {
    for (std::size_t k = 0; k < shots; ++k) {
      auto row = flat.subspan(k * n, n);
      ++counts[std::vector<Spin>(row.begin(), row.end())];
    }
  }
  std::vector<SampleRecord> records;
  records.reserve(counts.size());
  for (auto& [spins, count] : counts) {
    const double e = model.energy_of(spins);
    records.push_back({spins, e, count});
  }
  return SampleSet(model.labels(), std::move(records));
}

SampleSet SampleSet::from_records(const IsingModel& model, std::vector<SampleRecord> records) {
  for (const auto& r : records) {
    const double expected = model.energy_of(r.spins);
    if (std::abs(expected - r.energy) > 1e-9) {
      throw ValidationError("sample record energy " + std::to_string(r.energy) +
                            " does not match model energy " + std::to_string(expected));
    }
  }
  return SampleSet(model.labels(), std::move(records));
}

std::size_t SampleSet::index(const Label& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ValidationError("label '" + label.str() + "' not in sample set");
  return static_cast<std::size_t>(it - labels_.begin());
}

SpinAssignment SampleSet::assignment(std::size_t record) const {
  return from_positional(labels_, records_.at(record).spins);
}

std::string to_string(SamplerKind kind) {
  return kind == SamplerKind::exact ? "exact" : "simulated_annealing";
}

SamplerKind sampler_kind_from_string(const std::string& text) {
  if (text == "exact") return SamplerKind::exact;
  if (text == "simulated_annealing" || text == "sa") return SamplerKind::simulated_annealing;
  throw ValidationError("unknown sampler kind '" + text + "'");
}

void SamplerParams::validate() const {
  if (shots < 1) throw ValidationError("shots must be >= 1");
  if (sa_sweeps < 1) throw ValidationError("sa_sweeps must be >= 1");
  const auto [lo, hi] = sa_beta_range;
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && hi > lo)) {
    throw ValidationError("beta range must be positive and increasing");
  }
}

bool has_spin_flip_symmetry(const IsingModel& model) {
  const auto& h = model.linear_terms();
  return std::all_of(h.begin(), h.end(), [](double v) { return v == 0.0; });
}

void fold_spin_flip(const IsingModel& model, std::span<Spin> flat, std::size_t shots) {
  const std::size_t n = model.num_vars();
  if (n == 0 || !has_spin_flip_symmetry(model)) return;
  for (std::size_t k = 0; k < shots; ++k) {
    auto row = flat.subspan(k * n, n);
    if (row[0] > 0) continue;
    for (auto& s : row) s = static_cast<Spin>(-s);
  }
}

SimulatedAnnealingSampler::SimulatedAnnealingSampler(kernels::AnnealSettings settings, bool parallel,
                                                     bool canonical_gauge)
    : settings_(settings), parallel_(parallel), canonical_gauge_(canonical_gauge) {}

SampleSet SimulatedAnnealingSampler::sample(const IsingModel& model, std::size_t shots,
                                            std::uint64_t seed) const {
  if (shots < 1) throw ValidationError("shots must be >= 1");
  const auto compiled = kernels::CompiledModel::from(model);
  auto flat = parallel_ ? kernels::omp::anneal(compiled, settings_, seed, shots)
                        : kernels::serial::anneal(compiled, settings_, seed, shots);
  if (canonical_gauge_) fold_spin_flip(model, flat, shots);
  return SampleSet::from_shots(model, flat, shots);
}

SampleSet ExactSampler::sample(const IsingModel& model, std::size_t shots, std::uint64_t) const {
  if (shots < 1) throw ValidationError("shots must be >= 1");
  const std::size_t n = model.num_vars();
  if (n == 0) return SampleSet::from_shots(model, {}, shots);

  const auto energies = all_energies(model, true);
  const double ground = *std::min_element(energies.begin(), energies.end());
  std::vector<std::vector<Spin>> manifold;
  std::vector<Spin> spins(n);
  for (std::uint64_t x = 0; x < energies.size(); ++x) {
    if (!same_level(energies[x], ground)) continue;
    kernels::decode_state(x, spins);
    manifold.push_back(spins);
  }
  if (canonical_gauge_ && has_spin_flip_symmetry(model)) {
    std::erase_if(manifold, [](const std::vector<Spin>& s) { return s[0] < 0; });
  }
  std::sort(manifold.begin(), manifold.end());

  std::vector<Spin> flat;
  flat.reserve(shots * n);
  for (std::size_t k = 0; k < shots; ++k) {
    const auto& row = manifold[k % manifold.size()];
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return SampleSet::from_shots(model, flat, shots);
}

std::unique_ptr<Sampler> make_sampler(const SamplerParams& params) {
  params.validate();
  if (params.kind == SamplerKind::exact) return std::make_unique<ExactSampler>(params.canonical_gauge);
  kernels::AnnealSettings settings{params.sa_sweeps, params.sa_beta_range.first,
                                   params.sa_beta_range.second};
  return std::make_unique<SimulatedAnnealingSampler>(settings, params.parallel, params.canonical_gauge);
}

SampleSet sample(const IsingModel& model, const SamplerParams& params) {
  return make_sampler(params)->sample(model, params.shots, params.seed);
}

SampleSet enumerate_exact(const IsingModel& model, bool parallel) {
  const auto energies = all_energies(model, parallel);
  const std::size_t n = model.num_vars();
  std::vector<SampleRecord> records(energies.size());
  for (std::uint64_t x = 0; x < energies.size(); ++x) {
    auto& r = records[x];
    r.spins.resize(n);
    kernels::decode_state(x, r.spins);
    r.energy = energies[x];
    r.count = 1;
  }
  return SampleSet::from_records(model, std::move(records));
}

std::vector<SpectrumLevel> classical_spectrum(const IsingModel& model, bool parallel) {
  auto energies = all_energies(model, parallel);
  std::sort(energies.begin(), energies.end());
  std::vector<SpectrumLevel> levels;
  for (const double e : energies) {
    if (!levels.empty() && same_level(levels.back().energy, e)) {
      ++levels.back().degeneracy;
    } else {
      levels.push_back({e, 1});
    }
  }
  return levels;
}

}  // namespace sqf
