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
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqf/ising_model.hpp"
#include "sqf/kernels.hpp"

namespace sqf {

/// Energies closer than this (relative, floor 1) are treated as one level.
inline constexpr double kLevelTolerance = 1e-9;
bool same_level(double a, double b);

/// Largest model accepted by exhaustive enumeration.
inline constexpr std::size_t kMaxEnumerationVars = 25;

struct SampleRecord {
  std::vector<Spin> spins;  // positional, in SampleSet::labels() order
  double energy = 0.0;
  std::size_t count = 0;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

/**
 * Aggregated shots over a fixed label order. Records are unique, sorted by
 * energy then by assignment (-1 before +1, first label most significant),
 * and their counts sum to total_shots().
 */
class SampleSet {
 public:
  SampleSet() = default;

  /// Aggregates `shots` rows of positional spins, computing energies from `model`.
  static SampleSet from_shots(const IsingModel& model, std::span<const Spin> flat, std::size_t shots);

  /// Builds from explicit records; every record energy is checked against `model`.
  static SampleSet from_records(const IsingModel& model, std::vector<SampleRecord> records);

  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<SampleRecord>& records() const { return records_; }
  std::size_t total_shots() const { return total_shots_; }
  std::size_t num_vars() const { return labels_.size(); }
  std::size_t index(const Label& label) const;

  const SampleRecord& lowest() const { return records_.front(); }
  SpinAssignment assignment(std::size_t record) const;

  friend bool operator==(const SampleSet&, const SampleSet&) = default;

 private:
  SampleSet(std::vector<Label> labels, std::vector<SampleRecord> records);

  std::vector<Label> labels_;
  std::vector<SampleRecord> records_;
  std::size_t total_shots_ = 0;
};

enum class SamplerKind { exact, simulated_annealing };

std::string to_string(SamplerKind kind);
SamplerKind sampler_kind_from_string(const std::string& text);

struct SamplerParams {
  std::size_t shots = 1000;
  std::uint64_t seed = 0;
  SamplerKind kind = SamplerKind::simulated_annealing;
  std::size_t sa_sweeps = 1000;
  std::pair<double, double> sa_beta_range{0.1, 10.0};
  /// Use the OpenMP kernels. Output is identical either way.
  bool parallel = true;
  /// Fold the global spin flip of models without linear terms (see fold_spin_flip).
  bool canonical_gauge = true;

  void validate() const;
};

/// True when every linear coefficient is exactly zero, so E(s) == E(-s).
bool has_spin_flip_symmetry(const IsingModel& model);

/// For spin-flip symmetric models, negates every shot whose first spin is -1
/// so that all shots share one gauge. Energies are unchanged. No-op otherwise.
void fold_spin_flip(const IsingModel& model, std::span<Spin> flat, std::size_t shots);

/// Stand-in for the annealer: anything that turns a model into m shots.
class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual SampleSet sample(const IsingModel& model, std::size_t shots, std::uint64_t seed) const = 0;
};

/// Single-spin-flip Metropolis with a geometric beta ladder; every shot
/// starts from its own uniformly random configuration.
class SimulatedAnnealingSampler final : public Sampler {
 public:
  explicit SimulatedAnnealingSampler(kernels::AnnealSettings settings, bool parallel = true,
                                     bool canonical_gauge = true);
  SampleSet sample(const IsingModel& model, std::size_t shots, std::uint64_t seed) const override;

 private:
  kernels::AnnealSettings settings_;
  bool parallel_;
  bool canonical_gauge_;
};

/// Returns every shot in the ground manifold, spread round-robin over the
/// degenerate ground assignments in lexicographic order. Ignores the seed.
class ExactSampler final : public Sampler {
 public:
  explicit ExactSampler(bool canonical_gauge = true) : canonical_gauge_(canonical_gauge) {}
  SampleSet sample(const IsingModel& model, std::size_t shots, std::uint64_t seed) const override;

 private:
  bool canonical_gauge_;
};

std::unique_ptr<Sampler> make_sampler(const SamplerParams& params);

SampleSet sample(const IsingModel& model, const SamplerParams& params);

/// Every assignment once (total_shots = 2^n). Throws SizeLimitError above 25 variables.
SampleSet enumerate_exact(const IsingModel& model, bool parallel = true);

struct SpectrumLevel {
  double energy = 0.0;
  std::size_t degeneracy = 0;
};

/// Distinct classical energies (offset included) with degeneracies, ascending.
std::vector<SpectrumLevel> classical_spectrum(const IsingModel& model, bool parallel = true);

}  // namespace sqf
