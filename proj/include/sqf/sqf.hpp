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
#include <string>
#include <vector>

#include "sqf/ising_model.hpp"
#include "sqf/samplers.hpp"

namespace sqf {

enum class Strategy { vanilla, progressive_threshold, first_m, one_each_time };

std::string to_string(Strategy strategy);
/// Accepts the snake_case names plus the CLI spellings "progressive" and "one-each-time".
Strategy strategy_from_string(const std::string& text);

struct SqfConfig {
  double threshold = 0.6;  // z_f, strict: |z| must exceed it
  Strategy strategy = Strategy::vanilla;
  double threshold_increment = 0.05;
  std::size_t increment_every = 3;
  std::size_t m_limit = 5;
  std::size_t shots = 1000;
  std::size_t max_iterations = 64;
  /// Sampler settings; `shots` above takes precedence over sampler.shots and
  /// each iteration draws with a seed derived from (sampler.seed, iteration).
  SamplerParams sampler;

  void validate() const;
  /// Threshold used for candidate selection in `iteration` (0-based).
  double effective_threshold(std::size_t iteration) const;
};

struct FreezeRecord {
  Label label;
  Spin value = 1;
  double likeliness = 0.0;
  double merit = 0.0;
  std::size_t iteration = 0;
};

struct Candidate {
  Label label;
  Spin value = 1;
  double likeliness = 0.0;
};

/// (count(+1) - count(-1)) / m for one label, multiplicity-weighted.
double likeliness(const SampleSet& samples, const Label& label);

/// Likeliness of `target` over only the shots where `given` equals `value`.
/// Throws EmptyConditionError when no shot matches.
double conditional_likeliness(const SampleSet& samples, const Label& target, const Label& given,
                              Spin value);

/// h_i z + sum_j J_ij z <s_j | s_i = z> over the neighbours of `label`.
double freezing_merit(const IsingModel& model, const SampleSet& samples, const Label& label,
                      Spin value);

/// Candidates for this iteration under the configured strategy. Vanilla and
/// progressive return label order; first_m and one_each_time return
/// descending |z| with ties broken by label.
std::vector<Candidate> select_candidates(const SampleSet& samples, const SqfConfig& config,
                                         std::size_t iteration);

struct StepResult {
  IsingModel reduced;
  SampleSet samples;
  std::vector<FreezeRecord> freezes;
  double effective_threshold = 0.0;
};

/// One round: sample, select, verify merits against the same sample set,
/// then freeze every accepted candidate at once.
StepResult sqf_step(const IsingModel& model, const SqfConfig& config, std::size_t iteration,
                    const Sampler& sampler);

enum class Termination { no_freeze, max_iterations, fully_frozen };
std::string to_string(Termination reason);

struct IterationTrace {
  IsingModel model_before;
  SampleSet samples;
  std::vector<FreezeRecord> freezes;
  double effective_threshold = 0.0;
  double lowest_energy = 0.0;  // full-problem energy of the best shot this round
  double best_energy_so_far = 0.0;

  FreezeDirective directive() const;
};

struct SqfRun {
  std::vector<IterationTrace> iterations;
  IsingModel final_model;
  SpinAssignment best_assignment;  // over the original labels
  double best_energy = 0.0;
  Termination terminated_reason = Termination::no_freeze;

  /// Directives applied before iteration `k` (all of them when k == size()).
  std::vector<FreezeDirective> history(std::size_t k) const;
  std::size_t frozen_count() const;
};

SqfRun run_sqf(const IsingModel& model, const SqfConfig& config, const Sampler& sampler);
SqfRun run_sqf(const IsingModel& model, const SqfConfig& config);

/// Seed used for the sampler in a given iteration.
std::uint64_t iteration_seed(std::uint64_t seed, std::size_t iteration);

}  // namespace sqf
