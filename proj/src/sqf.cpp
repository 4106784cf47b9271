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


#include "sqf/sqf.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "sqf/kernels.hpp"

namespace sqf {

namespace {

struct Tally {
  std::size_t shots = 0;
  long long sum = 0;
};

Tally tally(const SampleSet& samples, std::size_t target, std::size_t given, Spin value,
            bool conditioned) {
  Tally t;
  for (const auto& r : samples.records()) {
    if (conditioned && r.spins[given] != value) continue;
    t.shots += r.count;
    t.sum += static_cast<long long>(r.count) * r.spins[target];
  }
  return t;
}

double ratio(const Tally& t) { return static_cast<double>(t.sum) / static_cast<double>(t.shots); }

bool by_strength(const Candidate& a, const Candidate& b) {
  const double za = std::abs(a.likeliness);
  const double zb = std::abs(b.likeliness);
  if (za != zb) return za > zb;
  return a.label < b.label;
}

/// Merit for position `i` when the model and sample set share label order.
/// Falls back to unconditional likeliness if no shot has s_i == value.
double merit_at(const IsingModel& model, const SampleSet& samples, std::size_t i, Spin value) {
  const auto neighbours = model.neighbours(i);
  std::size_t matching = 0;
  std::vector<long long> sums(neighbours.size(), 0);
  for (const auto& r : samples.records()) {
    if (r.spins[i] != value) continue;
    matching += r.count;
    for (std::size_t k = 0; k < neighbours.size(); ++k) {
      sums[k] += static_cast<long long>(r.count) * r.spins[neighbours[k].first];
    }
  }
  if (matching == 0) {
    std::clog << "warning: no shot has '" << model.labels()[i].str() << "' = " << int{value}
              << "; merit uses unconditional likeliness\n";
    std::fill(sums.begin(), sums.end(), 0);
    for (const auto& r : samples.records()) {
      matching += r.count;
      for (std::size_t k = 0; k < neighbours.size(); ++k) {
        sums[k] += static_cast<long long>(r.count) * r.spins[neighbours[k].first];
      }
    }
  }
  double merit = model.linear(i) * value;
  for (std::size_t k = 0; k < neighbours.size(); ++k) {
    const double z = static_cast<double>(sums[k]) / static_cast<double>(matching);
    merit += neighbours[k].second * value * z;
  }
  return merit;
}

}  // namespace

std::string to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::vanilla: return "vanilla";
    case Strategy::progressive_threshold: return "progressive_threshold";
    case Strategy::first_m: return "first_m";
    case Strategy::one_each_time: return "one_each_time";
  }
  return "vanilla";
}

Strategy strategy_from_string(const std::string& text) {
  if (text == "vanilla") return Strategy::vanilla;
  if (text == "progressive_threshold" || text == "progressive") return Strategy::progressive_threshold;
  if (text == "first_m" || text == "first-m") return Strategy::first_m;
  if (text == "one_each_time" || text == "one-each-time") return Strategy::one_each_time;
  throw ValidationError("unknown strategy '" + text + "'");
}

std::string to_string(Termination reason) {
  switch (reason) {
    case Termination::no_freeze: return "no_freeze";
    case Termination::max_iterations: return "max_iterations";
    case Termination::fully_frozen: return "fully_frozen";
  }
  return "no_freeze";
}

void SqfConfig::validate() const {
  if (!(threshold > 0.0 && threshold < 1.0)) throw ValidationError("threshold must lie in (0, 1)");
  if (!(threshold_increment > 0.0) || !std::isfinite(threshold_increment)) {
    throw ValidationError("threshold_increment must be positive");
  }
  if (increment_every < 1) throw ValidationError("increment_every must be >= 1");
  if (m_limit < 1) throw ValidationError("m_limit must be >= 1");
  if (shots < 1) throw ValidationError("shots must be >= 1");
  if (max_iterations < 1) throw ValidationError("max_iterations must be >= 1");
  sampler.validate();
}

double SqfConfig::effective_threshold(std::size_t iteration) const {
  if (strategy != Strategy::progressive_threshold) return threshold;
  const auto steps = static_cast<double>(iteration / increment_every);
  return threshold + threshold_increment * steps;
}

double likeliness(const SampleSet& samples, const Label& label) {
  if (samples.total_shots() == 0) throw ValidationError("likeliness of an empty sample set");
  const std::size_t i = samples.index(label);
  return ratio(tally(samples, i, i, 0, false));
}

double conditional_likeliness(const SampleSet& samples, const Label& target, const Label& given,
                              Spin value) {
  checked_spin(value);
  if (target == given) throw ValidationError("conditional likeliness needs distinct labels");
  const Tally t = tally(samples, samples.index(target), samples.index(given), value, true);
  if (t.shots == 0) {
    throw EmptyConditionError("no shot has '" + given.str() + "' = " + std::to_string(value));
  }
  return ratio(t);
}

double freezing_merit(const IsingModel& model, const SampleSet& samples, const Label& label,
                      Spin value) {
  checked_spin(value);
  const std::size_t i = model.index(label);
  double merit = model.linear(i) * value;
  for (const auto& [j, coupling] : model.neighbours(i)) {
    const double z = conditional_likeliness(samples, model.labels()[j], label, value);
    merit += coupling * value * z;
  }
  return merit;
}

std::vector<Candidate> select_candidates(const SampleSet& samples, const SqfConfig& config,
                                         std::size_t iteration) {
  std::vector<Candidate> all;
  all.reserve(samples.num_vars());
  for (const auto& label : samples.labels()) {
    const double z = likeliness(samples, label);
    all.push_back({label, z > 0.0 ? Spin{1} : Spin{-1}, z});
  }

  if (config.strategy == Strategy::one_each_time) {
    if (all.empty()) return {};
    return {*std::min_element(all.begin(), all.end(), by_strength)};
  }

  const double threshold = config.effective_threshold(iteration);
  std::vector<Candidate> passing;
  for (const auto& c : all) {
    if (std::abs(c.likeliness) > threshold) passing.push_back(c);
  }
  if (config.strategy == Strategy::first_m) {
    std::sort(passing.begin(), passing.end(), by_strength);
    if (passing.size() > config.m_limit) passing.resize(config.m_limit);
  }
  return passing;
}

std::uint64_t iteration_seed(std::uint64_t seed, std::size_t iteration) {
  return kernels::shot_seed(seed ^ 0x5153465f49544552ULL, iteration);
}

StepResult sqf_step(const IsingModel& model, const SqfConfig& config, std::size_t iteration,
                    const Sampler& sampler) {
  if (model.num_vars() == 0) throw ValidationError("sqf_step needs at least one active variable");
  StepResult out;
  out.effective_threshold = config.effective_threshold(iteration);
  out.samples = sampler.sample(model, config.shots, iteration_seed(config.sampler.seed, iteration));
  if (out.samples.labels() != model.labels()) throw ValidationError("sampler returned foreign labels");

  const auto candidates = select_candidates(out.samples, config, iteration);
  std::vector<double> merits(candidates.size());
  const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto& c = candidates[static_cast<std::size_t>(k)];
    merits[static_cast<std::size_t>(k)] = merit_at(model, out.samples, model.index(c.label), c.value);
  }

  const bool verify = config.strategy != Strategy::one_each_time;
  FreezeDirective directive;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (verify && !(merits[k] < 0.0)) continue;
    const auto& c = candidates[k];
    out.freezes.push_back({c.label, c.value, c.likeliness, merits[k], iteration});
    directive.frozen.emplace(c.label, c.value);
  }
  out.reduced = directive.empty() ? model : freeze(model, directive);
  return out;
}

FreezeDirective IterationTrace::directive() const {
  FreezeDirective d;
  for (const auto& f : freezes) d.frozen.emplace(f.label, f.value);
  return d;
}

std::vector<FreezeDirective> SqfRun::history(std::size_t k) const {
  std::vector<FreezeDirective> out;
  for (std::size_t t = 0; t < k && t < iterations.size(); ++t) {
    if (!iterations[t].freezes.empty()) out.push_back(iterations[t].directive());
  }
  return out;
}

std::size_t SqfRun::frozen_count() const {
  std::size_t total = 0;
  for (const auto& it : iterations) total += it.freezes.size();
  return total;
}

SqfRun run_sqf(const IsingModel& model, const SqfConfig& config, const Sampler& sampler) {
  config.validate();
  SqfRun run;
  run.best_energy = std::numeric_limits<double>::infinity();
  std::vector<FreezeDirective> history;
  IsingModel current = model;

  for (std::size_t iteration = 0;; ++iteration) {
    if (iteration >= config.max_iterations) {
      run.terminated_reason = Termination::max_iterations;
      break;
    }
    IterationTrace trace;
    trace.model_before = current;
    trace.effective_threshold = config.effective_threshold(iteration);
    IsingModel next;
    if (current.num_vars() == 0) {
      trace.samples = sampler.sample(current, config.shots, iteration_seed(config.sampler.seed, iteration));
    } else {
      auto step = sqf_step(current, config, iteration, sampler);
      trace.samples = std::move(step.samples);
      trace.freezes = std::move(step.freezes);
      next = std::move(step.reduced);
    }

    // reduced energies already include every absorbed offset
    const auto& best = trace.samples.lowest();
    trace.lowest_energy = best.energy;
    if (best.energy < run.best_energy) {
      run.best_energy = best.energy;
      run.best_assignment = reconstruct(trace.samples.assignment(0), history, model.labels());
    }
    trace.best_energy_so_far = run.best_energy;

    const bool fully_frozen = current.num_vars() == 0;
    const bool stalled = trace.freezes.empty();
    if (!stalled) history.push_back(trace.directive());
    run.iterations.push_back(std::move(trace));

    if (fully_frozen) {
      run.terminated_reason = Termination::fully_frozen;
      break;
    }
    if (stalled) {
      run.terminated_reason = Termination::no_freeze;
      break;
    }
    current = std::move(next);
  }
  run.final_model = std::move(current);
  return run;
}

SqfRun run_sqf(const IsingModel& model, const SqfConfig& config) {
  auto sampler = make_sampler(config.sampler);
  return run_sqf(model, config, *sampler);
}

}  // namespace sqf
