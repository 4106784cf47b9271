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

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "sqf/generators.hpp"
#include "sqf/ising_model.hpp"
#include "sqf/samplers.hpp"
#include "sqf/spectrum.hpp"
#include "sqf/sqf.hpp"

namespace sqf::io {

using nlohmann::json;

json label_to_json(const Label& label);
Label label_from_json(const json& value);

/// A problem file: an Ising or QUBO model, optionally carrying NAE3SAT clauses.
struct Problem {
  enum class Kind { ising, qubo };
  Kind kind = Kind::ising;
  IsingModel ising;
  QuboModel qubo;
  std::optional<Nae3SatInstance> nae3sat;

  /// The Ising form (converted for QUBO files).
  IsingModel as_ising() const;
};

json to_json(const IsingModel& model);
json to_json(const QuboModel& model);
/// Model fields plus "clauses" and "planted" (null when not planted).
json to_json(const Nae3SatInstance& instance);
Problem problem_from_json(const json& doc);

json to_json(const SampleSet& samples);
/// Records are re-validated against `model`.
SampleSet sample_set_from_json(const json& doc, const IsingModel& model);
/// One row per record: energy, count, then one column per label.
void write_sample_set_csv(std::ostream& out, const SampleSet& samples);
/// energy,count per exact distinct energy, ascending.
void write_histogram_csv(std::ostream& out, const SampleSet& samples);

json to_json(const SqfConfig& config);
json run_report(const SqfRun& run, const SqfConfig& config, const Problem* problem = nullptr);
/// Per-iteration variable states (active / frozen:+1 / frozen:-1) and remaining edges.
json graph_evolution(const IsingModel& original, const SqfRun& run);
/// iteration,energy,count for every iteration.
void write_run_histograms_csv(std::ostream& out, const SqfRun& run);

void write_sweep_csv(std::ostream& out, const SpectrumSweep& sweep);
json to_json(const GapReport& report, bool with_curve = false);

/// Parses JSON text; errors become ParseError with line and column.
json parse(const std::string& text, const std::string& source);
json load_json(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
/// Pretty-printed with a trailing newline.
std::string dump(const json& doc);

}  // namespace sqf::io
