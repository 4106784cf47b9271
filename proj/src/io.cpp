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


#include "sqf/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sqf::io {

namespace {

std::vector<std::pair<double, std::size_t>> histogram(const SampleSet& samples) {
  std::vector<std::pair<double, std::size_t>> bins;
  for (const auto& r : samples.records()) {
    if (!bins.empty() && bins.back().first == r.energy) bins.back().second += r.count;
    else bins.emplace_back(r.energy, r.count);
  }
  return bins;
}

json labels_json(const std::vector<Label>& labels) {
  json out = json::array();
  for (const auto& l : labels) out.push_back(label_to_json(l));
  return out;
}

json form_json(const QuadraticForm& form, const char* type) {
  json doc;
  doc["type"] = type;
  doc["labels"] = labels_json(form.labels());
  json linear = json::object();
  for (std::size_t i = 0; i < form.num_vars(); ++i) linear[form.labels()[i].str()] = form.linear(i);
  doc["linear"] = std::move(linear);
  json quadratic = json::array();
  for (const auto& [key, value] : form.quadratic_terms()) {
    quadratic.push_back({label_to_json(form.labels()[key.first]), label_to_json(form.labels()[key.second]), value});
  }
  doc["quadratic"] = std::move(quadratic);
  doc["offset"] = form.offset();
  return doc;
}

template <class Form>
Form form_from_json(const json& doc) {
  if (!doc.contains("labels") || !doc["labels"].is_array()) throw ParseError("problem file needs a 'labels' array");
  std::vector<Label> labels;
  std::unordered_map<std::string, Label> by_text;
  for (const auto& item : doc["labels"]) {
    Label label = label_from_json(item);
    if (!by_text.emplace(label.str(), label).second) {
      throw ValidationError("label '" + label.str() + "' appears twice (or as both integer and string)");
    }
    labels.push_back(std::move(label));
  }
  Form form(labels);
  if (doc.contains("linear")) {
    for (const auto& [key, value] : doc["linear"].items()) {
      auto it = by_text.find(key);
      if (it == by_text.end()) throw ValidationError("linear term for unknown label '" + key + "'");
      if (!value.is_number()) throw ParseError("linear coefficient for '" + key + "' is not a number");
      form.add_linear(it->second, value.template get<double>());
    }
  }
  if (doc.contains("quadratic")) {
    for (const auto& term : doc["quadratic"]) {
      if (!term.is_array() || term.size() != 3 || !term[2].is_number()) {
        throw ParseError("quadratic entries must be [label, label, coefficient]");
      }
      const Label a = label_from_json(term[0]);
      const Label b = label_from_json(term[1]);
      if (!form.contains(a) || !form.contains(b)) throw ValidationError("quadratic term references an unknown label");
      form.add_quadratic(a, b, term[2].template get<double>());
    }
  }
  if (doc.contains("offset")) {
    if (!doc["offset"].is_number()) throw ParseError("'offset' is not a number");
    form.set_offset(doc["offset"].template get<double>());
  }
  return form;
}

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

json label_to_json(const Label& label) {
  if (label.is_integer()) return label.as_integer();
  return label.as_string();
}

Label label_from_json(const json& value) {
  if (value.is_number_integer()) return Label(value.get<std::int64_t>());
  if (value.is_string()) return Label(value.get<std::string>());
  throw ParseError("labels must be integers or strings, got " + value.dump());
}

IsingModel Problem::as_ising() const { return kind == Kind::ising ? ising : qubo_to_ising(qubo); }

json to_json(const IsingModel& model) { return form_json(model, "ising"); }
json to_json(const QuboModel& model) { return form_json(model, "qubo"); }

json to_json(const Nae3SatInstance& instance) {
  json doc = to_json(instance.model);
  json clauses = json::array();
  for (const auto& clause : instance.clauses) {
    json c = json::array();
    for (const auto& lit : clause) c.push_back({label_to_json(lit.variable), int{lit.polarity}});
    clauses.push_back(std::move(c));
  }
  doc["clauses"] = std::move(clauses);
  if (instance.planted) {
    json planted = json::array();
    for (const auto& label : instance.model.labels()) planted.push_back(int{instance.planted->at(label)});
    doc["planted"] = std::move(planted);
  } else {
    doc["planted"] = nullptr;
  }
  return doc;
}

Problem problem_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("problem file must be a JSON object");
  const std::string type = doc.value("type", std::string("ising"));
  Problem problem;
  if (type == "ising") {
    problem.kind = Problem::Kind::ising;
    problem.ising = form_from_json<IsingModel>(doc);
  } else if (type == "qubo") {
    problem.kind = Problem::Kind::qubo;
    problem.qubo = form_from_json<QuboModel>(doc);
  } else {
    throw ValidationError("problem type must be 'ising' or 'qubo', got '" + type + "'");
  }

  if (doc.contains("clauses")) {
    if (problem.kind != Problem::Kind::ising) throw ValidationError("clauses require an ising problem");
    std::vector<Clause> clauses;
    for (const auto& c : doc["clauses"]) {
      if (!c.is_array() || c.size() != 3) throw ParseError("each clause must hold three [variable, polarity] literals");
      Clause clause;
      for (std::size_t k = 0; k < 3; ++k) {
        if (!c[k].is_array() || c[k].size() != 2 || !c[k][1].is_number_integer()) {
          throw ParseError("literals must be [variable, polarity]");
        }
        clause[k].variable = label_from_json(c[k][0]);
        clause[k].polarity = checked_spin(c[k][1].get<long long>());
      }
      clauses.push_back(clause);
    }
    std::optional<SpinAssignment> planted;
    if (doc.contains("planted") && !doc["planted"].is_null()) {
      const auto& values = doc["planted"];
      const auto& labels = problem.ising.labels();
      if (!values.is_array() || values.size() != labels.size()) {
        throw ValidationError("'planted' must hold one spin per label");
      }
      planted.emplace();
      for (std::size_t i = 0; i < labels.size(); ++i) {
        planted->emplace(labels[i], checked_spin(values[i].get<long long>()));
      }
    }
    auto instance = make_nae3sat(problem.ising.num_vars(), std::move(clauses), std::move(planted));
    if (instance.model.labels() != problem.ising.labels() ||
        instance.model.quadratic_terms() != problem.ising.quadratic_terms()) {
      throw ValidationError("clauses do not reproduce the stored couplings");
    }
    problem.nae3sat = std::move(instance);
  }
  return problem;
}

json to_json(const SampleSet& samples) {
  json doc;
  doc["labels"] = labels_json(samples.labels());
  doc["shots"] = samples.total_shots();
  json records = json::array();
  for (const auto& r : samples.records()) {
    json spins = json::array();
    for (const Spin s : r.spins) spins.push_back(int{s});
    records.push_back({{"assignment", std::move(spins)}, {"energy", r.energy}, {"count", r.count}});
  }
  doc["records"] = std::move(records);
  return doc;
}

SampleSet sample_set_from_json(const json& doc, const IsingModel& model) {
  std::vector<Label> labels;
  for (const auto& item : doc.at("labels")) labels.push_back(label_from_json(item));
  if (labels != model.labels()) throw ValidationError("sample set labels do not match the model");
  std::vector<SampleRecord> records;
  for (const auto& r : doc.at("records")) {
    SampleRecord rec;
    for (const auto& s : r.at("assignment")) rec.spins.push_back(checked_spin(s.get<long long>()));
    rec.energy = r.at("energy").get<double>();
    rec.count = r.at("count").get<std::size_t>();
    records.push_back(std::move(rec));
  }
  auto samples = SampleSet::from_records(model, std::move(records));
  if (doc.contains("shots") && doc["shots"].get<std::size_t>() != samples.total_shots()) {
    throw ValidationError("record counts do not sum to 'shots'");
  }
  return samples;
}

void write_sample_set_csv(std::ostream& out, const SampleSet& samples) {
  out << "energy,count";
  for (const auto& l : samples.labels()) out << ',' << l.str();
  out << '\n';
  for (const auto& r : samples.records()) {
    out << json(r.energy).dump() << ',' << r.count;
    for (const Spin s : r.spins) out << ',' << int{s};
    out << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const SampleSet& samples) {
  out << "energy,count\n";
  for (const auto& [e, c] : histogram(samples)) out << json(e).dump() << ',' << c << '\n';
}

json to_json(const SqfConfig& config) {
  return {
      {"threshold", config.threshold},
      {"strategy", to_string(config.strategy)},
      {"threshold_increment", config.threshold_increment},
      {"increment_every", config.increment_every},
      {"m_limit", config.m_limit},
      {"shots", config.shots},
      {"max_iterations", config.max_iterations},
      {"sampler",
       {{"kind", to_string(config.sampler.kind)},
        {"seed", config.sampler.seed},
        {"sa_sweeps", config.sampler.sa_sweeps},
        {"canonical_gauge", config.sampler.canonical_gauge},
        {"sa_beta_range", {config.sampler.sa_beta_range.first, config.sampler.sa_beta_range.second}}}},
  };
}

json run_report(const SqfRun& run, const SqfConfig& config, const Problem* problem) {
  const Nae3SatInstance* nae = (problem && problem->nae3sat) ? &*problem->nae3sat : nullptr;
  json doc;
  doc["config"] = to_json(config);
  json iterations = json::array();
  for (std::size_t k = 0; k < run.iterations.size(); ++k) {
    const auto& it = run.iterations[k];
    json frozen = json::array();
    for (const auto& f : it.freezes) {
      frozen.push_back({{"label", label_to_json(f.label)}, {"value", int{f.value}}, {"z", f.likeliness}, {"merit", f.merit}});
    }
    json hist = json::array();
    for (const auto& [e, c] : histogram(it.samples)) hist.push_back({e, c});
    json entry = {
        {"iteration", k},
        {"active_count", it.model_before.num_vars()},
        {"effective_threshold", it.effective_threshold},
        {"frozen", std::move(frozen)},
        {"lowest_energy", it.lowest_energy},
        {"best_energy_so_far", it.best_energy_so_far},
        {"histogram", std::move(hist)},
    };
    if (nae) entry["r_sat"] = satisfaction_ratio(it.lowest_energy, nae->num_clauses());
    iterations.push_back(std::move(entry));
  }
  doc["iterations"] = std::move(iterations);
  doc["terminated_reason"] = to_string(run.terminated_reason);
  doc["best_energy"] = run.best_energy;
  json labels = json::array();
  json spins = json::array();
  for (const auto& [label, spin] : run.best_assignment) {
    labels.push_back(label_to_json(label));
    spins.push_back(int{spin});
  }
  doc["best_assignment"] = {{"labels", std::move(labels)}, {"spins", std::move(spins)}};
  doc["frozen_total"] = run.frozen_count();
  doc["final_active_count"] = run.final_model.num_vars();
  if (nae) {
    doc["num_clauses"] = nae->num_clauses();
    doc["best_r_sat"] = satisfaction_ratio(run.best_energy, nae->num_clauses());
  }
  return doc;
}

json graph_evolution(const IsingModel& original, const SqfRun& run) {
  json doc;
  doc["labels"] = labels_json(original.labels());
  json edges = json::array();
  for (const auto& [key, value] : original.quadratic_terms()) {
    edges.push_back({label_to_json(original.labels()[key.first]), label_to_json(original.labels()[key.second]), value});
  }
  doc["edges"] = std::move(edges);

  std::map<Label, Spin> frozen;
  auto snapshot = [&](std::size_t iteration) {
    json state = json::array();
    for (const auto& label : original.labels()) {
      auto it = frozen.find(label);
      if (it == frozen.end()) state.push_back("active");
      else state.push_back(it->second > 0 ? "frozen:+1" : "frozen:-1");
    }
    json remaining = json::array();
    for (const auto& [key, value] : original.quadratic_terms()) {
      if (frozen.contains(original.labels()[key.first]) || frozen.contains(original.labels()[key.second])) continue;
      remaining.push_back({label_to_json(original.labels()[key.first]), label_to_json(original.labels()[key.second])});
    }
    return json{{"iteration", iteration},
                {"active_count", original.num_vars() - frozen.size()},
                {"state", std::move(state)},
                {"edges", std::move(remaining)}};
  };

  json snapshots = json::array();
  for (std::size_t k = 0; k < run.iterations.size(); ++k) {
    snapshots.push_back(snapshot(k));
    for (const auto& f : run.iterations[k].freezes) frozen.emplace(f.label, f.value);
  }
  doc["iterations"] = std::move(snapshots);
  doc["final"] = snapshot(run.iterations.size());
  return doc;
}

void write_run_histograms_csv(std::ostream& out, const SqfRun& run) {
  out << "iteration,active_count,energy,count\n";
  for (std::size_t k = 0; k < run.iterations.size(); ++k) {
    const auto& it = run.iterations[k];
    for (const auto& [e, c] : histogram(it.samples)) {
      out << k << ',' << it.model_before.num_vars() << ',' << json(e).dump() << ',' << c << '\n';
    }
  }
}

void write_sweep_csv(std::ostream& out, const SpectrumSweep& sweep) {
  out << 's';
  for (std::size_t k = 0; k < sweep.k; ++k) out << ",E_" << k;
  out << '\n';
  for (std::size_t p = 0; p < sweep.s_grid.size(); ++p) {
    out << json(sweep.s_grid[p]).dump();
    for (const double e : sweep.levels[p]) out << ',' << json(e).dump();
    out << '\n';
  }
}

json to_json(const GapReport& report, bool with_curve) {
  json doc = {{"min_gap", report.min_gap}, {"s_at_min", report.s_at_min}};
  if (with_curve) {
    json curve = json::array();
    for (const auto& [s, g] : report.gap_curve) curve.push_back({s, g});
    doc["gap_curve"] = std::move(curve);
  }
  return doc;
}

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  }
}

json load_json(const std::string& path) { return parse(read_file(path), path); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out.flush()) throw IoError("failed writing '" + path + "'");
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace sqf::io
