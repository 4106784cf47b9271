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


#include "sqf/ising_model.hpp"

#include <cmath>
#include <set>

namespace sqf {

namespace {

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw ValidationError(std::string("non-finite ") + what + " coefficient");
  }
}

template <class Value, class Map>
std::vector<Value> positional(const QuadraticForm& form, const Map& assignment) {
  if (assignment.size() != form.num_vars()) {
    throw AssignmentMismatch("assignment has " + std::to_string(assignment.size()) +
                             " labels, model has " + std::to_string(form.num_vars()));
  }
  std::vector<Value> values(form.num_vars());
  for (const auto& [label, value] : assignment) {
    auto pos = form.find(label);
    if (!pos) throw AssignmentMismatch("assignment label '" + label.str() + "' not in model");
    values[*pos] = value;
  }
  return values;
}

}  // namespace

Spin checked_spin(long long value) {
  if (value != 1 && value != -1) {
    throw ValidationError("spin value must be -1 or +1, got " + std::to_string(value));
  }
  return static_cast<Spin>(value);
}

QuadraticForm::QuadraticForm(std::vector<Label> labels) {
  for (auto& label : labels) {
    if (contains(label)) throw ValidationError("duplicate label '" + label.str() + "'");
    add_variable(label);
  }
}

std::optional<std::size_t> QuadraticForm::find(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t QuadraticForm::index(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw ValidationError("unknown label '" + label.str() + "'");
  return it->second;
}

double QuadraticForm::quadratic(const Label& a, const Label& b) const {
  auto i = find(a);
  auto j = find(b);
  if (!i || !j || *i == *j) return 0.0;
  auto it = quadratic_.find({std::min(*i, *j), std::max(*i, *j)});
  return it == quadratic_.end() ? 0.0 : it->second;
}

std::size_t QuadraticForm::add_variable(const Label& label) {
  if (auto pos = find(label)) return *pos;
  index_.emplace(label, labels_.size());
  labels_.push_back(label);
  linear_.push_back(0.0);
  return labels_.size() - 1;
}

void QuadraticForm::add_linear(const Label& label, double value) {
  require_finite(value, "linear");
  const std::size_t i = add_variable(label);
  linear_[i] += value;
  require_finite(linear_[i], "linear");
}

void QuadraticForm::add_quadratic(const Label& a, const Label& b, double value) {
  if (a == b) throw ValidationError("self-coupling on label '" + a.str() + "'");
  require_finite(value, "quadratic");
  const std::size_t i = add_variable(a);
  const std::size_t j = add_variable(b);
  add_quadratic_at(i, j, value);
}

void QuadraticForm::add_quadratic_at(std::size_t i, std::size_t j, double value) {
  if (i == j) throw ValidationError("self-coupling on label '" + labels_.at(i).str() + "'");
  if (i >= labels_.size() || j >= labels_.size()) throw ValidationError("pair index out of range");
  require_finite(value, "quadratic");
  double& slot = quadratic_[{std::min(i, j), std::max(i, j)}];
  slot += value;
  require_finite(slot, "quadratic");
}

void QuadraticForm::set_offset(double value) {
  require_finite(value, "offset");
  offset_ = value;
}

void QuadraticForm::add_offset(double value) { set_offset(offset_ + value); }

std::vector<std::pair<std::size_t, double>> QuadraticForm::neighbours(std::size_t i) const {
  std::vector<std::pair<std::size_t, double>> out;
  for (const auto& [key, value] : quadratic_) {
    if (key.first == i) out.emplace_back(key.second, value);
    else if (key.second == i) out.emplace_back(key.first, value);
  }
  return out;
}

double IsingModel::energy_of(std::span<const Spin> spins) const {
  if (spins.size() != num_vars()) {
    throw AssignmentMismatch("expected " + std::to_string(num_vars()) + " spins, got " +
                             std::to_string(spins.size()));
  }
  double e = 0.0;
  const auto& h = linear_terms();
  for (std::size_t i = 0; i < h.size(); ++i) e += h[i] * spins[i];
  for (const auto& [key, value] : quadratic_terms()) {
    e += value * spins[key.first] * spins[key.second];
  }
  return e + offset();
}

double QuboModel::energy_of(std::span<const std::uint8_t> bits) const {
  if (bits.size() != num_vars()) {
    throw AssignmentMismatch("expected " + std::to_string(num_vars()) + " bits, got " +
                             std::to_string(bits.size()));
  }
  double e = 0.0;
  const auto& c = linear_terms();
  for (std::size_t i = 0; i < c.size(); ++i) e += c[i] * bits[i];
  for (const auto& [key, value] : quadratic_terms()) {
    e += value * bits[key.first] * bits[key.second];
  }
  return e + offset();
}

std::vector<Spin> to_positional(const IsingModel& model, const SpinAssignment& assignment) {
  for (const auto& [label, spin] : assignment) checked_spin(spin);
  return positional<Spin>(model, assignment);
}

SpinAssignment from_positional(std::span<const Label> labels, std::span<const Spin> spins) {
  if (labels.size() != spins.size()) throw AssignmentMismatch("label/spin count mismatch");
  SpinAssignment out;
  for (std::size_t i = 0; i < labels.size(); ++i) out.emplace(labels[i], checked_spin(spins[i]));
  return out;
}

double energy(const IsingModel& model, const SpinAssignment& assignment) {
  return model.energy_of(to_positional(model, assignment));
}

double qubo_energy(const QuboModel& model, const std::map<Label, std::uint8_t>& assignment) {
  for (const auto& [label, bit] : assignment) {
    if (bit > 1) throw ValidationError("binary value must be 0 or 1");
  }
  return model.energy_of(positional<std::uint8_t>(model, assignment));
}

IsingModel qubo_to_ising(const QuboModel& qubo) {
  IsingModel out(qubo.labels());
  const auto& labels = qubo.labels();
  double offset = qubo.offset();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double c = qubo.linear(i);
    out.add_linear(labels[i], c / 2.0);
    offset += c / 2.0;
  }
  for (const auto& [key, q] : qubo.quadratic_terms()) {
    const double quarter = q / 4.0;
    out.add_quadratic_at(key.first, key.second, quarter);
    out.add_linear(labels[key.first], quarter);
    out.add_linear(labels[key.second], quarter);
    offset += quarter;
  }
  out.set_offset(offset);
  return out;
}

QuboModel ising_to_qubo(const IsingModel& model) {
  QuboModel out(model.labels());
  const auto& labels = model.labels();
  double offset = model.offset();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double h = model.linear(i);
    out.add_linear(labels[i], 2.0 * h);
    offset -= h;
  }
  for (const auto& [key, j] : model.quadratic_terms()) {
    out.add_quadratic_at(key.first, key.second, 4.0 * j);
    out.add_linear(labels[key.first], -2.0 * j);
    out.add_linear(labels[key.second], -2.0 * j);
    offset += j;
  }
  out.set_offset(offset);
  return out;
}

IsingModel freeze(const IsingModel& model, const FreezeDirective& directive) {
  const std::size_t n = model.num_vars();
  // 0 = active, otherwise the pinned spin
  std::vector<Spin> pinned(n, 0);
  for (const auto& [label, spin] : directive.frozen) {
    pinned[model.index(label)] = checked_spin(spin);
  }

  std::vector<Label> active_labels;
  std::vector<std::size_t> new_index(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (pinned[i] == 0) {
      new_index[i] = active_labels.size();
      active_labels.push_back(model.labels()[i]);
    }
  }

  IsingModel out(active_labels);
  std::vector<double> bias(active_labels.size(), 0.0);
  double offset = model.offset();
  for (std::size_t i = 0; i < n; ++i) {
    if (pinned[i] == 0) bias[new_index[i]] += model.linear(i);
    else offset += model.linear(i) * pinned[i];
  }
  for (const auto& [key, j] : model.quadratic_terms()) {
    const auto [a, b] = key;
    if (pinned[a] == 0 && pinned[b] == 0) {
      out.add_quadratic_at(new_index[a], new_index[b], j);
    } else if (pinned[a] == 0) {
      bias[new_index[a]] += j * pinned[b];
    } else if (pinned[b] == 0) {
      bias[new_index[b]] += j * pinned[a];
    } else {
      offset += j * pinned[a] * pinned[b];
    }
  }
  for (std::size_t i = 0; i < bias.size(); ++i) out.add_linear(active_labels[i], bias[i]);
  out.set_offset(offset);
  return out;
}

SpinAssignment reconstruct(const SpinAssignment& active, std::span<const FreezeDirective> history,
                           std::span<const Label> expected_labels) {
  SpinAssignment full;
  for (const auto& [label, spin] : active) full.emplace(label, checked_spin(spin));
  for (const auto& directive : history) {
    for (const auto& [label, spin] : directive.frozen) {
      if (!full.emplace(label, checked_spin(spin)).second) {
        throw ValidationError("label '" + label.str() + "' assigned more than once");
      }
    }
  }
  if (!expected_labels.empty()) {
    std::set<Label> expected(expected_labels.begin(), expected_labels.end());
    if (expected.size() != full.size()) {
      throw ValidationError("reconstructed assignment covers " + std::to_string(full.size()) +
                            " labels, expected " + std::to_string(expected.size()));
    }
    for (const auto& [label, spin] : full) {
      if (!expected.contains(label)) {
        throw ValidationError("reconstructed label '" + label.str() + "' not in original model");
      }
    }
  }
  return full;
}

}  // namespace sqf
