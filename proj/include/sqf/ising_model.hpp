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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sqf/errors.hpp"
#include "sqf/label.hpp"

namespace sqf {

using Spin = std::int8_t;

/// Throws ValidationError unless `value` is exactly -1 or +1.
Spin checked_spin(long long value);

/// Label -> spin map. Ordered by label so iteration is deterministic.
using SpinAssignment = std::map<Label, Spin>;

/// Spins to pin, keyed by label (the frozen set together with its values).
struct FreezeDirective {
  std::map<Label, Spin> frozen;

  bool empty() const { return frozen.empty(); }
  std::size_t size() const { return frozen.size(); }
};

/// Canonical pair key: (i, j) with i < j, positions in the label ordering.
using PairKey = std::pair<std::size_t, std::size_t>;

/**
 * Storage shared by the Ising and QUBO forms: an ordered label list, one
 * linear coefficient per label, canonical upper-triangular quadratic terms
 * and a constant offset.
 *
 * Label order is insertion order and is preserved by every transform, so a
 * reduced model keeps the relative order (and names) of the original.
 * Duplicate quadratic insertions accumulate. Self-pairs and non-finite
 * coefficients are rejected.
 */
class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(std::vector<Label> labels);

  std::size_t num_vars() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  bool contains(const Label& label) const { return index_.contains(label); }
  std::optional<std::size_t> find(const Label& label) const;
  /// Position of `label`; throws ValidationError if unknown.
  std::size_t index(const Label& label) const;

  double linear(std::size_t i) const { return linear_[i]; }
  double linear(const Label& label) const { return linear_[index(label)]; }
  const std::vector<double>& linear_terms() const { return linear_; }

  /// Coefficient of the (a, b) pair, 0 when absent.
  double quadratic(const Label& a, const Label& b) const;
  const std::map<PairKey, double>& quadratic_terms() const { return quadratic_; }

  double offset() const { return offset_; }

  /// Appends a new label (no-op if present) and returns its position.
  std::size_t add_variable(const Label& label);
  /// Adds to the linear coefficient, creating the variable if needed.
  void add_linear(const Label& label, double value);
  /// Adds to the pair coefficient, creating either variable if needed.
  void add_quadratic(const Label& a, const Label& b, double value);
  void add_quadratic_at(std::size_t i, std::size_t j, double value);
  void set_offset(double value);
  void add_offset(double value);

  /// Positions of labels coupled to position i (via any stored pair).
  std::vector<std::pair<std::size_t, double>> neighbours(std::size_t i) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t, LabelHash> index_;
  std::vector<double> linear_;
  std::map<PairKey, double> quadratic_;
  double offset_ = 0.0;
};

/// Classical Ising Hamiltonian: sum h_i s_i + sum_{i<j} J_ij s_i s_j + offset.
class IsingModel : public QuadraticForm {
 public:
  using QuadraticForm::QuadraticForm;

  double bias(const Label& label) const { return linear(label); }
  double coupling(const Label& a, const Label& b) const { return quadratic(a, b); }

  /// Energy of positional spins (one per label, in label order).
  double energy_of(std::span<const Spin> spins) const;
};

/// Binary form over x_i in {0,1}.
class QuboModel : public QuadraticForm {
 public:
  using QuadraticForm::QuadraticForm;

  double energy_of(std::span<const std::uint8_t> bits) const;
};

/// Exact classical energy; throws AssignmentMismatch if the label sets differ.
double energy(const IsingModel& model, const SpinAssignment& assignment);
double qubo_energy(const QuboModel& model, const std::map<Label, std::uint8_t>& assignment);

/// Positional spins for `assignment` in the model's label order.
std::vector<Spin> to_positional(const IsingModel& model, const SpinAssignment& assignment);
SpinAssignment from_positional(std::span<const Label> labels, std::span<const Spin> spins);

/// s = 2x - 1 substitution.
IsingModel qubo_to_ising(const QuboModel& qubo);
/// x = (s + 1) / 2 substitution.
QuboModel ising_to_qubo(const IsingModel& model);

/**
 * Pins the directive's spins and returns the model over the remaining labels.
 *
 * Each active bias absorbs the couplings to frozen neighbours
 * (h_i + sum_{j frozen} J_ij z_j); frozen biases, and couplings between two
 * frozen spins, move into the offset. The reduced energy of any active
 * assignment equals the full energy with the frozen spins substituted.
 */
IsingModel freeze(const IsingModel& model, const FreezeDirective& directive);

/**
 * Rebuilds a full assignment from a reduced-model assignment plus the
 * directives that produced the reduced model. When `expected_labels` is
 * non-empty the result must cover exactly that label set.
 */
SpinAssignment reconstruct(const SpinAssignment& active,
                           std::span<const FreezeDirective> history,
                           std::span<const Label> expected_labels = {});

}  // namespace sqf
