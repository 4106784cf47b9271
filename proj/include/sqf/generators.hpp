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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqf/ising_model.hpp"

namespace sqf {

/// Complete graph K_n with h_i ~ U(-2, 2) and J_ij ~ U(-1, 1), labels 0..n-1.
IsingModel random_complete_ising(std::size_t n, std::uint64_t seed);

struct Literal {
  Label variable;
  Spin polarity = 1;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// Ising energy of one clause under the given spins (one per literal):
/// -1 when the signed literals are not all equal, +3 otherwise.
double clause_energy(const Clause& clause, const std::array<Spin, 3>& spins);
bool nae_satisfied(const Clause& clause, const SpinAssignment& assignment);

/// Adds the clause's three pairwise couplings p_a p_b to `model`.
void add_clause(IsingModel& model, const Clause& clause);

struct Nae3SatInstance {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
  std::optional<SpinAssignment> planted;
  IsingModel model;

  std::size_t num_clauses() const { return clauses.size(); }
};

inline constexpr double kDefaultClauseRatio = 2.1;

/**
 * Random NAE3SAT over labels 0..n-1 with round(rho * n) clauses. Each clause
 * picks 3 distinct variables uniformly and uniform polarities. With `plant`,
 * a hidden assignment is drawn first and each clause's polarities are
 * redrawn until the clause is NAE-satisfied by it.
 */
Nae3SatInstance random_nae3sat(std::size_t n, double rho, std::uint64_t seed, bool plant);

/// Rebuilds the instance model from its clauses.
Nae3SatInstance make_nae3sat(std::size_t num_vars, std::vector<Clause> clauses,
                             std::optional<SpinAssignment> planted);

/// 1 - (E - E_min) / (4 N_cl) with E_min = -N_cl.
double satisfaction_ratio(double energy, std::size_t num_clauses);

}  // namespace sqf
