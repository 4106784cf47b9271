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


#include "sqf/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sqf {

IsingModel random_complete_ising(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("random_complete_ising needs n >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> bias(-2.0, 2.0);
  std::uniform_real_distribution<double> coupling(-1.0, 1.0);

  IsingModel model;
  for (std::size_t i = 0; i < n; ++i) model.add_linear(static_cast<std::int64_t>(i), bias(rng));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) model.add_quadratic_at(i, j, coupling(rng));
  }
  return model;
}

double clause_energy(const Clause& clause, const std::array<Spin, 3>& spins) {
  const int a = clause[0].polarity * spins[0];
  const int b = clause[1].polarity * spins[1];
  const int c = clause[2].polarity * spins[2];
  return static_cast<double>(a * b + b * c + a * c);
}

bool nae_satisfied(const Clause& clause, const SpinAssignment& assignment) {
  std::array<Spin, 3> spins{};
  for (std::size_t k = 0; k < 3; ++k) spins[k] = assignment.at(clause[k].variable);
  return clause_energy(clause, spins) < 0.0;
}

void add_clause(IsingModel& model, const Clause& clause) {
  for (std::size_t a = 0; a < 3; ++a) {
    if (clause[a].polarity != 1 && clause[a].polarity != -1) {
      throw ValidationError("literal polarity must be -1 or +1");
    }
    for (std::size_t b = a + 1; b < 3; ++b) {
      if (clause[a].variable == clause[b].variable) {
        throw ValidationError("clause variables must be distinct");
      }
    }
  }
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      model.add_quadratic(clause[a].variable, clause[b].variable,
                          static_cast<double>(clause[a].polarity * clause[b].polarity));
    }
  }
}

Nae3SatInstance make_nae3sat(std::size_t num_vars, std::vector<Clause> clauses,
                             std::optional<SpinAssignment> planted) {
  Nae3SatInstance inst;
  inst.num_vars = num_vars;
  std::vector<Label> labels;
  for (std::size_t i = 0; i < num_vars; ++i) labels.emplace_back(static_cast<std::int64_t>(i));
  inst.model = IsingModel(labels);
  for (const auto& clause : clauses) {
    for (const auto& lit : clause) {
      if (!inst.model.contains(lit.variable)) {
        throw ValidationError("clause variable '" + lit.variable.str() + "' out of range");
      }
    }
    add_clause(inst.model, clause);
  }
  if (planted) {
    if (planted->size() != num_vars) throw ValidationError("planted assignment size mismatch");
    for (const auto& clause : clauses) {
      if (!nae_satisfied(clause, *planted)) throw ValidationError("planted assignment violates a clause");
    }
  }
  inst.clauses = std::move(clauses);
  inst.planted = std::move(planted);
  return inst;
}

Nae3SatInstance random_nae3sat(std::size_t n, double rho, std::uint64_t seed, bool plant) {
  if (n < 3) throw ValidationError("random_nae3sat needs n >= 3");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw ValidationError("clause ratio must be positive");
  const auto num_clauses = static_cast<std::size_t>(std::llround(rho * static_cast<double>(n)));
  if (num_clauses < 1) throw ValidationError("round(rho * n) must be >= 1");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  auto draw_spin = [&] { return coin(rng) ? Spin{1} : Spin{-1}; };

  std::optional<SpinAssignment> planted;
  if (plant) {
    planted.emplace();
    for (std::size_t i = 0; i < n; ++i) planted->emplace(static_cast<std::int64_t>(i), draw_spin());
  }

  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::vector<Clause> clauses;
  clauses.reserve(num_clauses);
  for (std::size_t c = 0; c < num_clauses; ++c) {
    // partial Fisher-Yates: first three slots become a uniform 3-subset
    for (std::size_t k = 0; k < 3; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, n - 1);
      std::swap(pool[k], pool[pick(rng)]);
    }
    Clause clause;
    for (std::size_t k = 0; k < 3; ++k) clause[k].variable = static_cast<std::int64_t>(pool[k]);
    do {
      for (auto& lit : clause) lit.polarity = draw_spin();
    } while (planted && !nae_satisfied(clause, *planted));
    clauses.push_back(clause);
  }
  return make_nae3sat(n, std::move(clauses), std::move(planted));
}

double satisfaction_ratio(double energy, std::size_t num_clauses) {
  if (num_clauses < 1) throw ValidationError("satisfaction ratio needs at least one clause");
  const auto n_cl = static_cast<double>(num_clauses);
  return 1.0 - (energy + n_cl) / (4.0 * n_cl);
}

}  // namespace sqf
