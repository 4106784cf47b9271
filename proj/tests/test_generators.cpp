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


#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sqf/generators.hpp"

using namespace sqf;

namespace {

// Not-all-equal check on literal values, written out case by case.
bool nae(int a, int b, int c) { return !(a == b && b == c); }

}  // namespace

TEST_CASE("clause energy is -1 when satisfied and +3 when violated") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    Clause clause{Literal{0, Spin(rng() % 2 ? 1 : -1)}, Literal{1, Spin(rng() % 2 ? 1 : -1)},
                  Literal{2, Spin(rng() % 2 ? 1 : -1)}};
    for (int x = 0; x < 8; ++x) {
      const std::array<Spin, 3> s{Spin(x & 1 ? 1 : -1), Spin(x & 2 ? 1 : -1), Spin(x & 4 ? 1 : -1)};
      const bool ok = nae(clause[0].polarity * s[0], clause[1].polarity * s[1], clause[2].polarity * s[2]);
      CHECK(clause_energy(clause, s) == (ok ? -1.0 : 3.0));

      IsingModel m({Label(0), Label(1), Label(2)});
      add_clause(m, clause);
      CHECK(m.energy_of(s) == (ok ? -1.0 : 3.0));
    }
  }
}

TEST_CASE("add_clause rejects repeated variables") {
  IsingModel m({Label(0), Label(1)});
  CHECK_THROWS_AS(add_clause(m, {Literal{0, 1}, Literal{1, 1}, Literal{0, -1}}), ValidationError);
}

TEST_CASE("random instances have the requested clause count") {
  const auto inst = random_nae3sat(100, 2.1, 1, true);
  CHECK(inst.num_clauses() == 210);
  CHECK(inst.model.num_vars() == 100);
  for (const auto& clause : inst.clauses) {
    std::set<Label> vars{clause[0].variable, clause[1].variable, clause[2].variable};
    CHECK(vars.size() == 3);
  }
  CHECK(random_nae3sat(10, 0.25, 0, false).num_clauses() == 3);  // round(2.5) away from zero
}

TEST_CASE("planted assignment reaches -N_cl exactly") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_nae3sat(40, 2.1, seed, true);
    REQUIRE(inst.planted.has_value());
    CHECK(energy(inst.model, *inst.planted) == -static_cast<double>(inst.num_clauses()));
  }
}

TEST_CASE("-N_cl is the enumerated minimum at N = 15") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto inst = random_nae3sat(15, 2.1, seed, true);
    const auto g = oracle::ground(oracle::raw(inst.model));
    CHECK(g.energy == -static_cast<double>(inst.num_clauses()));
    // The global flip is a symmetry, so the ground manifold has even size.
    CHECK(g.degeneracy % 2 == 0);
  }
}

TEST_CASE("instances are deterministic in the seed") {
  const auto a = random_nae3sat(30, 2.1, 8, true);
  const auto b = random_nae3sat(30, 2.1, 8, true);
  CHECK(a.clauses == b.clauses);
  CHECK(a.planted == b.planted);
  CHECK(a.model == b.model);
  CHECK_FALSE(random_nae3sat(30, 2.1, 9, true).clauses == a.clauses);
  CHECK(random_complete_ising(6, 3) == random_complete_ising(6, 3));
}

TEST_CASE("complete random models") {
  const auto m = random_complete_ising(6, 0);
  CHECK(m.quadratic_terms().size() == 15);
  for (double h : m.linear_terms()) CHECK(std::abs(h) <= 2.0);
  for (const auto& [key, j] : m.quadratic_terms()) CHECK(std::abs(j) <= 1.0);
}

TEST_CASE("make_nae3sat validates the planted assignment") {
  std::vector<Clause> clauses{{Literal{0, 1}, Literal{1, 1}, Literal{2, 1}}};
  CHECK_THROWS_AS(make_nae3sat(3, clauses, SpinAssignment{{0, 1}, {1, 1}, {2, 1}}), ValidationError);
  CHECK_NOTHROW(make_nae3sat(3, clauses, SpinAssignment{{0, 1}, {1, -1}, {2, 1}}));
  CHECK_THROWS_AS(make_nae3sat(2, clauses, std::nullopt), ValidationError);
}

TEST_CASE("satisfaction ratio") {
  CHECK(satisfaction_ratio(-210, 210) == 1.0);
  // 1 - 4 / 840
  CHECK(std::abs(satisfaction_ratio(-206, 210) - 0.99523809523809523) <= 1e-12);
  // One violated clause moves the energy by 4.
  CHECK(satisfaction_ratio(-206, 210) == doctest::Approx(209.0 / 210.0));
  CHECK_THROWS_AS(satisfaction_ratio(0, 0), ValidationError);
}
