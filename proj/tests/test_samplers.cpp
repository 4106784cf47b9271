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
#include <map>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sqf/generators.hpp"
#include "sqf/samplers.hpp"

using namespace sqf;

TEST_CASE("same_level uses a relative tolerance with a floor of one") {
  CHECK(same_level(1.0, 1.0 + 5e-10));
  CHECK_FALSE(same_level(1.0, 1.0 + 5e-9));
  CHECK(same_level(1e6, 1e6 + 5e-4));
  CHECK_FALSE(same_level(1e6, 1e6 + 5e-3));
}

TEST_CASE("sample set aggregates and sorts shots") {
  IsingModel m({Label(0), Label(1)});
  m.add_quadratic(0, 1, -1.0);
  m.add_linear(0, 0.1);
  const std::vector<Spin> flat{1, 1, -1, -1, 1, 1, 1, -1, -1, -1};
  const auto set = SampleSet::from_shots(m, flat, 5);
  REQUIRE(set.records().size() == 3);
  CHECK(set.total_shots() == 5);
  CHECK(set.records()[0].spins == std::vector<Spin>{-1, -1});
  CHECK(set.records()[0].count == 2);
  CHECK(set.records()[0].energy == doctest::Approx(-1.1));
  CHECK(set.records()[1].spins == std::vector<Spin>{1, 1});
  CHECK(set.records()[1].count == 2);
  CHECK(set.records()[2].energy == doctest::Approx(1.1));
  CHECK(set.assignment(2) == SpinAssignment{{0, 1}, {1, -1}});
  CHECK(set.index(1) == 1);
}

TEST_CASE("sample set rejects inconsistent records") {
  IsingModel m({Label(0)});
  m.add_linear(0, 1.0);
  CHECK_THROWS_AS(SampleSet::from_records(m, {{{1}, 0.5, 1}}), ValidationError);
  CHECK_THROWS_AS(SampleSet::from_records(m, {{{1}, 1.0, 0}}), ValidationError);
  CHECK_THROWS_AS(SampleSet::from_records(m, {{{1}, 1.0, 1}, {{1}, 1.0, 2}}), ValidationError);
  CHECK_THROWS_AS(SampleSet::from_shots(m, std::vector<Spin>{1, 1}, 1), ValidationError);
}

TEST_CASE("empty model samples to its offset") {
  IsingModel m;
  m.set_offset(-4.0);
  const auto set = SampleSet::from_shots(m, {}, 7);
  REQUIRE(set.records().size() == 1);
  CHECK(set.lowest().energy == -4.0);
  CHECK(set.total_shots() == 7);
}

TEST_CASE("sampler parameters are validated") {
  SamplerParams p;
  p.shots = 0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = {};
  p.sa_beta_range = {1.0, 0.5};
  CHECK_THROWS_AS(p.validate(), ValidationError);
  CHECK(sampler_kind_from_string("sa") == SamplerKind::simulated_annealing);
  CHECK(sampler_kind_from_string("exact") == SamplerKind::exact);
  CHECK_THROWS_AS(sampler_kind_from_string("qpu"), ValidationError);
}

TEST_CASE("simulated annealing is deterministic per seed and independent of threading") {
  const auto m = random_complete_ising(12, 4);
  SamplerParams p;
  p.shots = 64;
  p.sa_sweeps = 200;
  p.seed = 9;
  const auto a = sample(m, p);
  const auto b = sample(m, p);
  CHECK(a == b);
  p.parallel = false;
  CHECK(sample(m, p) == a);
  p.seed = 10;
  CHECK_FALSE(sample(m, p) == a);
}

TEST_CASE("simulated annealing reaches the enumerated ground state on small models") {
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto m = random_complete_ising(10, seed);
    const auto g = oracle::ground(oracle::raw(m));
    SamplerParams p;
    p.shots = 100;
    p.seed = seed;
    const auto set = sample(m, p);
    CHECK(set.lowest().energy >= g.energy - 1e-9);
    if (std::abs(set.lowest().energy - g.energy) <= 1e-9) ++hits;
  }
  CHECK(hits == 10);
}

TEST_CASE("exact sampler returns the ground manifold") {
  const auto m = random_complete_ising(8, 2);
  const auto g = oracle::ground(oracle::raw(m));
  SamplerParams p;
  p.kind = SamplerKind::exact;
  p.shots = 10;
  const auto set = sample(m, p);
  REQUIRE(set.records().size() == 1);
  CHECK(set.lowest().energy == doctest::Approx(g.energy));
  CHECK(set.lowest().count == 10);
  std::vector<Spin> expected(g.state.begin(), g.state.end());
  CHECK(set.lowest().spins == expected);
}

TEST_CASE("exact sampler on a symmetric model") {
  // Ferromagnetic pair: ground states (+,+) and (-,-).
  IsingModel m({Label(0), Label(1)});
  m.add_quadratic(0, 1, -1.0);
  CHECK(ExactSampler(false).sample(m, 4, 0).records().size() == 2);
  const auto gauged = ExactSampler(true).sample(m, 4, 0);
  REQUIRE(gauged.records().size() == 1);
  CHECK(gauged.lowest().spins == std::vector<Spin>{1, 1});
}

TEST_CASE("canonical gauge only applies without linear terms") {
  IsingModel m({Label(0), Label(1)});
  m.add_quadratic(0, 1, -1.0);
  CHECK(has_spin_flip_symmetry(m));
  std::vector<Spin> flat{-1, -1, 1, -1};
  fold_spin_flip(m, flat, 2);
  CHECK(flat == std::vector<Spin>{1, 1, 1, -1});

  m.add_linear(1, 0.5);
  CHECK_FALSE(has_spin_flip_symmetry(m));
  std::vector<Spin> untouched{-1, -1};
  fold_spin_flip(m, untouched, 1);
  CHECK(untouched == std::vector<Spin>{-1, -1});
}

TEST_CASE("enumeration covers every assignment once") {
  const auto m = random_complete_ising(6, 5);
  const auto r = oracle::raw(m);
  const auto all = enumerate_exact(m);
  CHECK(all.records().size() == 64);
  CHECK(all.total_shots() == 64);
  for (const auto& rec : all.records()) {
    const std::vector<int> s(rec.spins.begin(), rec.spins.end());
    CHECK(rec.energy == doctest::Approx(oracle::energy(r, s)).epsilon(1e-12));
  }
  CHECK(all.lowest().energy == doctest::Approx(oracle::ground(r).energy));
  CHECK(enumerate_exact(m, false) == all);
}

TEST_CASE("classical spectrum groups degenerate levels") {
  IsingModel m({Label(0), Label(1), Label(2)});
  m.add_quadratic(0, 1, 1.0);
  m.add_quadratic(1, 2, 1.0);
  m.add_quadratic(0, 2, 1.0);
  // Antiferromagnetic triangle: 6 frustrated states at -1, 2 at +3.
  const auto levels = classical_spectrum(m);
  REQUIRE(levels.size() == 2);
  CHECK(levels[0].energy == doctest::Approx(-1.0));
  CHECK(levels[0].degeneracy == 6);
  CHECK(levels[1].energy == doctest::Approx(3.0));
  CHECK(levels[1].degeneracy == 2);
}

TEST_CASE("enumeration size limit") {
  IsingModel m;
  for (std::int64_t i = 0; i < 26; ++i) m.add_variable(i);
  CHECK_THROWS_AS(classical_spectrum(m), SizeLimitError);
}
