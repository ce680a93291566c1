/*
 * Copyright 2026 The polyent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polyent/concurrence.hpp"
#include "polyent/generators.hpp"
#include "polyent/oracle.hpp"
#include "polyent/state.hpp"

namespace polyent {
namespace {

const Bipartition kFirst = Bipartition::single(0);

double ensemble_average(const Ensemble& e) {
  double sum = 0.0;
  for (const Ket& xi : e.members) sum += homogeneous_concurrence(xi, kFirst);
  return sum;
}

OracleOptions with(std::size_t budget, std::uint64_t seed) {
  OracleOptions o;
  o.budget = budget;
  o.seed = seed;
  return o;
}

TEST_CASE("default ensemble size") {
  CHECK(default_ensemble_size(1) == 1);
  CHECK(default_ensemble_size(2) == 4);
  CHECK(default_ensemble_size(3) == 5);
  CHECK(default_ensemble_size(4) == 6);
}

TEST_CASE("pure input is solved by its only decomposition") {
  const Ket psi = haar_random_pure({2, 3}, 4);
  const OracleResult r = optimize_coa_lower_bound(DensityMatrix::pure(psi), kFirst, with(1, 0));
  CHECK(r.iterations_used == 1);
  CHECK(std::abs(r.best_average - pure_concurrence(psi, kFirst)) < 1e-10);
}

TEST_CASE("maximally mixed two qubits reach one") {
  const DensityMatrix mixed({2, 2}, ComplexMatrix::identity(4) * 0.25);
  const OracleResult r = optimize_coa_lower_bound(mixed, kFirst, with(5000, 1));
  CHECK(r.best_average == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(r.best_average <= 1.0 + 1e-12);
}

TEST_CASE("states with a pure factor stay at zero") {
  // Every member of every decomposition is |0> (x) phi.
  const std::vector<double> a{1.0, 0.0}, b{0.2, 0.5, 0.3};
  const DensityMatrix rho({2, 3}, tensor_product(ComplexMatrix::diagonal(a), ComplexMatrix::diagonal(b)));
  const OracleResult r = optimize_coa_lower_bound(rho, kFirst, with(500, 2));
  CHECK(r.best_average == doctest::Approx(0.0));
  CHECK(tau_a(rho).tau == doctest::Approx(0.0));
}

TEST_CASE("best ensemble reconstructs rho and reproduces its value") {
  Rng rng(113);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = random_mixed_state({3, 2}, 2 + static_cast<std::size_t>(trial % 3), rng);
    const OracleResult r = optimize_coa_lower_bound(rho, kFirst, with(600, rng.bits()));
    CHECK(max_abs_diff(r.best_ensemble.density(), rho.matrix()) < 1e-10);
    CHECK(std::abs(ensemble_average(r.best_ensemble) - r.best_average) < 1e-10);
    CHECK(r.best_average <= tau_a(rho).tau + 1e-9);
  }
}

TEST_CASE("multipartite input is flattened across the cut") {
  const Ket psi = haar_random_pure({2, 2, 3}, 6);
  const std::vector<std::size_t> all{0, 1, 2};
  const DensityMatrix rho = reduced_state(psi, all);
  const OracleResult r = optimize_coa_lower_bound(rho, Bipartition{{2}}, with(1, 0));
  CHECK(r.best_ensemble.members.front().dims() == Dims{3, 4});
  CHECK(r.best_average == doctest::Approx(pure_concurrence(psi, Bipartition{{2}})));
}

TEST_CASE("observer sees every candidate and none beats the reported best") {
  const DensityMatrix rho = random_mixed_state({2, 2}, 3, 9);
  std::vector<double> seen;
  OracleOptions o = with(700, 3);
  o.observer = [&](std::size_t iter, double value) {
    CHECK(iter == seen.size());
    seen.push_back(value);
  };
  const OracleResult r = optimize_coa_lower_bound(rho, kFirst, o);
  CHECK(seen.size() == 700);
  CHECK(r.iterations_used == 700);
  double best = 0.0;
  for (double v : seen) best = std::max(best, v);
  CHECK(best == r.best_average);
}

TEST_CASE("seed determinism and budget monotonicity") {
  const DensityMatrix rho = random_mixed_state({2, 3}, 3, 17);
  const OracleResult a = optimize_coa_lower_bound(rho, kFirst, with(1500, 5));
  const OracleResult b = optimize_coa_lower_bound(rho, kFirst, with(1500, 5));
  CHECK(a.best_average == b.best_average);
  double previous = 0.0;
  for (std::size_t budget = 250; budget <= 4000; budget *= 2) {
    const double v = optimize_coa_lower_bound(rho, kFirst, with(budget, 5)).best_average;
    CHECK(v >= previous);
    previous = v;
  }
}

TEST_CASE("two-qubit oracle approaches the closed form") {
  Rng rng(127);
  for (int trial = 0; trial < 8; ++trial) {
    const DensityMatrix rho = random_mixed_state({2, 2}, 1 + static_cast<std::size_t>(trial % 4), rng);
    const OracleResult r = optimize_coa_lower_bound(rho, kFirst, with(5000, rng.bits()));
    const double exact = two_qubit_coa(rho);
    CHECK(r.best_average <= exact + 1e-9);
    CHECK(r.best_average >= exact - 1e-3);
  }
}

TEST_CASE("convergence flag and consistency check") {
  const DensityMatrix rho = DensityMatrix::pure(haar_random_pure({2, 2}, 2));
  CHECK(optimize_coa_lower_bound(rho, kFirst, with(500, 0)).converged);
  CHECK_FALSE(optimize_coa_lower_bound(rho, kFirst, with(100, 0)).converged);
  CHECK(std::abs(bound_consistency_check(rho, kFirst, 50, 0)) < 1e-10);
  const DensityMatrix mixed = random_mixed_state({3, 3}, 3, 21);
  CHECK(bound_consistency_check(mixed, kFirst, 1000, 0) >= -1e-6);
}

TEST_CASE("oracle input validation") {
  const DensityMatrix rho = random_mixed_state({2, 2}, 3, 1);
  OracleOptions o = with(10, 0);
  o.ensemble_size = 2;
  CHECK_THROWS_AS(optimize_coa_lower_bound(rho, kFirst, o), std::invalid_argument);
  CHECK_THROWS_AS(optimize_coa_lower_bound(rho, kFirst, with(0, 0)), std::invalid_argument);
  const DensityMatrix zero({2, 2}, ComplexMatrix(4, 4), Normalization::kSubnormalized);
  CHECK_THROWS_AS(optimize_coa_lower_bound(zero, kFirst, with(10, 0)), std::invalid_argument);
  o.ensemble_size = 3;
  CHECK(optimize_coa_lower_bound(rho, kFirst, o).best_ensemble.members.size() == 3);
}

}  // namespace
}  // namespace polyent
