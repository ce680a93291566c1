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
#include "polyent/linalg.hpp"
#include "polyent/oracle.hpp"
#include "polyent/state.hpp"
#include "test_util.hpp"

namespace polyent {
namespace {

const double kHalf = std::sqrt(0.5);
const cplx kI(0.0, 1.0);

Ket bell() { return Ket({2, 2}, {kHalf, 0.0, 0.0, kHalf}); }

Ket w3() {
  const std::vector<cplx> amps(3, std::sqrt(1.0 / 3.0));
  return w_class_state(amps);
}

DensityMatrix w3_pair() {
  const std::vector<std::size_t> keep{0, 1};
  return reduced_state(w3(), keep);
}

TEST_CASE("pair index space") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const PairIndexSpace space(d);
    CHECK(space.count() == d * (d - 1) / 2);
    for (std::size_t k = 0; k < space.count(); ++k) {
      CHECK(space[k].i < space[k].j);
      CHECK(space[k].j < d);
      if (k > 0) CHECK(space[k - 1] < space[k]);
    }
  }
  CHECK_THROWS_AS(PairIndexSpace(1), std::invalid_argument);
}

TEST_CASE("generator examples") {
  CHECK(generator_L(2, {0, 1}) == (ComplexMatrix{{0.0, -1.0}, {1.0, 0.0}}));
  const ComplexMatrix l = generator_L(3, {0, 2});
  const std::vector<double> support{1.0, 0.0, 1.0};
  CHECK(max_abs_diff(l * l, ComplexMatrix::diagonal(support) * -1.0) < 1e-15);
  for (std::size_t d = 2; d <= 5; ++d) {
    const PairIndexSpace space(d);
    for (const IndexPair& p : space.pairs()) {
      const ComplexMatrix g = generator_L(d, p);
      CHECK(max_abs_diff(g.transpose(), g * -1.0) == 0.0);
    }
  }
  CHECK_THROWS_AS(generator_L(3, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(generator_L(3, {0, 3}), std::invalid_argument);
}

TEST_CASE("pure concurrence examples") {
  const Bipartition a = Bipartition::single(0);
  CHECK(pure_concurrence(bell(), a) == doctest::Approx(1.0));
  const std::vector<std::size_t> digits{0, 0};
  CHECK(pure_concurrence(basis_state({2, 2}, digits), a) == doctest::Approx(0.0));
  CHECK(pure_concurrence(ghz_state(2, 3), a) == doctest::Approx(std::sqrt(4.0 / 3.0)));
  CHECK(pure_concurrence(w3(), a) == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0));
  CHECK(pure_concurrence_coefficients(w3(), a) == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0));
  CHECK(pure_concurrence(w3(), Bipartition{{1, 2}}) ==
        doctest::Approx(2.0 * std::sqrt(2.0) / 3.0));
  CHECK_THROWS_AS(pure_concurrence(Ket({2, 2}, {0.5, 0.0, 0.0, 0.0}, Normalization::kSubnormalized), a),
                  std::invalid_argument);
  CHECK_THROWS_AS(pure_concurrence(bell(), Bipartition{{}}), std::invalid_argument);
}

TEST_CASE("purity and coefficient forms agree; subspace terms decompose C^2") {
  Rng rng(61);
  const std::vector<std::size_t> sizes{2, 3, 4};
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Dims dims{sizes[rng.bits() % 3], sizes[rng.bits() % 3]};
    const Ket psi = haar_random_pure(dims, rng);
    const Bipartition a = Bipartition::single(0);
    const double c = pure_concurrence(psi, a);
    CHECK(std::abs(c - pure_concurrence_coefficients(psi, a)) < 1e-10);
    const PairIndexSpace sa(dims[0]), sb(dims[1]);
    double sum = 0.0;
    for (const IndexPair& m : sa.pairs())
      for (const IndexPair& n : sb.pairs()) sum += subspace_term(psi, m, n);
    CHECK(std::abs(sum - c * c) < 1e-10);
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("homogeneous concurrence scales with the norm") {
  const Ket psi = haar_random_pure({3, 2}, 5);
  std::vector<cplx> scaled(psi.amplitudes().begin(), psi.amplitudes().end());
  for (cplx& z : scaled) z *= 0.5;
  const Ket xi({3, 2}, scaled, Normalization::kSubnormalized);
  const Bipartition a = Bipartition::single(0);
  CHECK(homogeneous_concurrence(xi, a) == doctest::Approx(0.25 * pure_concurrence(psi, a)));
}

TEST_CASE("subspace term examples") {
  CHECK(subspace_term(bell(), {0, 1}, {0, 1}) == doctest::Approx(1.0));
  const std::vector<std::size_t> digits{1, 2};
  const Ket prod = basis_state({3, 3}, digits);
  const PairIndexSpace qutrit(3);
  for (const IndexPair& m : qutrit.pairs())
    for (const IndexPair& n : qutrit.pairs()) CHECK(subspace_term(prod, m, n) == 0.0);
}

TEST_CASE("spin-flipped state") {
  Rng rng(67);
  const ComplexMatrix sy{{0.0, -kI}, {kI, 0.0}};
  const ComplexMatrix yy = tensor_product(sy, sy);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = random_mixed_state({2, 2}, 3, rng);
    const ComplexMatrix expected = yy * rho.matrix().conj() * yy;
    CHECK(max_abs_diff(rho_tilde(rho, {0, 1}, {0, 1}).matrix(), expected) < 1e-14);
  }
  const std::vector<std::size_t> zeros{0, 0};
  const DensityMatrix tilde = rho_tilde(DensityMatrix::pure(basis_state({2, 2}, zeros)), {0, 1}, {0, 1});
  CHECK(std::abs(tilde.matrix()(3, 3) - 1.0) < 1e-15);
  CHECK(tilde.trace() == doctest::Approx(1.0));

  const DensityMatrix q = random_mixed_state({3, 3}, 4, rng);
  const PairIndexSpace qutrit(3);
  for (const IndexPair& m : qutrit.pairs())
    for (const IndexPair& n : qutrit.pairs()) {
      const DensityMatrix t = rho_tilde(q, m, n);
      CHECK(t.trace() <= 1.0 + 1e-12);
      CHECK(t.trace() >= 0.0);
      CHECK_FALSE(t.normalized());
    }
}

TEST_CASE("two-qubit concurrence of assistance") {
  CHECK(two_qubit_coa(DensityMatrix::pure(bell())) == doctest::Approx(1.0));
  const DensityMatrix mixed({2, 2}, ComplexMatrix::identity(4) * 0.25);
  CHECK(two_qubit_coa(mixed) == doctest::Approx(1.0));
  CHECK(two_qubit_coa(w3_pair()) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(two_qubit_coa(DensityMatrix({3}, ComplexMatrix::identity(3) * (1.0 / 3.0))),
                  std::invalid_argument);

  OracleOptions opts;
  opts.budget = 3000;
  opts.seed = 2;
  const OracleResult r = optimize_coa_lower_bound(w3_pair(), Bipartition::single(0), opts);
  CHECK(r.best_average == doctest::Approx(2.0 / 3.0).epsilon(1e-4));
  CHECK(r.best_average <= 2.0 / 3.0 + 1e-12);
}

TEST_CASE("Wootters concurrence") {
  CHECK(wootters_concurrence(DensityMatrix::pure(bell())) == doctest::Approx(1.0));
  const DensityMatrix mixed({2, 2}, ComplexMatrix::identity(4) * 0.25);
  CHECK(wootters_concurrence(mixed) == doctest::Approx(0.0));
  CHECK(wootters_concurrence(w3_pair()) == doctest::Approx(2.0 / 3.0));
  Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Ket psi = haar_random_pure({2, 2}, rng);
    CHECK(wootters_concurrence(DensityMatrix::pure(psi)) ==
          doctest::Approx(pure_concurrence(psi, Bipartition::single(0))).epsilon(1e-9));
    const DensityMatrix rho = random_mixed_state({2, 2}, 1 + static_cast<std::size_t>(trial % 4), rng);
    CHECK(two_qubit_coa(rho) >= wootters_concurrence(rho) - 1e-12);
  }
}

TEST_CASE("tau_a examples") {
  const TauReport b = tau_a(DensityMatrix::pure(bell()));
  CHECK(b.pairs_a == 1);
  CHECK(b.pairs_b == 1);
  CHECK(b.tau == doctest::Approx(1.0));

  const std::vector<std::size_t> zeros{0, 0};
  CHECK(tau_a(DensityMatrix::pure(basis_state({2, 2}, zeros))).tau == 0.0);

  // |11> in 3x3 has no weight on any pair subspace that avoids index 1.
  const std::vector<std::size_t> ones{1, 1};
  const TauReport r = tau_a(DensityMatrix::pure(basis_state({3, 3}, ones)));
  CHECK(r.terms.size() == 9);
  CHECK(r.term(1, 1) == 0.0);  // pairs (0,2) x (0,2)
  CHECK(r.tau == doctest::Approx(0.0));

  CHECK_THROWS_AS(tau_a(DensityMatrix::pure(w3())), std::invalid_argument);
}

TEST_CASE("tau_a on two qubits matches the direct fidelity route") {
  Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix rho = random_mixed_state({2, 2}, 1 + static_cast<std::size_t>(trial % 4), rng);
    CHECK(std::abs(tau_a(rho).tau - two_qubit_coa(rho)) < 1e-12);
  }
}

TEST_CASE("tau_a terms match fidelities with the dense spin-flipped states") {
  Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const Dims dims{2 + static_cast<std::size_t>(trial % 3), 3};
    const DensityMatrix rho = random_mixed_state(dims, 1 + static_cast<std::size_t>(trial % 4), rng);
    const TauReport rep = tau_a(rho);
    const PairIndexSpace sa(dims[0]), sb(dims[1]);
    double sum = 0.0;
    for (std::size_t m = 0; m < sa.count(); ++m)
      for (std::size_t n = 0; n < sb.count(); ++n) {
        const DensityMatrix tilde = rho_tilde(rho, sa[m], sb[n]);
        CHECK(std::abs(rep.term(m, n) - fidelity(rho, tilde)) < 1e-10);
        CHECK(rep.term(m, n) >= 0.0);
        sum += rep.term(m, n);
      }
    CHECK(rep.tau == doctest::Approx(sum).epsilon(1e-14));
  }
}

TEST_CASE("each term only sees the projection onto its pair subspace") {
  Rng rng(83);
  const DensityMatrix rho = random_mixed_state({3, 3}, 3, rng);
  const TauReport rep = tau_a(rho);
  const PairIndexSpace s(3);
  for (std::size_t m = 0; m < s.count(); ++m)
    for (std::size_t n = 0; n < s.count(); ++n) {
      std::vector<double> mask(9, 0.0);
      for (std::size_t x : {s[m].i, s[m].j})
        for (std::size_t y : {s[n].i, s[n].j}) mask[x * 3 + y] = 1.0;
      const ComplexMatrix p = ComplexMatrix::diagonal(mask);
      const ComplexMatrix projected = p * rho.matrix() * p;
      const double f = fidelity(projected, rho_tilde(rho, s[m], s[n]).matrix());
      CHECK(std::abs(rep.term(m, n) - f) < 1e-10);
    }
}

TEST_CASE("pure-state tau_a is the l1 sum of subspace terms") {
  Rng rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = static_cast<std::size_t>(trial);
    const Dims dims{2 + t % 3, 2 + (t / 3) % 3};
    const Ket psi = haar_random_pure(dims, rng);
    const TauReport rep = tau_a(DensityMatrix::pure(psi));
    const PairIndexSpace sa(dims[0]), sb(dims[1]);
    double l1 = 0.0;
    for (const IndexPair& m : sa.pairs())
      for (const IndexPair& n : sb.pairs())
        l1 += std::sqrt(subspace_term(psi, m, n));
    CHECK(std::abs(rep.tau - l1) < 1e-9);
    CHECK(rep.tau >= pure_concurrence(psi, Bipartition::single(0)) - 1e-12);
  }
  CHECK(tau_a_pure_cut(w3(), Bipartition::single(0)) == doctest::Approx(2.0 * std::sqrt(2.0) / 3.0));
  CHECK(tau_a_pure_cut(ghz_state(3, 2), Bipartition::single(1)) == doctest::Approx(1.0));
}

TEST_CASE("tau_a dominates the average concurrence of any decomposition") {
  Rng rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    const Dims dims{2 + static_cast<std::size_t>(trial % 2), 3};
    const std::size_t rank = 1 + static_cast<std::size_t>(trial % 3);
    const DensityMatrix rho = random_mixed_state(dims, rank, rng);
    const double tau = tau_a(rho).tau;
    for (std::size_t size = rank; size <= rank + 3; ++size) {
      const Ensemble e = ensemble_from_isometry(rho, random_isometry(size, rank, rng));
      double avg = 0.0;
      for (const Ket& xi : e.members) avg += homogeneous_concurrence(xi, Bipartition::single(0));
      CHECK(avg <= tau + 1e-9);
    }
  }
}

}  // namespace
}  // namespace polyent
