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

#ifndef POLYENT_CONCURRENCE_HPP_
#define POLYENT_CONCURRENCE_HPP_

#include <compare>
#include <cstddef>
#include <vector>

#include "polyent/state.hpp"

namespace polyent {

// A local basis pair (i, j) with i < j, selecting a two-dimensional subspace.
struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 1;

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// All pairs i < j < d in lexicographic order; count() == d(d-1)/2.
class PairIndexSpace {
 public:
  explicit PairIndexSpace(std::size_t d);

  std::size_t dim() const { return dim_; }
  std::size_t count() const { return pairs_.size(); }
  const std::vector<IndexPair>& pairs() const { return pairs_; }
  const IndexPair& operator[](std::size_t k) const { return pairs_[k]; }

 private:
  std::size_t dim_;
  std::vector<IndexPair> pairs_;
};

// -|i><j| + |j><i| on C^d.
ComplexMatrix generator_L(std::size_t d, IndexPair pair);

// sqrt(2 (1 - tr rho_A^2)) across the cut, from the reduced state of side A.
// Requires a normalized ket.
double pure_concurrence(const Ket& psi, const Bipartition& cut);

// 2 sqrt(sum_{i<j, k<l} |a_ik a_jl - a_il a_jk|^2) from the coefficient
// matrix; must agree with pure_concurrence.
double pure_concurrence_coefficients(const Ket& psi, const Bipartition& cut);

// 4 sum_{i<j, k<l} |x_ik x_jl - x_il x_jk|^2 for any coefficient matrix.
double coefficient_concurrence_sq(const ComplexMatrix& x);

// Concurrence in homogeneous form, sqrt(p) * C(psi) for xi = sqrt(p) psi.
// Accepts subnormalized kets.
double homogeneous_concurrence(const Ket& xi, const Bipartition& cut);

// |<psi| L_A^m (x) L_B^n |psi*>|^2 for a bipartite ket (dims {d1, d2}).
double subspace_term(const Ket& psi, IndexPair m, IndexPair n);

// (L_A^m (x) L_B^n) rho* (L_A^m (x) L_B^n), subnormalized.
DensityMatrix rho_tilde(const DensityMatrix& rho, IndexPair m, IndexPair n);

// Concurrence of assistance of a two-qubit state: F[rho, rho~].
double two_qubit_coa(const DensityMatrix& rho);

// max(0, l1 - l2 - l3 - l4) over the descending square roots of the
// eigenvalues of rho rho~.
double wootters_concurrence(const DensityMatrix& rho);

struct TauReport {
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  std::size_t pairs_a = 0;     // D1
  std::size_t pairs_b = 0;     // D2
  std::vector<double> terms;   // D1 x D2, row-major by (m, n)
  double tau = 0.0;

  double term(std::size_t m, std::size_t n) const { return terms[m * pairs_b + n]; }
};

// Upper bound on the concurrence of assistance: the sum of F[rho, rho~_mn]
// over every pair subspace. rho must be bipartite; flatten() multipartite
// states first. Summation runs in (m, n) lexicographic order.
TauReport tau_a(const DensityMatrix& rho);

// For pure states the cut quantity is the concurrence across the cut.
double tau_a_pure_cut(const Ket& psi, const Bipartition& cut);

}  // namespace polyent

#endif  // POLYENT_CONCURRENCE_HPP_
