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

#ifndef POLYENT_STATE_HPP_
#define POLYENT_STATE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "polyent/linalg.hpp"
#include "polyent/matrix.hpp"

namespace polyent {

// Subsystem dimensions d_1..d_n. Composite indices are mixed-radix with
// subsystem 0 as the most significant digit.
using Dims = std::vector<std::size_t>;

std::size_t total_dimension(const Dims& dims);

inline constexpr double kNormTolerance = 1e-10;

enum class Normalization { kNormalized, kSubnormalized };

class Ket {
 public:
  Ket(Dims dims, std::vector<cplx> amplitudes,
      Normalization norm = Normalization::kNormalized);

  const Dims& dims() const { return dims_; }
  std::span<const cplx> amplitudes() const { return amplitudes_; }
  bool normalized() const { return norm_ == Normalization::kNormalized; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::size_t subsystems() const { return dims_.size(); }
  double norm_sq() const;

  friend bool operator==(const Ket&, const Ket&) = default;

 private:
  Dims dims_;
  std::vector<cplx> amplitudes_;
  Normalization norm_;
};

class DensityMatrix {
 public:
  DensityMatrix(Dims dims, ComplexMatrix entries,
                Normalization norm = Normalization::kNormalized);

  static DensityMatrix pure(const Ket& psi);

  const Dims& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return entries_; }
  bool normalized() const { return norm_ == Normalization::kNormalized; }
  std::size_t dimension() const { return entries_.rows(); }
  std::size_t subsystems() const { return dims_.size(); }
  double trace() const { return entries_.trace().real(); }

  // Full PSD check (eigensolve); the constructor only checks the cheap
  // invariants. Throws std::domain_error.
  void check_positive() const;

 private:
  Dims dims_;
  ComplexMatrix entries_;
  Normalization norm_;
};

// Subnormalized members xi_i = sqrt(p_i) psi_i with sum_i |xi_i><xi_i| = rho.
struct Ensemble {
  std::vector<Ket> members;

  ComplexMatrix density() const;
};

// The subsystems on side A of a bipartite cut; everything else is side B.
struct Bipartition {
  std::vector<std::size_t> side_a;

  static Bipartition single(std::size_t k) { return {{k}}; }
};

// Index bookkeeping for a cut: composite index x maps to row_of[x] (digits of
// the side-A subsystems, ascending order) and col_of[x] (side B).
struct CutLayout {
  std::vector<std::size_t> side_a;
  std::vector<std::size_t> side_b;
  std::size_t dim_a = 1;
  std::size_t dim_b = 1;
  std::vector<std::size_t> row_of;
  std::vector<std::size_t> col_of;
};

// Throws std::invalid_argument for an empty side, duplicates or indices out of
// range. side_b may be empty only when allow_empty_b is set.
CutLayout make_cut_layout(const Dims& dims, const Bipartition& cut,
                          bool allow_empty_b = false);

// dim_a x dim_b coefficient matrix a_{ik} of a ket across a cut.
ComplexMatrix coefficient_matrix(const Ket& psi, const Bipartition& cut);

// Regroups to dims {dim_a, dim_b}.
Ket flatten(const Ket& psi, const Bipartition& cut);
DensityMatrix flatten(const DensityMatrix& rho, const Bipartition& cut);

// Keeps the listed subsystems (in ascending order) and traces out the rest.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix reduced_state(const Ket& psi, std::span<const std::size_t> keep);

DensityMatrix conjugate_entrywise(const DensityMatrix& rho);

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

cplx bilinear_form_value(const Ket& psi, const ComplexMatrix& a);

}  // namespace polyent

#endif  // POLYENT_STATE_HPP_
