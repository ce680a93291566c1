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

#ifndef POLYENT_LINALG_HPP_
#define POLYENT_LINALG_HPP_

#include <span>
#include <stdexcept>
#include <vector>

#include "polyent/matrix.hpp"

namespace polyent {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Off-diagonal Frobenius threshold (relative to max(1, ||H||_F)) at which the
// cyclic Jacobi iteration stops, and the hard sweep cap.
inline constexpr double kJacobiTolerance = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Inputs whose largest |H - H^dagger| entry exceeds this are rejected.
inline constexpr double kHermitianTolerance = 1e-9;

// Eigenvalues down to -kNegativeClamp are treated as zero in square roots.
inline constexpr double kNegativeClamp = 1e-10;

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

// Cyclic Jacobi with complex Givens rotations. Throws std::invalid_argument
// for non-square input, std::domain_error for non-Hermitian input and
// ConvergenceError when the sweep cap is hit.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h,
                                  double tol = kJacobiTolerance);

// Principal square root of a Hermitian PSD matrix.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// Singular values, descending, by one-sided (Hestenes) Jacobi. Small singular
// values come out with absolute accuracy ~eps * ||G||, which the eigenvalue
// route through G G^dagger cannot offer.
std::vector<double> singular_values(const ComplexMatrix& g);

double trace_norm(const ComplexMatrix& g);

// Row k holds sqrt(lambda_k) v_k^T, so M = rows^T conj(rows), over the
// eigenpairs above the rank cutoff.
struct PsdFactor {
  std::vector<double> eigenvalues;  // full spectrum, descending
  ComplexMatrix rows;               // rank x dim
  std::size_t rank() const { return rows.rows(); }
};

// Eigenvalues at or below kRankCutoff * lambda_max are dropped.
inline constexpr double kRankCutoff = 1e-14;

PsdFactor psd_factor(const ComplexMatrix& m);

// Uhlmann fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)); neither argument has to
// be normalized. Evaluated as the trace norm of A^dagger B for factors
// rho = A A^dagger, sigma = B B^dagger.
double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);
double fidelity(const PsdFactor& rho, const PsdFactor& sigma);

// sum_{x,y} conj(psi_x) A_{xy} conj(psi_y)
cplx bilinear_form_value(std::span<const cplx> psi, const ComplexMatrix& a);

}  // namespace polyent

#endif  // POLYENT_LINALG_HPP_
