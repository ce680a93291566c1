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

#ifndef POLYENT_GENERATORS_HPP_
#define POLYENT_GENERATORS_HPP_

#include <cstdint>
#include <span>

#include "polyent/rng.hpp"
#include "polyent/state.hpp"

namespace polyent {

// Normalized complex Gaussian vector: Haar-distributed pure state.
Ket haar_random_pure(const Dims& dims, std::uint64_t seed);
Ket haar_random_pure(const Dims& dims, Rng& rng);

// Reduced state of a Haar-random pure state on dims (x) C^rank, so the
// numerical rank is at most `rank`.
DensityMatrix random_mixed_state(const Dims& dims, std::size_t rank, std::uint64_t seed);
DensityMatrix random_mixed_state(const Dims& dims, std::size_t rank, Rng& rng);

// a_1 |10...0> + a_2 |01...0> + ... + a_n |0...01>; requires sum |a_i|^2 = 1.
Ket w_class_state(std::span<const cplx> amplitudes);

// Random normalized amplitudes for w_class_state.
std::vector<cplx> random_w_amplitudes(std::size_t n, Rng& rng);

// (1/sqrt(d)) sum_j |j...j>
Ket ghz_state(std::size_t n, std::size_t d);

// Computational basis ket |digits>.
Ket basis_state(const Dims& dims, std::span<const std::size_t> digits);

// N x r matrix with orthonormal columns, from a complex Gaussian matrix.
ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);

// Decomposition of rho induced by an isometry w (N x r, orthonormal columns,
// r = numerical rank of rho): xi_i = sum_j w_{ij} sqrt(lambda_j) v_j over the
// eigenpairs of rho in descending order.
Ensemble ensemble_from_isometry(const DensityMatrix& rho, const ComplexMatrix& w);

inline constexpr double kIsometryTolerance = 1e-8;

}  // namespace polyent

#endif  // POLYENT_GENERATORS_HPP_
