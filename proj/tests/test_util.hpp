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

#ifndef POLYENT_TESTS_TEST_UTIL_HPP_
#define POLYENT_TESTS_TEST_UTIL_HPP_

#include <cmath>
#include <vector>

#include "polyent/kernels.hpp"
#include "polyent/matrix.hpp"
#include "polyent/rng.hpp"

namespace polyent::testing {

inline std::vector<cplx> random_vector(std::size_t n, Rng& rng) {
  std::vector<cplx> v(n);
  for (cplx& z : v) z = rng.complex_normal();
  return v;
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (cplx& z : m.entries()) z = rng.complex_normal();
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix g = random_matrix(n, n, rng);
  return (g + g.adjoint()) * 0.5;
}

// A^dagger A scaled to unit trace.
inline ComplexMatrix random_psd(std::size_t n, std::size_t rank, Rng& rng) {
  const ComplexMatrix a = random_matrix(rank, n, rng);
  ComplexMatrix m = a.adjoint() * a;
  return m * (1.0 / m.trace().real());
}

// Restores the kernel selection on scope exit.
class IsaGuard {
 public:
  IsaGuard() : saved_(kernels::active().isa) {}
  ~IsaGuard() { kernels::select(saved_); }
  IsaGuard(const IsaGuard&) = delete;
  IsaGuard& operator=(const IsaGuard&) = delete;

 private:
  kernels::Isa saved_;
};

}  // namespace polyent::testing

#endif  // POLYENT_TESTS_TEST_UTIL_HPP_
