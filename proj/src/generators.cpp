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

#include "polyent/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polyent {

Ket haar_random_pure(const Dims& dims, Rng& rng) {
  if (dims.empty()) throw std::invalid_argument("haar_random_pure: empty dims");
  std::vector<cplx> amps(total_dimension(dims));
  for (cplx& a : amps) a = rng.complex_normal();
  const double norm = std::sqrt(kernels::active().norm_sq(amps.data(), amps.size()));
  for (cplx& a : amps) a /= norm;
  return Ket(dims, std::move(amps));
}

Ket haar_random_pure(const Dims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_pure(dims, rng);
}

DensityMatrix random_mixed_state(const Dims& dims, std::size_t rank, Rng& rng) {
  if (dims.empty()) throw std::invalid_argument("random_mixed_state: empty dims");
  const std::size_t n = total_dimension(dims);
  if (rank < 1 || rank > n) throw std::invalid_argument("random_mixed_state: rank out of range");
  // Rows of g are the system components of a Gaussian purification on
  // system (x) ancilla; tracing the ancilla leaves g g^dagger.
  ComplexMatrix g(n, rank);
  for (cplx& z : g.entries()) z = rng.complex_normal();
  const auto& k = kernels::active();
  const double norm_sq = k.norm_sq(g.entries().data(), g.entries().size());
  ComplexMatrix rho(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      const cplx v = k.dotc(g.row(c).data(), g.row(r).data(), rank) / norm_sq;
      rho(r, c) = v;
      rho(c, r) = std::conj(v);
    }
  for (std::size_t i = 0; i < n; ++i) rho(i, i) = rho(i, i).real();
  return DensityMatrix(dims, std::move(rho));
}

DensityMatrix random_mixed_state(const Dims& dims, std::size_t rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_mixed_state(dims, rank, rng);
}

Ket w_class_state(std::span<const cplx> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n < 2) throw std::invalid_argument("w_class_state: need at least two qubits");
  double norm = 0.0;
  for (const cplx& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("w_class_state: amplitudes are not normalized");
  }
  std::vector<cplx> amps(std::size_t{1} << n);
  for (std::size_t k = 0; k < n; ++k) amps[std::size_t{1} << (n - 1 - k)] = amplitudes[k];
  return Ket(Dims(n, 2), std::move(amps));
}

std::vector<cplx> random_w_amplitudes(std::size_t n, Rng& rng) {
  std::vector<cplx> a(n);
  double norm = 0.0;
  for (cplx& z : a) {
    z = rng.complex_normal();
    norm += std::norm(z);
  }
  norm = std::sqrt(norm);
  for (cplx& z : a) z /= norm;
  return a;
}

Ket ghz_state(std::size_t n, std::size_t d) {
  if (n < 2 || d < 2) throw std::invalid_argument("ghz_state: need n >= 2 and d >= 2");
  const Dims dims(n, d);
  std::vector<cplx> amps(total_dimension(dims));
  std::size_t stride = 0;  // index of |1...1>
  for (std::size_t s = 0; s < n; ++s) stride = stride * d + 1;
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) amps[j * stride] = w;
  return Ket(dims, std::move(amps));
}

Ket basis_state(const Dims& dims, std::span<const std::size_t> digits) {
  if (digits.size() != dims.size()) throw std::invalid_argument("basis_state: digit count");
  std::size_t index = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (digits[s] >= dims[s]) throw std::invalid_argument("basis_state: digit out of range");
    index = index * dims[s] + digits[s];
  }
  std::vector<cplx> amps(total_dimension(dims));
  amps.at(index) = 1.0;
  return Ket(dims, std::move(amps));
}

ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols > rows) throw std::invalid_argument("random_isometry: cols > rows");
  ComplexMatrix w(rows, cols);
  for (cplx& z : w.entries()) z = rng.complex_normal();
  orthonormalize_columns(w);
  return w;
}

Ensemble ensemble_from_isometry(const DensityMatrix& rho, const ComplexMatrix& w) {
  const PsdFactor factor = psd_factor(rho.matrix());
  const std::size_t r = factor.rank();
  if (w.cols() != r) {
    throw std::invalid_argument("ensemble_from_isometry: isometry has " +
                                std::to_string(w.cols()) + " columns, rank is " +
                                std::to_string(r));
  }
  if (max_abs_diff(w.adjoint() * w, ComplexMatrix::identity(r)) > kIsometryTolerance) {
    throw std::invalid_argument("ensemble_from_isometry: columns are not orthonormal");
  }
  const std::size_t n = rho.dimension();
  const auto& k = kernels::active();
  Ensemble out;
  out.members.reserve(w.rows());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    std::vector<cplx> xi(n);
    for (std::size_t j = 0; j < r; ++j) k.axpy(w(i, j), factor.rows.row(j).data(), xi.data(), n);
    out.members.emplace_back(rho.dims(), std::move(xi), Normalization::kSubnormalized);
  }
  return out;
}

}  // namespace polyent
