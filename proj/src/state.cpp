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

#include "polyent/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace polyent {
namespace {

void require_dims(const Dims& dims) {
  if (dims.empty()) throw std::invalid_argument("state: empty dimension list");
  for (std::size_t d : dims) {
    if (d < 2) throw std::invalid_argument("state: subsystem dimension < 2");
  }
}

void check_norm(double value, Normalization norm, const char* who) {
  if (norm == Normalization::kNormalized) {
    if (std::abs(value - 1.0) > kNormTolerance) {
      throw std::invalid_argument(std::string(who) + ": not normalized (norm^2 = " +
                                  std::to_string(value) + ")");
    }
  } else if (value < -kNormTolerance || value > 1.0 + kNormTolerance) {
    throw std::invalid_argument(std::string(who) + ": trace outside [0, 1]");
  }
}

}  // namespace

std::size_t total_dimension(const Dims& dims) {
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  return n;
}

Ket::Ket(Dims dims, std::vector<cplx> amplitudes, Normalization norm)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)), norm_(norm) {
  require_dims(dims_);
  if (amplitudes_.size() != total_dimension(dims_)) {
    throw std::invalid_argument("Ket: amplitude count does not match dims");
  }
  for (const cplx& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("Ket: non-finite amplitude");
    }
  }
  if (norm_ == Normalization::kNormalized) check_norm(norm_sq(), norm_, "Ket");
}

double Ket::norm_sq() const {
  return kernels::active().norm_sq(amplitudes_.data(), amplitudes_.size());
}

DensityMatrix::DensityMatrix(Dims dims, ComplexMatrix entries, Normalization norm)
    : dims_(std::move(dims)), entries_(std::move(entries)), norm_(norm) {
  require_dims(dims_);
  const std::size_t n = total_dimension(dims_);
  if (entries_.rows() != n || entries_.cols() != n) {
    throw std::invalid_argument("DensityMatrix: matrix side does not match dims");
  }
  for (const cplx& z : entries_.entries()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("DensityMatrix: non-finite entry");
    }
  }
  if (hermiticity_defect(entries_) > kHermitianTolerance) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  check_norm(trace(), norm_, "DensityMatrix");
}

DensityMatrix DensityMatrix::pure(const Ket& psi) {
  const std::size_t n = psi.dimension();
  const auto a = psi.amplitudes();
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a[r] * std::conj(a[c]);
  return DensityMatrix(psi.dims(), std::move(m),
                       psi.normalized() ? Normalization::kNormalized
                                        : Normalization::kSubnormalized);
}

void DensityMatrix::check_positive() const {
  const EigenSystem es = hermitian_eigensystem(entries_);
  if (!es.values.empty() && es.values.back() < -kNegativeClamp) {
    throw std::domain_error("DensityMatrix: negative eigenvalue " +
                            std::to_string(es.values.back()));
  }
}

ComplexMatrix Ensemble::density() const {
  if (members.empty()) return {};
  const std::size_t n = members.front().dimension();
  ComplexMatrix m(n, n);
  const auto& k = kernels::active();
  for (const Ket& xi : members) {
    if (xi.dimension() != n) throw std::invalid_argument("Ensemble: mixed dimensions");
    const auto a = xi.amplitudes();
    std::vector<cplx> conj_a(n);
    for (std::size_t j = 0; j < n; ++j) conj_a[j] = std::conj(a[j]);
    for (std::size_t r = 0; r < n; ++r) k.axpy(a[r], conj_a.data(), m.row(r).data(), n);
  }
  return m;
}

CutLayout make_cut_layout(const Dims& dims, const Bipartition& cut, bool allow_empty_b) {
  const std::size_t n = dims.size();
  std::vector<bool> in_a(n, false);
  if (cut.side_a.empty()) throw std::invalid_argument("cut: side A is empty");
  for (std::size_t s : cut.side_a) {
    if (s >= n) throw std::invalid_argument("cut: subsystem index out of range");
    if (in_a[s]) throw std::invalid_argument("cut: duplicate subsystem index");
    in_a[s] = true;
  }
  CutLayout layout;
  for (std::size_t s = 0; s < n; ++s) (in_a[s] ? layout.side_a : layout.side_b).push_back(s);
  if (layout.side_b.empty() && !allow_empty_b) {
    throw std::invalid_argument("cut: side B is empty");
  }
  for (std::size_t s : layout.side_a) layout.dim_a *= dims[s];
  for (std::size_t s : layout.side_b) layout.dim_b *= dims[s];

  const std::size_t total = total_dimension(dims);
  layout.row_of.resize(total);
  layout.col_of.resize(total);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (in_a[s]) row = row * dims[s] + digits[s];
      else col = col * dims[s] + digits[s];
    }
    layout.row_of[x] = row;
    layout.col_of[x] = col;
    for (std::size_t s = n; s-- > 0;) {
      if (++digits[s] < dims[s]) break;
      digits[s] = 0;
    }
  }
  return layout;
}

ComplexMatrix coefficient_matrix(const Ket& psi, const Bipartition& cut) {
  const CutLayout layout = make_cut_layout(psi.dims(), cut);
  ComplexMatrix x(layout.dim_a, layout.dim_b);
  const auto a = psi.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) x(layout.row_of[i], layout.col_of[i]) = a[i];
  return x;
}

Ket flatten(const Ket& psi, const Bipartition& cut) {
  const ComplexMatrix x = coefficient_matrix(psi, cut);
  const auto e = x.entries();
  return Ket({x.rows(), x.cols()}, std::vector<cplx>(e.begin(), e.end()),
             psi.normalized() ? Normalization::kNormalized : Normalization::kSubnormalized);
}

DensityMatrix flatten(const DensityMatrix& rho, const Bipartition& cut) {
  const CutLayout layout = make_cut_layout(rho.dims(), cut);
  const std::size_t n = rho.dimension();
  std::vector<std::size_t> target(n);
  for (std::size_t x = 0; x < n; ++x) target[x] = layout.row_of[x] * layout.dim_b + layout.col_of[x];
  ComplexMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m(target[x], target[y]) = rho.matrix()(x, y);
  return DensityMatrix({layout.dim_a, layout.dim_b}, std::move(m),
                       rho.normalized() ? Normalization::kNormalized
                                        : Normalization::kSubnormalized);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const CutLayout layout =
      make_cut_layout(rho.dims(), Bipartition{{keep.begin(), keep.end()}}, true);
  // Bucket composite indices by their traced-out digits.
  std::vector<std::vector<std::size_t>> buckets(layout.dim_b);
  for (std::size_t x = 0; x < rho.dimension(); ++x) buckets[layout.col_of[x]].push_back(x);
  ComplexMatrix out(layout.dim_a, layout.dim_a);
  for (const auto& bucket : buckets)
    for (std::size_t x : bucket)
      for (std::size_t y : bucket) out(layout.row_of[x], layout.row_of[y]) += rho.matrix()(x, y);
  Dims kept;
  for (std::size_t s : layout.side_a) kept.push_back(rho.dims()[s]);
  return DensityMatrix(std::move(kept), std::move(out),
                       rho.normalized() ? Normalization::kNormalized
                                        : Normalization::kSubnormalized);
}

DensityMatrix reduced_state(const Ket& psi, std::span<const std::size_t> keep) {
  const CutLayout layout =
      make_cut_layout(psi.dims(), Bipartition{{keep.begin(), keep.end()}}, true);
  ComplexMatrix x(layout.dim_a, layout.dim_b);
  const auto a = psi.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) x(layout.row_of[i], layout.col_of[i]) = a[i];
  // rho = X X^dagger
  const auto& k = kernels::active();
  ComplexMatrix out(layout.dim_a, layout.dim_a);
  for (std::size_t r = 0; r < layout.dim_a; ++r)
    for (std::size_t c = r; c < layout.dim_a; ++c) {
      const cplx v = k.dotc(x.row(c).data(), x.row(r).data(), layout.dim_b);
      out(r, c) = v;
      out(c, r) = std::conj(v);
    }
  Dims kept;
  for (std::size_t s : layout.side_a) kept.push_back(psi.dims()[s]);
  return DensityMatrix(std::move(kept), std::move(out),
                       psi.normalized() ? Normalization::kNormalized
                                        : Normalization::kSubnormalized);
}

DensityMatrix conjugate_entrywise(const DensityMatrix& rho) {
  return DensityMatrix(rho.dims(), rho.matrix().conj(),
                       rho.normalized() ? Normalization::kNormalized
                                        : Normalization::kSubnormalized);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dims() != sigma.dims()) throw std::invalid_argument("fidelity: dimension mismatch");
  return fidelity(rho.matrix(), sigma.matrix());
}

cplx bilinear_form_value(const Ket& psi, const ComplexMatrix& a) {
  return bilinear_form_value(psi.amplitudes(), a);
}

}  // namespace polyent
