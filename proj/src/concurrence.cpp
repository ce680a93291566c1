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

#include "polyent/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace polyent {
namespace {

void require_pair(std::size_t d, IndexPair p, const char* who) {
  if (!(p.i < p.j && p.j < d)) {
    throw std::invalid_argument(std::string(who) + ": invalid pair (" + std::to_string(p.i) +
                                "," + std::to_string(p.j) + ") for d=" + std::to_string(d));
  }
}

void require_bipartite(const Dims& dims, const char* who) {
  if (dims.size() != 2) {
    throw std::invalid_argument(std::string(who) + ": expected a bipartite state, got " +
                                std::to_string(dims.size()) + " subsystems");
  }
}

void require_two_qubit(const DensityMatrix& rho, const char* who) {
  if (rho.dims() != Dims{2, 2}) {
    throw std::invalid_argument(std::string(who) + ": expected dims [2,2]");
  }
}

// 4 sum_{i<j} (r_ii r_jj - |r_ij|^2) = 2 ((tr r)^2 - tr r^2) for Hermitian r.
// Each summand is a 2x2 principal minor, non-negative for PSD r.
double purity_defect_times_two(const ComplexMatrix& r) {
  double s = 0.0;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = i + 1; j < r.rows(); ++j)
      s += r(i, i).real() * r(j, j).real() - std::norm(r(i, j));
  return std::max(0.0, 4.0 * s);
}

// Composite index of |a b> in d1 (x) d2.
inline std::size_t idx(std::size_t a, std::size_t b, std::size_t d2) { return a * d2 + b; }

}  // namespace

PairIndexSpace::PairIndexSpace(std::size_t d) : dim_(d) {
  if (d < 2) throw std::invalid_argument("PairIndexSpace: d < 2");
  pairs_.reserve(d * (d - 1) / 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) pairs_.push_back({i, j});
}

ComplexMatrix generator_L(std::size_t d, IndexPair pair) {
  require_pair(d, pair, "generator_L");
  ComplexMatrix l(d, d);
  l(pair.i, pair.j) = -1.0;
  l(pair.j, pair.i) = 1.0;
  return l;
}

double homogeneous_concurrence(const Ket& xi, const Bipartition& cut) {
  const DensityMatrix rho_a = reduced_state(xi, make_cut_layout(xi.dims(), cut).side_a);
  return std::sqrt(purity_defect_times_two(rho_a.matrix()));
}

double pure_concurrence(const Ket& psi, const Bipartition& cut) {
  if (!psi.normalized()) throw std::invalid_argument("pure_concurrence: ket is not normalized");
  return homogeneous_concurrence(psi, cut);
}

double coefficient_concurrence_sq(const ComplexMatrix& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = i + 1; j < x.rows(); ++j)
      for (std::size_t k = 0; k < x.cols(); ++k)
        for (std::size_t l = k + 1; l < x.cols(); ++l)
          s += std::norm(x(i, k) * x(j, l) - x(i, l) * x(j, k));
  return 4.0 * s;
}

double pure_concurrence_coefficients(const Ket& psi, const Bipartition& cut) {
  if (!psi.normalized()) {
    throw std::invalid_argument("pure_concurrence_coefficients: ket is not normalized");
  }
  return std::sqrt(coefficient_concurrence_sq(coefficient_matrix(psi, cut)));
}

double subspace_term(const Ket& psi, IndexPair m, IndexPair n) {
  require_bipartite(psi.dims(), "subspace_term");
  const ComplexMatrix l = tensor_product(generator_L(psi.dims()[0], m),
                                         generator_L(psi.dims()[1], n));
  return std::norm(bilinear_form_value(psi, l));
}

DensityMatrix rho_tilde(const DensityMatrix& rho, IndexPair m, IndexPair n) {
  require_bipartite(rho.dims(), "rho_tilde");
  const ComplexMatrix l = tensor_product(generator_L(rho.dims()[0], m),
                                         generator_L(rho.dims()[1], n));
  ComplexMatrix t = l * rho.matrix().conj() * l;
  return DensityMatrix(rho.dims(), std::move(t), Normalization::kSubnormalized);
}

double two_qubit_coa(const DensityMatrix& rho) {
  require_two_qubit(rho, "two_qubit_coa");
  return fidelity(rho, rho_tilde(rho, {0, 1}, {0, 1}));
}

namespace {

// G = A^T-conj (L (x) L) A-conj restricted to the four basis states of the
// pair subspace, where rho = A A^dagger. Its singular values are the square
// roots of the eigenvalues of sqrt(rho) rho~_mn sqrt(rho).
ComplexMatrix pair_overlap(const ComplexMatrix& conj_factor, std::size_t d2, IndexPair m,
                           IndexPair n) {
  const std::size_t r = conj_factor.cols();
  const cplx* u_ik = conj_factor.row(idx(m.i, n.i, d2)).data();
  const cplx* u_il = conj_factor.row(idx(m.i, n.j, d2)).data();
  const cplx* u_jk = conj_factor.row(idx(m.j, n.i, d2)).data();
  const cplx* u_jl = conj_factor.row(idx(m.j, n.j, d2)).data();
  ComplexMatrix g(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      g(a, b) = u_ik[a] * u_jl[b] + u_jl[a] * u_ik[b] - u_il[a] * u_jk[b] - u_jk[a] * u_il[b];
  return g;
}

// conj(A) as a dim x rank matrix.
ComplexMatrix conj_factor_columns(const PsdFactor& f) {
  ComplexMatrix out(f.rows.cols(), f.rank());
  for (std::size_t a = 0; a < f.rank(); ++a)
    for (std::size_t x = 0; x < f.rows.cols(); ++x) out(x, a) = std::conj(f.rows(a, x));
  return out;
}

}  // namespace

double wootters_concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho, "wootters_concurrence");
  const PsdFactor f = psd_factor(rho.matrix());
  if (f.rank() == 0) return 0.0;
  std::vector<double> l = singular_values(pair_overlap(conj_factor_columns(f), 2, {0, 1}, {0, 1}));
  l.resize(4, 0.0);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

TauReport tau_a(const DensityMatrix& rho) {
  require_bipartite(rho.dims(), "tau_a");
  const std::size_t d1 = rho.dims()[0];
  const std::size_t d2 = rho.dims()[1];
  const PairIndexSpace space_a(d1);
  const PairIndexSpace space_b(d2);

  TauReport report;
  report.d1 = d1;
  report.d2 = d2;
  report.pairs_a = space_a.count();
  report.pairs_b = space_b.count();
  report.terms.assign(report.pairs_a * report.pairs_b, 0.0);

  // One factorization of rho serves every (m, n) term.
  const PsdFactor f = psd_factor(rho.matrix());
  if (f.rank() == 0) return report;
  const ComplexMatrix u = conj_factor_columns(f);
  const ComplexMatrix& m_rho = rho.matrix();

  for (std::size_t mi = 0; mi < space_a.count(); ++mi) {
    const IndexPair m = space_a[mi];
    for (std::size_t ni = 0; ni < space_b.count(); ++ni) {
      const IndexPair n = space_b[ni];
      const double weight = m_rho(idx(m.i, n.i, d2), idx(m.i, n.i, d2)).real() +
                            m_rho(idx(m.i, n.j, d2), idx(m.i, n.j, d2)).real() +
                            m_rho(idx(m.j, n.i, d2), idx(m.j, n.i, d2)).real() +
                            m_rho(idx(m.j, n.j, d2), idx(m.j, n.j, d2)).real();
      // (P (x) P) rho (P (x) P) = 0: the term is exactly zero.
      if (weight <= 0.0) continue;
      report.terms[mi * report.pairs_b + ni] = trace_norm(pair_overlap(u, d2, m, n));
    }
  }
  for (double t : report.terms) report.tau += t;
  return report;
}

double tau_a_pure_cut(const Ket& psi, const Bipartition& cut) { return pure_concurrence(psi, cut); }

}  // namespace polyent
