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

#include "polyent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace polyent {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double max_abs_entry(const ComplexMatrix& a) {
  double m = 0.0;
  for (const cplx& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Rotation parameters zeroing the (p, q) element of a 2x2 Hermitian block with
// real diagonal (app, aqq) and off-diagonal magnitude g.
struct Rotation {
  double t;
  double c;
  double s;
};

Rotation jacobi_rotation(double app, double aqq, double g) {
  const double zeta = (aqq - app) / (2.0 * g);
  double t;
  if (std::abs(zeta) > 1e150) {
    t = 0.5 / zeta;
  } else {
    t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {t, c, t * c};
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& h, double tol) {
  if (!h.is_square()) {
    throw std::invalid_argument("hermitian_eigensystem: matrix is not square");
  }
  const std::size_t n = h.rows();
  if (hermiticity_defect(h) > kHermitianTolerance * std::max(1.0, max_abs_entry(h))) {
    throw std::domain_error("hermitian_eigensystem: matrix is not Hermitian");
  }

  ComplexMatrix a = h;
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  // Rows of w are the conjugated eigenvectors; the row update mirrors the one
  // applied to a.
  ComplexMatrix w = ComplexMatrix::identity(n);
  const auto& k = kernels::active();
  const double threshold = tol * std::max(1.0, frobenius_norm(a));

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < threshold) {
      converged = true;
      break;
    }
    if (sweep == kJacobiMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (g <= kEps * std::sqrt(std::abs(app * aqq))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const Rotation rot = jacobi_rotation(app, aqq, g);
        const cplx phase = apq / g;
        const cplx m01 = -rot.s * phase;
        const cplx m11 = rot.c * phase;
        k.mix_rows(a.row(p).data(), a.row(q).data(), n, rot.c, m01, rot.s, m11);
        k.mix_rows(w.row(p).data(), w.row(q).data(), n, rot.c, m01, rot.s, m11);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          a(i, p) = std::conj(a(p, i));
          a(i, q) = std::conj(a(q, i));
        }
        a(p, p) = app - rot.t * g;
        a(q, q) = aqq + rot.t * g;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  if (!converged) {
    throw ConvergenceError("hermitian_eigensystem: no convergence within " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });
  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    out.values[col] = a(src, src).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, col) = std::conj(w(src, r));
  }
  return out;
}

namespace {

void require_psd(const std::vector<double>& values, const char* who) {
  if (values.empty()) return;
  const double scale = std::max(1.0, std::abs(values.front()));
  if (values.back() < -kNegativeClamp * scale) {
    throw std::domain_error(std::string(who) + ": matrix is not positive semidefinite (eigenvalue " +
                            std::to_string(values.back()) + ")");
  }
}

// Tighter than kJacobiTolerance: fidelities of rank-deficient states react to
// O(delta) representation errors with O(sqrt(delta)) changes.
constexpr double kFactorTolerance = 1e-14;

}  // namespace

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const EigenSystem es = hermitian_eigensystem(m, kFactorTolerance);
  require_psd(es.values, "psd_sqrt");
  const std::size_t n = m.rows();
  // R = sum_k sqrt(lambda_k) v_k v_k^dagger, accumulated row by row.
  ComplexMatrix r(n, n);
  const auto& k = kernels::active();
  std::vector<cplx> scaled(n);
  for (std::size_t col = 0; col < n; ++col) {
    const double root = std::sqrt(std::max(0.0, es.values[col]));
    if (root == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) scaled[j] = root * std::conj(es.vectors(j, col));
    for (std::size_t i = 0; i < n; ++i) {
      k.axpy(es.vectors(i, col), scaled.data(), r.row(i).data(), n);
    }
  }
  return r;
}

std::vector<double> singular_values(const ComplexMatrix& g) {
  // Columns of g are the rows of h.
  ComplexMatrix h = g.transpose();
  const std::size_t count = h.rows();
  const std::size_t len = h.cols();
  const auto& k = kernels::active();

  // Columns below eps * ||G|| only carry roundoff; rotating them against the
  // rest never settles and cannot change the result beyond that level.
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) total += k.norm_sq(h.row(i).data(), len);
  const double negligible = kEps * kEps * total;

  bool converged = count < 2;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < count; ++p) {
      for (std::size_t q = p + 1; q < count; ++q) {
        cplx* x = h.row(p).data();
        cplx* y = h.row(q).data();
        const double a = k.norm_sq(x, len);
        const double b = k.norm_sq(y, len);
        const cplx gamma = k.dotc(x, y, len);
        const double mag = std::abs(gamma);
        if (a <= negligible || b <= negligible) continue;
        if (mag == 0.0 || mag <= kEps * std::sqrt(a * b)) continue;
        rotated = true;
        const Rotation rot = jacobi_rotation(a, b, mag);
        const cplx back = std::conj(gamma) / mag;
        k.mix_rows(x, y, len, rot.c, -rot.s * back, rot.s, rot.c * back);
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw ConvergenceError("singular_values: no convergence within " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
  }
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = std::sqrt(k.norm_sq(h.row(i).data(), len));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double trace_norm(const ComplexMatrix& g) {
  const auto sv = singular_values(g);
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

PsdFactor psd_factor(const ComplexMatrix& m) {
  EigenSystem es = hermitian_eigensystem(m, kFactorTolerance);
  require_psd(es.values, "psd_factor");
  const std::size_t n = m.rows();
  const double top = es.values.empty() ? 0.0 : es.values.front();
  std::size_t rank = 0;
  while (rank < n && es.values[rank] > kRankCutoff * top && es.values[rank] > 0.0) ++rank;
  ComplexMatrix rows(rank, n);
  for (std::size_t r = 0; r < rank; ++r) {
    const double root = std::sqrt(es.values[r]);
    for (std::size_t j = 0; j < n; ++j) rows(r, j) = root * es.vectors(j, r);
  }
  return {std::move(es.values), std::move(rows)};
}

double fidelity(const PsdFactor& rho, const PsdFactor& sigma) {
  if (rho.rows.cols() != sigma.rows.cols()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  if (rho.rank() == 0 || sigma.rank() == 0) return 0.0;
  const auto& k = kernels::active();
  const std::size_t n = rho.rows.cols();
  // G = A^dagger B with the factor columns stored as rows.
  ComplexMatrix g(rho.rank(), sigma.rank());
  for (std::size_t a = 0; a < rho.rank(); ++a)
    for (std::size_t b = 0; b < sigma.rank(); ++b)
      g(a, b) = k.dotc(rho.rows.row(a).data(), sigma.rows.row(b).data(), n);
  return trace_norm(g);
}

double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (!rho.is_square() || rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  return fidelity(psd_factor(rho), psd_factor(sigma));
}

cplx bilinear_form_value(std::span<const cplx> psi, const ComplexMatrix& a) {
  if (!a.is_square() || a.rows() != psi.size()) {
    throw std::invalid_argument("bilinear_form_value: dimension mismatch");
  }
  const auto& k = kernels::active();
  std::vector<cplx> conj_psi(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) conj_psi[i] = std::conj(psi[i]);
  std::vector<cplx> u(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    u[i] = k.dotu(a.row(i).data(), conj_psi.data(), psi.size());
  }
  return k.dotc(psi.data(), u.data(), psi.size());
}

}  // namespace polyent
