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

#include "polyent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "polyent/concurrence.hpp"
#include "polyent/generators.hpp"
#include "polyent/rng.hpp"

namespace polyent {
namespace {

// Average concurrence of the ensemble induced by an isometry, via the
// reduced-state purity of each member.
class EnsembleEvaluator {
 public:
  EnsembleEvaluator(const PsdFactor& factor, std::size_t dim_a, std::size_t dim_b)
      : factor_(factor), dim_a_(dim_a), dim_b_(dim_b), member_(dim_a * dim_b) {}

  double operator()(const ComplexMatrix& w) {
    double total = 0.0;
    for (std::size_t i = 0; i < w.rows(); ++i) total += member_concurrence(member(w, i));
    return total;
  }

  const std::vector<cplx>& member(const ComplexMatrix& w, std::size_t i) {
    const auto& k = kernels::active();
    std::fill(member_.begin(), member_.end(), cplx{});
    for (std::size_t j = 0; j < w.cols(); ++j) {
      k.axpy(w(i, j), factor_.rows.row(j).data(), member_.data(), member_.size());
    }
    return member_;
  }

  double member_concurrence(const std::vector<cplx>& xi) const {
    const auto& k = kernels::active();
    // Row a of the coefficient matrix is xi[a * dim_b, (a + 1) * dim_b).
    double defect = 0.0;
    for (std::size_t a = 0; a < dim_a_; ++a) {
      const cplx* ra = xi.data() + a * dim_b_;
      const double paa = k.norm_sq(ra, dim_b_);
      for (std::size_t b = a + 1; b < dim_a_; ++b) {
        const cplx* rb = xi.data() + b * dim_b_;
        defect += paa * k.norm_sq(rb, dim_b_) - std::norm(k.dotc(rb, ra, dim_b_));
      }
    }
    return std::sqrt(std::max(0.0, 4.0 * defect));
  }

 private:
  const PsdFactor& factor_;
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::vector<cplx> member_;
};

// exp(step * K) W to second order, K anti-Hermitian with unit Frobenius norm,
// then re-orthonormalized.
ComplexMatrix perturb(const ComplexMatrix& w, double step, Rng& rng) {
  const std::size_t n = w.rows();
  ComplexMatrix k(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    k(a, a) = cplx(0.0, rng.normal());
    for (std::size_t b = a + 1; b < n; ++b) {
      const cplx z = rng.complex_normal();
      k(a, b) = z;
      k(b, a) = -std::conj(z);
    }
  }
  k *= step / frobenius_norm(k);
  const ComplexMatrix kw = k * w;
  ComplexMatrix out = w + kw + (k * kw) * 0.5;
  orthonormalize_columns(out);
  return out;
}

}  // namespace

std::size_t default_ensemble_size(std::size_t rank) {
  return std::min(rank + 2, rank * rank);
}

OracleResult optimize_coa_lower_bound(const DensityMatrix& rho, const Bipartition& cut,
                                      const OracleOptions& options) {
  if (options.budget < 1) throw std::invalid_argument("optimize_coa_lower_bound: budget < 1");
  if (options.restart_length < 1) {
    throw std::invalid_argument("optimize_coa_lower_bound: restart_length < 1");
  }
  const DensityMatrix flat = flatten(rho, cut);
  const std::size_t dim_a = flat.dims()[0];
  const std::size_t dim_b = flat.dims()[1];
  const PsdFactor factor = psd_factor(flat.matrix());
  const std::size_t rank = factor.rank();
  if (rank == 0) throw std::invalid_argument("optimize_coa_lower_bound: zero state");
  const std::size_t members =
      options.ensemble_size == 0 ? default_ensemble_size(rank) : options.ensemble_size;
  if (members < rank) {
    throw std::invalid_argument("optimize_coa_lower_bound: ensemble size " +
                                std::to_string(members) + " < rank " + std::to_string(rank));
  }

  EnsembleEvaluator evaluate(factor, dim_a, dim_b);
  OracleResult result;
  result.best_average = -1.0;
  ComplexMatrix best_w;
  std::vector<double> best_history;
  best_history.reserve(options.budget);

  auto record = [&](const ComplexMatrix& w, double value) {
    if (options.observer) options.observer(result.iterations_used, value);
    ++result.iterations_used;
    if (value > result.best_average) {
      result.best_average = value;
      best_w = w;
    }
    best_history.push_back(result.best_average);
  };

  for (std::uint64_t restart = 0; result.iterations_used < options.budget; ++restart) {
    Rng rng(derive_seed(options.seed, restart));
    const std::size_t slice_end =
        std::min(options.budget, result.iterations_used + options.restart_length);
    ComplexMatrix w = random_isometry(members, rank, rng);
    double current = evaluate(w);
    record(w, current);
    double step = options.initial_step;
    std::size_t failures = 0;
    while (result.iterations_used < slice_end) {
      ComplexMatrix candidate = perturb(w, step, rng);
      const double value = evaluate(candidate);
      record(candidate, value);
      if (value > current) {
        w = std::move(candidate);
        current = value;
        failures = 0;
      } else if (++failures >= options.failures_before_halving) {
        step *= 0.5;
        failures = 0;
      }
    }
  }

  if (best_history.size() > kConvergenceWindow) {
    const double earlier = best_history[best_history.size() - 1 - kConvergenceWindow];
    result.converged = best_history.back() - earlier < kConvergenceImprovement;
  }

  const std::size_t dim = dim_a * dim_b;
  result.best_ensemble.members.reserve(members);
  for (std::size_t i = 0; i < members; ++i) {
    const auto& xi = evaluate.member(best_w, i);
    result.best_ensemble.members.emplace_back(Dims{dim_a, dim_b}, std::vector<cplx>(xi.begin(), xi.begin() + dim),
                                              Normalization::kSubnormalized);
  }
  return result;
}

double bound_consistency_check(const DensityMatrix& rho, const Bipartition& cut,
                               std::size_t budget, std::uint64_t seed) {
  OracleOptions options;
  options.budget = budget;
  options.seed = seed;
  const double lower = optimize_coa_lower_bound(rho, cut, options).best_average;
  return tau_a(flatten(rho, cut)).tau - lower;
}

}  // namespace polyent
