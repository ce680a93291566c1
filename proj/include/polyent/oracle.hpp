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

#ifndef POLYENT_ORACLE_HPP_
#define POLYENT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>

#include "polyent/state.hpp"

namespace polyent {

// Brute-force search over pure-state decompositions of rho. Every decomposition
// it evaluates is feasible, so the best average concurrence found is a lower
// bound on the concurrence of assistance; it is not a certificate of the
// maximum.
//
// Search: restart k (seeded with derive_seed(seed, k)) draws a random
// isometry and refines it by random unitary moves, keeping improvements. Each
// restart owns a fixed slice of `restart_length` iterations, so a larger
// budget only appends work and never lowers the result.
struct OracleOptions {
  std::size_t ensemble_size = 0;  // 0: rank + 2, capped at rank^2
  std::size_t budget = 5000;      // candidate evaluations
  std::uint64_t seed = 0;
  std::size_t restart_length = 2500;
  double initial_step = 0.05;
  std::size_t failures_before_halving = 50;
  // Called with (iteration, average concurrence) for every candidate.
  std::function<void(std::size_t, double)> observer;
};

struct OracleResult {
  double best_average = 0.0;
  Ensemble best_ensemble;
  std::size_t iterations_used = 0;
  bool converged = false;  // best improved by < 1e-6 over the last 200 iterations
};

inline constexpr std::size_t kConvergenceWindow = 200;
inline constexpr double kConvergenceImprovement = 1e-6;

std::size_t default_ensemble_size(std::size_t rank);

// Ensemble members are expressed in the flattened {dim_a, dim_b} basis of the
// cut; for a bipartite rho with cut {0} that is rho's own basis.
OracleResult optimize_coa_lower_bound(const DensityMatrix& rho, const Bipartition& cut,
                                      const OracleOptions& options);

// tau_a(rho across cut) - oracle lower bound. Non-negative whenever the upper
// bound holds; oracle suboptimality only widens it.
double bound_consistency_check(const DensityMatrix& rho, const Bipartition& cut,
                               std::size_t budget, std::uint64_t seed);

}  // namespace polyent

#endif  // POLYENT_ORACLE_HPP_
