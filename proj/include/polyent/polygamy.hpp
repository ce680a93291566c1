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

#ifndef POLYENT_POLYGAMY_HPP_
#define POLYENT_POLYGAMY_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "polyent/state.hpp"

namespace polyent {

enum class PolygamyMode { kMultiQubitCoa, kGeneralTau };

std::string_view mode_name(PolygamyMode mode);

// One instance of C^2_{focus|rest} <= sum_k X(rho_{focus,k})^2, where X is the
// two-qubit CoA (multi-qubit mode) or tau_a (general mode).
struct PolygamyReport {
  PolygamyMode mode = PolygamyMode::kGeneralTau;
  Dims dims;
  std::size_t focus = 0;
  double lhs_squared = 0.0;
  std::vector<std::size_t> partners;  // ascending subsystem indices, focus excluded
  std::vector<double> rhs_terms;      // aligned with partners
  double rhs_squared_sum = 0.0;
  double slack = 0.0;                 // rhs_squared_sum - lhs_squared, never clamped
};

// Arbitrary local dimensions, n >= 3.
PolygamyReport polygamy_report_general(const Ket& psi, std::size_t focus);

// All subsystems qubits, n >= 2.
PolygamyReport polygamy_report_multiqubit(const Ket& psi, std::size_t focus);

PolygamyReport polygamy_report(const Ket& psi, std::size_t focus, PolygamyMode mode);

// Squared cut concurrence next to the sum of squared concurrences of all
// n-qubit projections (psi)_{m_1 M}, enumerated over every pair tuple.
struct SubspaceDiagnostic {
  double cut_concurrence_sq = 0.0;
  double subspace_sum_sq = 0.0;
  std::size_t projections = 0;
};

inline constexpr std::size_t kMaxDiagnosticProjections = 1'000'000;

SubspaceDiagnostic subspace_sum_diagnostic(const Ket& psi, std::size_t focus);

}  // namespace polyent

#endif  // POLYENT_POLYGAMY_HPP_
