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

#include "polyent/polygamy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "polyent/concurrence.hpp"

namespace polyent {
namespace {

void require_pure_input(const Ket& psi, std::size_t focus, std::size_t min_parties,
                        const char* who) {
  if (!psi.normalized()) throw std::invalid_argument(std::string(who) + ": ket is not normalized");
  if (psi.subsystems() < min_parties) {
    throw std::invalid_argument(std::string(who) + ": need at least " +
                                std::to_string(min_parties) + " subsystems");
  }
  if (focus >= psi.subsystems()) {
    throw std::invalid_argument(std::string(who) + ": focus index out of range");
  }
}

template <typename PairMeasure>
PolygamyReport build_report(const Ket& psi, std::size_t focus, PolygamyMode mode,
                            PairMeasure&& measure) {
  PolygamyReport report;
  report.mode = mode;
  report.dims = psi.dims();
  report.focus = focus;
  const double lhs = tau_a_pure_cut(psi, Bipartition::single(focus));
  report.lhs_squared = lhs * lhs;
  for (std::size_t k = 0; k < psi.subsystems(); ++k) {
    if (k == focus) continue;
    const std::size_t keep[2] = {std::min(focus, k), std::max(focus, k)};
    // Focus first, so the pair state reads rho_{A_1 A_k}.
    const DensityMatrix pair = flatten(reduced_state(psi, keep), Bipartition::single(focus < k ? 0 : 1));
    const double value = measure(pair);
    report.partners.push_back(k);
    report.rhs_terms.push_back(value * value);
  }
  for (double t : report.rhs_terms) report.rhs_squared_sum += t;
  report.slack = report.rhs_squared_sum - report.lhs_squared;
  return report;
}

}  // namespace

std::string_view mode_name(PolygamyMode mode) {
  switch (mode) {
    case PolygamyMode::kMultiQubitCoa:
      return "multi-qubit-coa";
    case PolygamyMode::kGeneralTau:
      return "general-tau";
  }
  return "unknown";
}

PolygamyReport polygamy_report_general(const Ket& psi, std::size_t focus) {
  require_pure_input(psi, focus, 3, "polygamy_report_general");
  return build_report(psi, focus, PolygamyMode::kGeneralTau,
                      [](const DensityMatrix& pair) { return tau_a(pair).tau; });
}

PolygamyReport polygamy_report_multiqubit(const Ket& psi, std::size_t focus) {
  require_pure_input(psi, focus, 2, "polygamy_report_multiqubit");
  for (std::size_t d : psi.dims()) {
    if (d != 2) throw std::invalid_argument("polygamy_report_multiqubit: all subsystems must be qubits");
  }
  return build_report(psi, focus, PolygamyMode::kMultiQubitCoa,
                      [](const DensityMatrix& pair) { return two_qubit_coa(pair); });
}

PolygamyReport polygamy_report(const Ket& psi, std::size_t focus, PolygamyMode mode) {
  return mode == PolygamyMode::kGeneralTau ? polygamy_report_general(psi, focus)
                                           : polygamy_report_multiqubit(psi, focus);
}

SubspaceDiagnostic subspace_sum_diagnostic(const Ket& psi, std::size_t focus) {
  require_pure_input(psi, focus, 3, "subspace_sum_diagnostic");
  const Dims& dims = psi.dims();
  const std::size_t n = dims.size();

  // Subsystem order: focus first, then the others ascending.
  std::vector<std::size_t> order{focus};
  for (std::size_t s = 0; s < n; ++s)
    if (s != focus) order.push_back(s);

  std::vector<PairIndexSpace> spaces;
  std::size_t projections = 1;
  for (std::size_t s : order) {
    spaces.emplace_back(dims[s]);
    if (projections > kMaxDiagnosticProjections / spaces.back().count()) {
      throw std::invalid_argument("subspace_sum_diagnostic: more than 10^6 pair tuples");
    }
    projections *= spaces.back().count();
  }

  // Strides of each subsystem in the original composite index.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t s = n - 1; s-- > 0;) stride[s] = stride[s + 1] * dims[s + 1];

  SubspaceDiagnostic out;
  out.cut_concurrence_sq = std::pow(pure_concurrence(psi, Bipartition::single(focus)), 2);
  out.projections = projections;

  const auto amps = psi.amplitudes();
  const std::size_t rest = std::size_t{1} << (n - 1);
  std::vector<std::size_t> choice(n, 0);  // pair index per position in `order`
  ComplexMatrix x(2, rest);
  for (std::size_t t = 0; t < projections; ++t) {
    // 2 x 2^{n-1} coefficient matrix of the projected n-qubit state.
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      std::size_t index = 0;
      for (std::size_t pos = 0; pos < n; ++pos) {
        const IndexPair p = spaces[pos][choice[pos]];
        const bool upper = (bits >> (n - 1 - pos)) & 1U;
        index += (upper ? p.j : p.i) * stride[order[pos]];
      }
      x(bits >> (n - 1), bits & (rest - 1)) = amps[index];
    }
    out.subspace_sum_sq += coefficient_concurrence_sq(x);
    for (std::size_t pos = n; pos-- > 0;) {
      if (++choice[pos] < spaces[pos].count()) break;
      choice[pos] = 0;
    }
  }
  return out;
}

}  // namespace polyent
