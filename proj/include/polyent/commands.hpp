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

#ifndef POLYENT_COMMANDS_HPP_
#define POLYENT_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polyent/state.hpp"

namespace polyent {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitViolation = 2 };

enum class SweepMode { kGeneralTau, kMultiQubitCoa, kOracleCompare, kDiagnostic };

std::optional<SweepMode> parse_sweep_mode(std::string_view name);
std::string_view sweep_mode_name(SweepMode mode);

// "2,2,2" -> {2, 2, 2}; throws std::invalid_argument.
Dims parse_dims(std::string_view text);

// Violation thresholds for the three report kinds.
inline constexpr double kSlackTolerance = 1e-9;     // polygamy slack
inline constexpr double kGapTolerance = 1e-6;       // tau_a - oracle lower bound
inline constexpr double kDiagnosticTolerance = 1e-9;

struct SweepConfig {
  Dims dims;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  SweepMode mode = SweepMode::kGeneralTau;
  std::size_t focus = 0;
  std::size_t oracle_budget = 2000;
  std::size_t rank = 0;      // oracle-compare: 0 draws 1..min(dim, 4) per sample
  std::string output_path;   // empty: CSV goes to the `out` stream
  unsigned threads = 0;      // 0: hardware concurrency
};

// Throws std::invalid_argument describing the first violated constraint.
void validate(const SweepConfig& config);

// Writes the CSV (header, one row per sample in sample order, summary
// footer). Inequality violations are dumped to <output>.violation.json and
// reported through the exit code.
int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

struct CheckRequest {
  std::string state_file;
  std::size_t focus = 0;
  SweepMode mode = SweepMode::kGeneralTau;
  std::size_t oracle_budget = 5000;
  std::uint64_t seed = 0;
  std::string output_path;  // optional CSV copy; also names the violation file
};

int run_check(const CheckRequest& request, std::ostream& out, std::ostream& err);

std::string violation_path(const std::string& output_path, const std::string& fallback);

struct ViolationRecord {
  std::string state_id;
  double value = 0.0;     // slack, gap or excess
  nlohmann::json state;   // ket or density in the state-file schema
};

// {"mode": ..., "violations": [{"state_id", "value", "state"}]}
void write_violation_report(const std::string& path, SweepMode mode,
                            const std::vector<ViolationRecord>& found);

}  // namespace polyent

#endif  // POLYENT_COMMANDS_HPP_
