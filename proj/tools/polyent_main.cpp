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

// polyent: polygamy-inequality checks, sweeps and CoA oracle comparisons.
//
//   polyent check --state psi.json --focus 0 --mode general-tau
//   polyent sweep --dims 3,3,3 --samples 1000 --seed 42 --out sweep.csv
//   polyent oracle-compare --dims 3,3 --rank 2 --samples 200 --out gaps.csv
//   polyent diagnostic --dims 2,2,2 --samples 200 --out diag.csv
//
// Exit codes: 0 success, 1 usage/input error, 2 inequality violation found.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "polyent/commands.hpp"
#include "polyent/kernels.hpp"

namespace {

const std::map<std::string, polyent::SweepMode> kModes{
    {"general-tau", polyent::SweepMode::kGeneralTau},
    {"multi-qubit-coa", polyent::SweepMode::kMultiQubitCoa},
    {"oracle-compare", polyent::SweepMode::kOracleCompare},
    {"diagnostic", polyent::SweepMode::kDiagnostic},
};

void add_sweep_options(CLI::App& cmd, polyent::SweepConfig& config, std::string& dims) {
  cmd.add_option("--dims", dims, "Subsystem dimensions, e.g. 2,2,2")->required();
  cmd.add_option("--samples", config.samples, "Number of random states")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", config.seed, "64-bit seed");
  cmd.add_option("--focus", config.focus, "Focus subsystem (side A of the cut)");
  cmd.add_option("--budget", config.oracle_budget, "Oracle iterations per state");
  cmd.add_option("--rank", config.rank, "Mixed-state rank for oracle-compare (0: random 1..min(dim, 4))");
  cmd.add_option("--out", config.output_path, "Output CSV path (default: stdout)");
  cmd.add_option("--threads", config.threads, "Worker threads (0: all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polygamy-of-entanglement checks and concurrence-of-assistance bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string isa;
  app.add_option("--isa", isa, "Force kernel variant (scalar|avx2)")
      ->check(CLI::IsMember({"scalar", "avx2"}));

  polyent::CheckRequest check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate one state file");
  check_cmd->add_option("--state", check.state_file, "State JSON file")->required();
  check_cmd->add_option("--focus", check.focus, "Focus subsystem");
  check_cmd->add_option("--mode", check.mode, "general-tau | multi-qubit-coa | oracle-compare | diagnostic")
      ->transform(CLI::CheckedTransformer(kModes));
  check_cmd->add_option("--budget", check.oracle_budget, "Oracle iterations (oracle-compare)");
  check_cmd->add_option("--seed", check.seed, "Oracle seed (oracle-compare)");
  check_cmd->add_option("--out", check.output_path, "Also write the CSV here");

  polyent::SweepConfig sweep;
  std::string sweep_dims;
  auto* sweep_cmd = app.add_subcommand("sweep", "Random-state sweep to CSV");
  add_sweep_options(*sweep_cmd, sweep, sweep_dims);
  sweep_cmd->add_option("--mode", sweep.mode, "general-tau | multi-qubit-coa | oracle-compare | diagnostic")
      ->transform(CLI::CheckedTransformer(kModes));

  polyent::SweepConfig oracle;
  oracle.mode = polyent::SweepMode::kOracleCompare;
  std::string oracle_dims;
  auto* oracle_cmd = app.add_subcommand("oracle-compare", "tau_a against the brute-force CoA lower bound");
  add_sweep_options(*oracle_cmd, oracle, oracle_dims);

  polyent::SweepConfig diag;
  diag.mode = polyent::SweepMode::kDiagnostic;
  std::string diag_dims;
  auto* diag_cmd = app.add_subcommand("diagnostic", "Cut concurrence vs. summed pair-subspace concurrences");
  add_sweep_options(*diag_cmd, diag, diag_dims);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? polyent::kExitOk : polyent::kExitInputError;
  }

  if (!isa.empty()) {
    const auto want = isa == "avx2" ? polyent::kernels::Isa::kAvx2 : polyent::kernels::Isa::kScalar;
    if (!polyent::kernels::select(want)) {
      std::cerr << "polyent: kernel variant '" << isa << "' is not available on this machine\n";
      return polyent::kExitInputError;
    }
  }

  try {
    if (*check_cmd) return polyent::run_check(check, std::cout, std::cerr);
    polyent::SweepConfig* config = &sweep;
    std::string* dims = &sweep_dims;
    if (*oracle_cmd) {
      config = &oracle;
      dims = &oracle_dims;
    } else if (*diag_cmd) {
      config = &diag;
      dims = &diag_dims;
    }
    config->dims = polyent::parse_dims(*dims);
    return polyent::run_sweep(*config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "polyent: error: " << e.what() << '\n';
    return polyent::kExitInputError;
  }
}
