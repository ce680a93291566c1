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

#include "polyent/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "polyent/concurrence.hpp"
#include "polyent/generators.hpp"
#include "polyent/oracle.hpp"
#include "polyent/polygamy.hpp"
#include "polyent/rng.hpp"
#include "polyent/serialize.hpp"

namespace polyent {
namespace {

using nlohmann::json;

struct SampleOutcome {
  std::string row;
  double value = 0.0;   // slack, gap or excess
  bool violation = false;
  bool overcounted = false;
  json state;           // filled for violations only
};

PolygamyMode to_polygamy_mode(SweepMode mode) {
  return mode == SweepMode::kGeneralTau ? PolygamyMode::kGeneralTau : PolygamyMode::kMultiQubitCoa;
}

std::string header_for(const SweepConfig& config) {
  switch (config.mode) {
    case SweepMode::kGeneralTau:
    case SweepMode::kMultiQubitCoa: {
      PolygamyReport shape;
      for (std::size_t k = 0; k < config.dims.size(); ++k)
        if (k != config.focus) shape.partners.push_back(k);
      return polygamy_csv_header(shape);
    }
    case SweepMode::kOracleCompare:
      return "state_id,n,dims,focus,rank,tau,oracle_lower,gap,converged";
    case SweepMode::kDiagnostic:
      return "state_id,n,dims,focus,cut_concurrence_sq,subspace_sum_sq,excess";
  }
  return {};
}

SampleOutcome polygamy_outcome(const std::string& id, const Ket& psi, std::size_t focus,
                               PolygamyMode mode) {
  const PolygamyReport report = polygamy_report(psi, focus, mode);
  SampleOutcome o;
  o.row = polygamy_csv_row(id, report);
  o.value = report.slack;
  o.violation = report.slack < -kSlackTolerance;
  if (o.violation) o.state = to_json(psi);
  return o;
}

SampleOutcome diagnostic_outcome(const std::string& id, const Ket& psi, std::size_t focus) {
  const SubspaceDiagnostic d = subspace_sum_diagnostic(psi, focus);
  SampleOutcome o;
  o.value = d.subspace_sum_sq - d.cut_concurrence_sq;
  o.row = id + ',' + std::to_string(psi.subsystems()) + ',' + dims_label(psi.dims()) + ',' +
          std::to_string(focus) + ',' + format_double(d.cut_concurrence_sq) + ',' +
          format_double(d.subspace_sum_sq) + ',' + format_double(o.value);
  o.violation = o.value < -kDiagnosticTolerance;
  o.overcounted = o.value > kDiagnosticTolerance;
  if (o.violation) o.state = to_json(psi);
  return o;
}

SampleOutcome oracle_outcome(const std::string& id, const DensityMatrix& rho, std::size_t focus,
                             std::size_t rank, std::size_t budget, std::uint64_t seed) {
  const Bipartition cut = Bipartition::single(focus);
  OracleOptions options;
  options.budget = budget;
  options.seed = seed;
  const OracleResult oracle = optimize_coa_lower_bound(rho, cut, options);
  const double tau = tau_a(flatten(rho, cut)).tau;
  SampleOutcome o;
  o.value = tau - oracle.best_average;
  o.row = id + ',' + std::to_string(rho.subsystems()) + ',' + dims_label(rho.dims()) + ',' +
          std::to_string(focus) + ',' + std::to_string(rank) + ',' + format_double(tau) + ',' +
          format_double(oracle.best_average) + ',' + format_double(o.value) + ',' +
          (oracle.converged ? "1" : "0");
  o.violation = o.value < -kGapTolerance;
  if (o.violation) o.state = to_json(rho);
  return o;
}

SampleOutcome run_sample(const SweepConfig& config, std::size_t index) {
  const std::string id = std::to_string(index);
  const std::uint64_t sample_seed = derive_seed(config.seed, index);
  if (config.mode == SweepMode::kOracleCompare) {
    Rng rng(sample_seed);
    const std::size_t dim = total_dimension(config.dims);
    const std::size_t rank =
        config.rank != 0 ? config.rank : 1 + rng.bits() % std::min<std::size_t>(dim, 4);
    const DensityMatrix rho = random_mixed_state(config.dims, rank, rng);
    return oracle_outcome(id, rho, config.focus, rank, config.oracle_budget, rng.bits());
  }
  const Ket psi = haar_random_pure(config.dims, sample_seed);
  if (config.mode == SweepMode::kDiagnostic) return diagnostic_outcome(id, psi, config.focus);
  return polygamy_outcome(id, psi, config.focus, to_polygamy_mode(config.mode));
}

// Fills outcomes[i] = run_sample(config, i) on a small worker pool. Results are
// placed by index, so completion order never leaks into the output.
std::vector<SampleOutcome> run_samples(const SweepConfig& config) {
  std::vector<SampleOutcome> outcomes(config.samples);
  unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(config.samples)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < config.samples; i = next++) {
      try {
        outcomes[i] = run_sample(config, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.samples;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

std::string summary_line(SweepMode mode, const std::vector<SampleOutcome>& outcomes) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  std::size_t violations = 0;
  std::size_t overcounted = 0;
  for (const SampleOutcome& o : outcomes) {
    lo = std::min(lo, o.value);
    hi = std::max(hi, o.value);
    sum += o.value;
    violations += o.violation ? 1 : 0;
    overcounted += o.overcounted ? 1 : 0;
  }
  const double mean = sum / static_cast<double>(outcomes.size());
  std::string s = "# summary,samples=" + std::to_string(outcomes.size());
  switch (mode) {
    case SweepMode::kGeneralTau:
    case SweepMode::kMultiQubitCoa:
      s += ",min_slack=" + format_double(lo) + ",mean_slack=" + format_double(mean);
      break;
    case SweepMode::kOracleCompare:
      s += ",min_gap=" + format_double(lo) + ",max_gap=" + format_double(hi) +
           ",mean_gap=" + format_double(mean);
      break;
    case SweepMode::kDiagnostic:
      s += ",min_excess=" + format_double(lo) + ",mean_excess=" + format_double(mean) +
           ",overcounted=" + std::to_string(overcounted);
      break;
  }
  s += ",violations=" + std::to_string(violations);
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output path " + path);
  f << text;
  if (!f) throw std::invalid_argument("failed writing output path " + path);
}

}  // namespace

void write_violation_report(const std::string& path, SweepMode mode,
                            const std::vector<ViolationRecord>& found) {
  json list = json::array();
  for (const ViolationRecord& v : found) {
    list.push_back({{"state_id", v.state_id}, {"value", v.value}, {"state", v.state}});
  }
  json doc = {{"mode", sweep_mode_name(mode)}, {"violations", std::move(list)}};
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write violation file " + path);
  f << doc.dump(2) << '\n';
}

std::optional<SweepMode> parse_sweep_mode(std::string_view name) {
  if (name == "general-tau") return SweepMode::kGeneralTau;
  if (name == "multi-qubit-coa") return SweepMode::kMultiQubitCoa;
  if (name == "oracle-compare") return SweepMode::kOracleCompare;
  if (name == "diagnostic") return SweepMode::kDiagnostic;
  return std::nullopt;
}

std::string_view sweep_mode_name(SweepMode mode) {
  switch (mode) {
    case SweepMode::kGeneralTau:
      return "general-tau";
    case SweepMode::kMultiQubitCoa:
      return "multi-qubit-coa";
    case SweepMode::kOracleCompare:
      return "oracle-compare";
    case SweepMode::kDiagnostic:
      return "diagnostic";
  }
  return "unknown";
}

Dims parse_dims(std::string_view text) {
  Dims dims;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view part = text.substr(0, comma);
    std::size_t value = 0;
    const auto res = std::from_chars(part.data(), part.data() + part.size(), value);
    if (res.ec != std::errc{} || res.ptr != part.data() + part.size()) {
      throw std::invalid_argument("invalid --dims entry '" + std::string(part) + "'");
    }
    dims.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw std::invalid_argument("invalid --dims: trailing comma");
  }
  if (dims.empty()) throw std::invalid_argument("--dims is empty");
  return dims;
}

void validate(const SweepConfig& config) {
  if (config.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  if (config.dims.empty()) throw std::invalid_argument("--dims is required");
  for (std::size_t d : config.dims) {
    if (d < 2) throw std::invalid_argument("every entry of --dims must be >= 2");
  }
  if (config.focus >= config.dims.size()) throw std::invalid_argument("--focus out of range");
  if (config.dims.size() < 2) throw std::invalid_argument("need at least two subsystems");
  if ((config.mode == SweepMode::kGeneralTau || config.mode == SweepMode::kDiagnostic) &&
      config.dims.size() < 3) {
    throw std::invalid_argument("this mode needs at least three subsystems");
  }
  if (config.mode == SweepMode::kMultiQubitCoa &&
      std::any_of(config.dims.begin(), config.dims.end(), [](std::size_t d) { return d != 2; })) {
    throw std::invalid_argument("multi-qubit-coa requires all dims = 2");
  }
  if (config.mode == SweepMode::kOracleCompare) {
    if (config.oracle_budget < 1) throw std::invalid_argument("--budget must be >= 1");
    if (config.rank > total_dimension(config.dims)) throw std::invalid_argument("--rank exceeds dimension");
  }
}

std::string violation_path(const std::string& output_path, const std::string& fallback) {
  return (output_path.empty() ? fallback : output_path) + ".violation.json";
}

int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  validate(config);
  const std::vector<SampleOutcome> outcomes = run_samples(config);

  std::string text = header_for(config) + '\n';
  std::vector<ViolationRecord> found;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    text += outcomes[i].row;
    text += '\n';
    if (outcomes[i].violation) found.push_back({std::to_string(i), outcomes[i].value, outcomes[i].state});
  }
  text += summary_line(config.mode, outcomes) + '\n';

  if (config.output_path.empty()) {
    out << text;
  } else {
    write_text(config.output_path, text);
  }
  if (!found.empty()) {
    const std::string path = violation_path(config.output_path, "polyent-sweep");
    write_violation_report(path, config.mode, found);
    err << "polyent: " << found.size() << " violation(s); states written to " << path << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

int run_check(const CheckRequest& request, std::ostream& out, std::ostream& err) {
  std::ifstream f(request.state_file, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open state file " + request.state_file);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + request.state_file + ": " + e.what());
  }

  SweepConfig shape;
  shape.mode = request.mode;
  shape.focus = request.focus;
  SampleOutcome outcome;
  if (request.mode == SweepMode::kOracleCompare) {
    const DensityMatrix rho =
        is_density_json(j) ? density_from_json(j) : DensityMatrix::pure(ket_from_json(j));
    if (request.focus >= rho.subsystems()) throw std::invalid_argument("--focus out of range");
    shape.dims = rho.dims();
    const std::size_t rank = psd_factor(rho.matrix()).rank();
    outcome = oracle_outcome("0", rho, request.focus, rank, request.oracle_budget, request.seed);
  } else {
    if (is_density_json(j)) throw std::invalid_argument("this mode needs a pure state (ket) file");
    const Ket psi = ket_from_json(j);
    shape.dims = psi.dims();
    validate(shape);
    outcome = request.mode == SweepMode::kDiagnostic
                  ? diagnostic_outcome("0", psi, request.focus)
                  : polygamy_outcome("0", psi, request.focus, to_polygamy_mode(request.mode));
  }

  const std::string text = header_for(shape) + '\n' + outcome.row + '\n';
  out << text;
  if (!request.output_path.empty()) write_text(request.output_path, text);
  if (outcome.violation) {
    const std::string path = violation_path(request.output_path, request.state_file);
    write_violation_report(path, request.mode, {{"0", outcome.value, outcome.state}});
    err << "polyent: violation (value " << format_double(outcome.value) << "); state written to "
        << path << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace polyent
