#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "packshift/generate.hpp"
#include "packshift/robust.hpp"
#include "packshift/trace_io.hpp"

namespace packshift {

// One simulator run, declared as JSON:
//
//   {
//     "problem": "vector", "d": 2, "epsilon": "1/10",
//     "online": "default", "offline": "exact-vector",
//     "check": true, "opt_oracle_cap": 10,
//     "normalize": false, "seed": 7,
//     "generator": {"type": "churn", "n": 500, ...}   // or "trace": "path"
//   }
//
// Omitting "epsilon" runs the online algorithm alone (no repacking).
struct ExperimentConfig {
  RunnerConfig runner;
  bool normalize = false;
  std::uint64_t seed = 0;
  std::optional<GeneratorSpec> generator;
  std::string trace_path;
};

ExperimentConfig parse_experiment_config(const std::string& json_text);

// Canonical orientation: rect sides as (min, max), box sides ascending.
// Models inputs that may be rotated before insertion; off by default.
ItemSpec normalize_orientation(ItemSpec item);

// The declared trace: generated from the spec and seed, or read from disk.
Trace resolve_trace(const ExperimentConfig& cfg);

struct RunReport {
  std::vector<StepDiagnostics> rows;
  std::vector<Violation> violations;
  std::int64_t phase_count = 0;
  Rational total_migrated;
  Rational total_turnover;
  std::optional<Rational> migration_factor;
  Rational final_cost;
  Rational final_live_cost;
  Rational final_lb;
  std::optional<Rational> max_cost_over_lb;
  bool final_valid = true;
  std::string online_name;
  std::string offline_name;  // empty when running online-only
  std::map<std::string, std::string> constants;
  SolutionFile final_solution;  // live items at the end of the trace
};

RunReport run_experiment(const Trace& trace, const RunnerConfig& cfg,
                         bool normalize);

// Per-event table, one row per event:
//   t,op,id,cost,live_cost,lb,phase_end,migrated,ledger_factor,bound,bound_ok
void write_diagnostics_csv(std::ostream& out, const RunReport& report);
void write_diagnostics_jsonl(std::ostream& out, const RunReport& report);

// Whole-run summary as pretty-printed JSON text.
std::string report_summary_json(const RunReport& report);

}  // namespace packshift
