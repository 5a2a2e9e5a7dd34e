#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "packshift/experiment.hpp"
#include "packshift/offline.hpp"

namespace {

using namespace packshift;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitViolation = 2;
constexpr int kExitInput = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_run(const std::string& config_path, const std::optional<std::string>& trace,
            const std::optional<std::uint64_t>& seed, const std::string& csv_out,
            const std::string& jsonl_out, const std::string& solution_out,
            bool strict) {
  ExperimentConfig cfg = parse_experiment_config(slurp(config_path));
  if (trace) {
    cfg.trace_path = *trace;
    cfg.generator.reset();
  }
  if (seed) cfg.seed = *seed;

  Trace events = resolve_trace(cfg);
  RunReport report = run_experiment(events, cfg.runner, cfg.normalize);

  if (!csv_out.empty()) {
    std::ofstream out(csv_out);
    if (!out) throw InputError("cannot open '" + csv_out + "' for writing");
    write_diagnostics_csv(out, report);
  }
  if (!jsonl_out.empty()) {
    std::ofstream out(jsonl_out);
    if (!out) throw InputError("cannot open '" + jsonl_out + "' for writing");
    write_diagnostics_jsonl(out, report);
  }
  if (!solution_out.empty()) {
    write_solution_file(solution_out, report.final_solution);
  }

  std::cout << report_summary_json(report) << "\n";
  if (strict && (!report.violations.empty() || !report.final_valid)) {
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_generate(const std::string& spec_path, std::uint64_t seed,
                 const std::string& out_path) {
  GeneratorSpec spec = parse_generator_spec(slurp(spec_path));
  Trace trace = generate_trace(spec, seed);
  if (out_path.empty()) {
    write_trace(std::cout, trace);
  } else {
    write_trace_file(out_path, trace);
  }
  return kExitOk;
}

int cmd_validate(const std::string& trace_path, const std::string& solution_path) {
  Trace trace = read_trace_file(trace_path);
  SolutionFile sol = read_solution_file(solution_path);
  ValidityReport report = validate_solution_file(trace, sol);

  nlohmann::ordered_json obj;
  obj["valid"] = report.ok();
  obj["overlaps"] = report.overlaps.size();
  obj["out_of_bounds"] = report.out_of_bounds.size();
  obj["overloaded_bins"] = report.overloaded_bins.size();
  std::cout << obj.dump(2) << "\n";
  return report.ok() ? kExitOk : kExitViolation;
}

int cmd_oracle(const std::string& trace_path, std::optional<std::int64_t> at,
               const std::string& kind, const std::string& problem_name_arg,
               int d) {
  Trace trace = read_trace_file(trace_path);
  std::map<std::string, ItemSpec> live;
  for (const Event& ev : trace.events) {
    if (at && ev.t > *at) break;
    if (const auto* ins = std::get_if<InsertOp>(&ev.op)) {
      live[ins->item.id] = ins->item;
    } else {
      live.erase(std::get<DepartOp>(ev.op).id);
    }
  }

  nlohmann::ordered_json obj;
  obj["live_items"] = live.size();
  if (kind == "vector-exact") {
    std::vector<std::vector<Rational>> loads;
    for (const auto& [id, item] : live) {
      const auto* v = std::get_if<VectorLoad>(&item.shape);
      if (!v) throw InputError("vector-exact needs vector items");
      loads.push_back(v->components);
    }
    obj["opt"] = exact_vector_bins(loads);
  } else if (kind == "bottom-left") {
    std::vector<Rect2D> rects;
    for (const auto& [id, item] : live) {
      const auto* r = std::get_if<Rect2D>(&item.shape);
      if (!r) throw InputError("bottom-left needs rect2d items");
      rects.push_back(*r);
    }
    obj["upper_bound"] = best_bottom_left_height(rects).str();
  } else if (kind == "bounds") {
    if (problem_name_arg.empty()) {
      throw InputError("--problem is required for --kind bounds");
    }
    Problem problem = parse_problem(problem_name_arg);
    std::vector<ItemSpec> items;
    for (const auto& [id, item] : live) {
      check_item_for_problem(item, problem, d);
      items.push_back(item);
    }
    obj["lower_bound"] = packing_lower_bound(problem, d, items).str();
  } else {
    throw InputError("unknown oracle kind '" + kind + "'");
  }
  std::cout << obj.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "packshift: dynamic packing with phase-based repacking and bounded "
      "migration"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "replay a trace through a configured run");
  std::string run_config;
  std::optional<std::string> run_trace;
  std::optional<std::uint64_t> run_seed;
  std::string run_csv, run_jsonl, run_solution;
  bool run_strict = false;
  run->add_option("--config", run_config, "experiment config JSON")->required();
  run->add_option("--trace", run_trace, "trace file (overrides the config)");
  run->add_option("--seed", run_seed, "generator seed (overrides the config)");
  run->add_option("--out", run_csv, "write per-event diagnostics CSV here");
  run->add_option("--diag", run_jsonl, "write per-event diagnostics JSONL here");
  run->add_option("--solution-out", run_solution, "write the final packing here");
  run->add_flag("--strict", run_strict,
                "exit 2 when any monitor fired or the final packing is invalid");

  // generate
  auto* gen = app.add_subcommand("generate", "write a trace from a generator spec");
  std::string gen_spec, gen_out;
  std::uint64_t gen_seed = 0;
  gen->add_option("--spec", gen_spec, "generator spec JSON")->required();
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // validate
  auto* val = app.add_subcommand("validate", "check a packing against its trace");
  std::string val_trace, val_solution;
  val->add_option("--trace", val_trace, "trace file")->required();
  val->add_option("--solution", val_solution, "solution file")->required();

  // oracle
  auto* ora = app.add_subcommand("oracle", "reference bounds for small instances");
  std::string ora_trace, ora_kind, ora_problem;
  std::optional<std::int64_t> ora_at;
  int ora_d = 2;
  ora->add_option("--trace", ora_trace, "trace file")->required();
  ora->add_option("--at", ora_at, "cut the trace after this time (default: end)");
  ora->add_option("--kind", ora_kind, "vector-exact | bottom-left | bounds")
      ->required();
  ora->add_option("--problem", ora_problem, "problem name (for bounds)");
  ora->add_option("--d", ora_d, "dimension (for bounds)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      return cmd_run(run_config, run_trace, run_seed, run_csv, run_jsonl,
                     run_solution, run_strict);
    }
    if (*gen) return cmd_generate(gen_spec, gen_seed, gen_out);
    if (*val) return cmd_validate(val_trace, val_solution);
    if (*ora) return cmd_oracle(ora_trace, ora_at, ora_kind, ora_problem, ora_d);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const RationalOverflow& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
