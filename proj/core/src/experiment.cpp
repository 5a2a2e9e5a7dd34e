#include "packshift/experiment.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

namespace packshift {

namespace {

Rational rational_field(const nlohmann::json& v, const char* key) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw InputError(std::string("config: '") + key +
                   "' must be an exact value string");
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  ExperimentConfig cfg;
  bool have_problem = false;
  for (const auto& [key, value] : obj.items()) {
    if (key == "problem") {
      cfg.runner.problem = parse_problem(value.get<std::string>());
      have_problem = true;
    } else if (key == "d") {
      cfg.runner.d = value.get<int>();
    } else if (key == "epsilon") {
      cfg.runner.epsilon = rational_field(value, "epsilon");
    } else if (key == "online") {
      cfg.runner.online_selector = value.get<std::string>();
    } else if (key == "offline") {
      cfg.runner.offline_selector = value.get<std::string>();
    } else if (key == "check") {
      cfg.runner.check = value.get<bool>();
    } else if (key == "opt_oracle_cap") {
      cfg.runner.opt_oracle_cap = value.get<std::size_t>();
    } else if (key == "exact_repack_cap") {
      cfg.runner.exact_repack_cap = value.get<std::size_t>();
    } else if (key == "normalize") {
      cfg.normalize = value.get<bool>();
    } else if (key == "seed") {
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "generator") {
      cfg.generator = parse_generator_spec(value.dump());
    } else if (key == "trace") {
      cfg.trace_path = value.get<std::string>();
    } else {
      throw InputError("config: unknown field '" + key + "'");
    }
  }
  if (!have_problem) throw InputError("config: missing field 'problem'");
  if (cfg.generator && !cfg.trace_path.empty()) {
    throw InputError("config: give either 'generator' or 'trace', not both");
  }
  if (cfg.generator) {
    // The generator always produces items for the configured run.
    cfg.generator->problem = cfg.runner.problem;
    cfg.generator->d = cfg.runner.d;
  }
  return cfg;
}

ItemSpec normalize_orientation(ItemSpec item) {
  if (auto* r = std::get_if<Rect2D>(&item.shape)) {
    if (r->h < r->w) std::swap(r->w, r->h);
  } else if (auto* hr = std::get_if<Hyperrect>(&item.shape)) {
    std::sort(hr->sides.begin(), hr->sides.end());
  }
  return item;
}

Trace resolve_trace(const ExperimentConfig& cfg) {
  if (cfg.generator) return generate_trace(*cfg.generator, cfg.seed);
  if (cfg.trace_path.empty()) {
    throw InputError("config: need a 'generator' block or a 'trace' path");
  }
  return read_trace_file(cfg.trace_path);
}

RunReport run_experiment(const Trace& trace, const RunnerConfig& cfg,
                         bool normalize) {
  validate_trace(trace);
  RobustRunner runner(cfg);

  RunReport report;
  report.rows.reserve(trace.events.size());
  for (const Event& ev : trace.events) {
    if (normalize && is_insert(ev)) {
      Event adjusted = ev;
      auto& ins = std::get<InsertOp>(adjusted.op);
      ins.item = normalize_orientation(std::move(ins.item));
      report.rows.push_back(runner.step(adjusted));
    } else {
      report.rows.push_back(runner.step(ev));
    }
    const StepDiagnostics& row = report.rows.back();
    if (row.lb > Rational(0)) {
      Rational ratio = row.cost / row.lb;
      if (!report.max_cost_over_lb || ratio > *report.max_cost_over_lb) {
        report.max_cost_over_lb = ratio;
      }
    }
  }

  report.violations = runner.sink().violations();
  report.phase_count = runner.phase_count();
  report.total_migrated = runner.ledger().migrated();
  report.total_turnover = runner.ledger().inserted() + runner.ledger().departed();
  report.migration_factor = runner.ledger().factor();
  report.final_cost = runner.solution().cost;
  report.online_name = runner.online().name();
  if (!report.rows.empty()) {
    report.final_live_cost = report.rows.back().live_cost;
    report.final_lb = report.rows.back().lb;
  }
  report.final_valid =
      validate_packing(runner.solution(), runner.items(), cfg.problem, cfg.d).ok();
  report.final_solution =
      make_solution_file(runner.solution(), runner.items(), cfg.problem, cfg.d);

  report.constants["problem"] = problem_name(cfg.problem);
  report.constants["d"] = std::to_string(cfg.d);
  if (auto beta = runner.online().volume_ratio()) {
    report.constants["beta"] = beta->str();
  }
  report.constants["c_on"] = runner.online().additive().str();
  if (cfg.epsilon) {
    report.constants["epsilon"] = cfg.epsilon->str();
    auto offline = make_offline(cfg.problem, cfg.d, cfg.offline_selector,
                                cfg.exact_repack_cap);
    report.offline_name = offline->name();
    if (auto gamma = offline->opt_gamma()) {
      report.constants["gamma"] = gamma->str();
      report.constants["c_off"] = offline->opt_additive().str();
    }
    Rational cap = Rational(1) / *cfg.epsilon + Rational(1);
    report.constants["migration_cap"] = cap.str();
  }
  return report;
}

void write_diagnostics_csv(std::ostream& out, const RunReport& report) {
  out << "t,op,id,cost,live_cost,lb,phase_end,migrated,ledger_factor,bound,"
         "bound_ok\n";
  for (const StepDiagnostics& row : report.rows) {
    out << row.t << ',' << (row.insert ? "insert" : "depart") << ',' << row.id
        << ',' << row.cost.str() << ',' << row.live_cost.str() << ','
        << row.lb.str() << ',' << (row.phase_end ? 1 : 0) << ','
        << row.migrated.str() << ',';
    if (row.ledger_factor) out << row.ledger_factor->str();
    out << ',';
    if (row.bound) out << row.bound->str();
    out << ',' << (row.bound_ok ? 1 : 0) << '\n';
  }
}

void write_diagnostics_jsonl(std::ostream& out, const RunReport& report) {
  for (const StepDiagnostics& row : report.rows) {
    nlohmann::ordered_json obj;
    obj["t"] = row.t;
    obj["op"] = row.insert ? "insert" : "depart";
    obj["id"] = row.id;
    obj["cost"] = row.cost.str();
    obj["live_cost"] = row.live_cost.str();
    obj["lb"] = row.lb.str();
    obj["phase_end"] = row.phase_end;
    obj["migrated"] = row.migrated.str();
    if (row.ledger_factor) obj["ledger_factor"] = row.ledger_factor->str();
    if (row.bound) {
      obj["bound"] = row.bound->str();
      obj["bound_kind"] = row.bound_kind;
    }
    obj["bound_ok"] = row.bound_ok;
    out << obj.dump() << '\n';
  }
}

std::string report_summary_json(const RunReport& report) {
  nlohmann::ordered_json obj;
  obj["events"] = report.rows.size();
  obj["phases"] = report.phase_count;
  obj["total_migrated"] = report.total_migrated.str();
  obj["total_turnover"] = report.total_turnover.str();
  if (report.migration_factor) {
    obj["migration_factor"] = report.migration_factor->str();
  }
  obj["final_cost"] = report.final_cost.str();
  obj["final_live_cost"] = report.final_live_cost.str();
  obj["final_lb"] = report.final_lb.str();
  if (report.max_cost_over_lb) {
    obj["max_cost_over_lb"] = report.max_cost_over_lb->str();
  }
  obj["final_valid"] = report.final_valid;
  obj["online"] = report.online_name;
  if (!report.offline_name.empty()) obj["offline"] = report.offline_name;
  nlohmann::ordered_json consts;
  for (const auto& [k, v] : report.constants) consts[k] = v;
  obj["constants"] = std::move(consts);
  nlohmann::ordered_json viols = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    nlohmann::ordered_json entry;
    entry["t"] = v.t;
    entry["monitor"] = v.monitor;
    entry["detail"] = v.detail;
    viols.push_back(std::move(entry));
  }
  obj["violations"] = std::move(viols);
  return obj.dump(2);
}

}  // namespace packshift
