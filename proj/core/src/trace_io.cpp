#include "packshift/trace_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace packshift {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational rational_from_json(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const RationalParseError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_float()) {
    throw InputError(where + ": floating-point sizes are not exact; "
                             "write them as strings like \"7/20\"");
  }
  throw InputError(where + ": expected an exact size");
}

const nlohmann::json& field(const nlohmann::json& obj, const char* key,
                            const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

ItemSpec item_from_json(const nlohmann::json& obj, const std::string& where) {
  ItemSpec item;
  item.id = field(obj, "id", where).get<std::string>();
  std::string kind = field(obj, "kind", where).get<std::string>();
  if (kind == "rect2d") {
    item.shape = Rect2D{rational_from_json(field(obj, "w", where), where),
                        rational_from_json(field(obj, "h", where), where)};
  } else if (kind == "hyperrect") {
    Hyperrect r;
    for (const auto& s : field(obj, "sides", where)) {
      r.sides.push_back(rational_from_json(s, where));
    }
    item.shape = std::move(r);
  } else if (kind == "hypercube") {
    item.shape = Hypercube{field(obj, "dim", where).get<int>(),
                           rational_from_json(field(obj, "side", where), where)};
  } else if (kind == "vector") {
    VectorLoad v;
    for (const auto& c : field(obj, "components", where)) {
      v.components.push_back(rational_from_json(c, where));
    }
    item.shape = std::move(v);
  } else {
    throw InputError(where + ": unknown item kind '" + kind + "'");
  }
  validate_item(item);
  return item;
}

ordered_json item_to_json(const ItemSpec& item) {
  ordered_json obj;
  obj["id"] = item.id;
  obj["kind"] = item_kind_name(item);
  if (const auto* r = std::get_if<Rect2D>(&item.shape)) {
    obj["w"] = r->w.str();
    obj["h"] = r->h.str();
  } else if (const auto* hr = std::get_if<Hyperrect>(&item.shape)) {
    ordered_json sides = ordered_json::array();
    for (const auto& s : hr->sides) sides.push_back(s.str());
    obj["sides"] = std::move(sides);
  } else if (const auto* hc = std::get_if<Hypercube>(&item.shape)) {
    obj["dim"] = hc->dim;
    obj["side"] = hc->side.str();
  } else {
    const auto& v = std::get<VectorLoad>(item.shape);
    ordered_json comps = ordered_json::array();
    for (const auto& c : v.components) comps.push_back(c.str());
    obj["components"] = std::move(comps);
  }
  return obj;
}

}  // namespace

Trace read_trace(std::istream& in) {
  Trace trace;
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::string where = "trace line " + std::to_string(lineno);
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(where + ": " + e.what());
    }
    Event ev;
    ev.t = field(obj, "t", where).get<std::int64_t>();
    std::string op = field(obj, "op", where).get<std::string>();
    if (op == "insert") {
      ev.op = InsertOp{item_from_json(obj, where)};
    } else if (op == "depart") {
      ev.op = DepartOp{field(obj, "id", where).get<std::string>()};
    } else {
      throw InputError(where + ": unknown op '" + op + "'");
    }
    trace.events.push_back(std::move(ev));
  }
  validate_trace(trace);
  return trace;
}

Trace read_trace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open trace file '" + path + "'");
  return read_trace(in);
}

void write_trace(std::ostream& out, const Trace& trace) {
  for (const Event& ev : trace.events) {
    ordered_json obj;
    obj["t"] = ev.t;
    if (const auto* ins = std::get_if<InsertOp>(&ev.op)) {
      obj["op"] = "insert";
      ordered_json item = item_to_json(ins->item);
      for (auto& [k, v] : item.items()) obj[k] = v;
    } else {
      obj["op"] = "depart";
      obj["id"] = std::get<DepartOp>(ev.op).id;
    }
    out << obj.dump() << '\n';
  }
}

void write_trace_file(const std::string& path, const Trace& trace) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  write_trace(out, trace);
}

SolutionFile read_solution(std::istream& in) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("solution: ") + e.what());
  }
  SolutionFile sol;
  sol.problem = field(obj, "problem", "solution").get<std::string>();
  sol.d = field(obj, "d", "solution").get<int>();
  sol.cost = rational_from_json(field(obj, "cost", "solution"), "solution cost");
  for (const auto& entry : field(obj, "items", "solution")) {
    std::string id = field(entry, "id", "solution item").get<std::string>();
    std::string where = "solution item '" + id + "'";
    PlacementRecord rec;
    if (entry.contains("bin")) rec.bin = entry["bin"].get<std::int64_t>();
    if (entry.contains("offset")) {
      for (const auto& o : entry["offset"]) {
        rec.offset.push_back(rational_from_json(o, where));
      }
    }
    if (entry.contains("pool")) rec.pool = entry["pool"].get<std::string>();
    if (!sol.items.emplace(id, std::move(rec)).second) {
      throw InputError(where + " appears twice");
    }
  }
  return sol;
}

SolutionFile read_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open solution file '" + path + "'");
  return read_solution(in);
}

void write_solution(std::ostream& out, const SolutionFile& sol) {
  ordered_json obj;
  obj["problem"] = sol.problem;
  obj["d"] = sol.d;
  obj["cost"] = sol.cost.str();
  ordered_json items = ordered_json::array();
  for (const auto& [id, rec] : sol.items) {
    ordered_json entry;
    entry["id"] = id;
    if (rec.bin) entry["bin"] = *rec.bin;
    if (!rec.offset.empty()) {
      ordered_json off = ordered_json::array();
      for (const auto& o : rec.offset) off.push_back(o.str());
      entry["offset"] = std::move(off);
    }
    if (rec.pool) entry["pool"] = *rec.pool;
    items.push_back(std::move(entry));
  }
  obj["items"] = std::move(items);
  out << obj.dump(2) << '\n';
}

void write_solution_file(const std::string& path, const SolutionFile& sol) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  write_solution(out, sol);
}

SolutionFile make_solution_file(const SolutionState& s, const ItemTable& items,
                                Problem problem, int d) {
  SolutionFile sol;
  sol.problem = problem_name(problem);
  sol.d = d;
  sol.cost = s.cost;
  for (Uid uid : s.live) {
    sol.items.emplace(items.spec(uid).id, s.placements.at(uid));
  }
  return sol;
}

ValidityReport validate_solution_file(const Trace& trace, const SolutionFile& sol) {
  validate_trace(trace);
  Problem problem = parse_problem(sol.problem);

  ItemTable table;
  SolutionState state;
  std::map<std::string, Uid> live;
  for (const Event& ev : trace.events) {
    if (const auto* ins = std::get_if<InsertOp>(&ev.op)) {
      check_item_for_problem(ins->item, problem, sol.d);
      live[ins->item.id] = table.insert(ins->item);
    } else {
      live.erase(std::get<DepartOp>(ev.op).id);
    }
  }

  if (live.size() != sol.items.size()) {
    throw InputError("solution places " + std::to_string(sol.items.size()) +
                     " items but the trace ends with " +
                     std::to_string(live.size()) + " live");
  }
  for (const auto& [id, uid] : live) {
    auto it = sol.items.find(id);
    if (it == sol.items.end()) {
      throw InputError("solution is missing live item '" + id + "'");
    }
    state.placements[uid] = it->second;
    state.live.insert(uid);
  }
  state.cost = sol.cost;
  return validate_packing(state, table, problem, sol.d);
}

}  // namespace packshift
