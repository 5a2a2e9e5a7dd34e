#include "packshift/generate.hpp"

#include <algorithm>
#include <random>

#include "json.hpp"

namespace packshift {

namespace {

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<std::int64_t>(
                  rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct SideDrawer {
  const GeneratorSpec& spec;
  std::mt19937_64& rng;

  Rational uniform() const {
    std::int64_t lo = (spec.size_min * Rational(spec.grid)).ceil();
    std::int64_t hi = (spec.size_max * Rational(spec.grid)).floor();
    lo = std::clamp<std::int64_t>(lo, 1, spec.grid);
    hi = std::clamp<std::int64_t>(hi, lo, spec.grid);
    return Rational(pick(rng, lo, hi), spec.grid);
  }

  Rational powerlaw() const {
    int c = static_cast<int>(pick(rng, 0, spec.exponent));
    std::int64_t hi = std::max<std::int64_t>(1, spec.grid >> c);
    std::int64_t lo = std::min<std::int64_t>(hi, (spec.grid >> (c + 1)) + 1);
    return Rational(pick(rng, lo, hi), spec.grid);
  }

  Rational draw() const { return spec.type == "powerlaw" ? powerlaw() : uniform(); }

  Rational fixed(const Rational& size) const {
    std::int64_t ticks = (size * Rational(spec.grid)).floor();
    return Rational(std::clamp<std::int64_t>(ticks, 1, spec.grid), spec.grid);
  }
};

ItemSpec make_item(const GeneratorSpec& spec, const std::string& id,
                   const SideDrawer& side, bool burst_size) {
  auto one = [&] { return burst_size ? side.fixed(spec.size_max) : side.draw(); };
  ItemSpec item;
  item.id = id;
  switch (spec.problem) {
    case Problem::strip2d:
    case Problem::bin2d:
      item.shape = Rect2D{one(), one()};
      break;
    case Problem::strip_d:
    case Problem::bin_d: {
      Hyperrect r;
      for (int k = 0; k < spec.d; ++k) r.sides.push_back(one());
      item.shape = std::move(r);
      break;
    }
    case Problem::strip_hypercube:
    case Problem::bin_hypercube:
      item.shape = Hypercube{spec.d, one()};
      break;
    case Problem::vector_pack: {
      VectorLoad v;
      for (int k = 0; k < spec.d; ++k) v.components.push_back(one());
      item.shape = std::move(v);
      break;
    }
  }
  return item;
}

}  // namespace

GeneratorSpec parse_generator_spec(const std::string& json_text) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("generator spec: ") + e.what());
  }
  GeneratorSpec spec;
  auto rational_of = [](const nlohmann::json& v, const char* key) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw InputError(std::string("generator spec: '") + key +
                     "' must be an exact size string");
  };
  for (const auto& [key, value] : obj.items()) {
    if (key == "type") spec.type = value.get<std::string>();
    else if (key == "problem") spec.problem = parse_problem(value.get<std::string>());
    else if (key == "d") spec.d = value.get<int>();
    else if (key == "n") spec.n = value.get<std::int64_t>();
    else if (key == "size_min") spec.size_min = rational_of(value, "size_min");
    else if (key == "size_max") spec.size_max = rational_of(value, "size_max");
    else if (key == "exponent") spec.exponent = value.get<int>();
    else if (key == "depart_prob") spec.depart_prob = rational_of(value, "depart_prob");
    else if (key == "live_cap") spec.live_cap = value.get<std::int64_t>();
    else if (key == "epsilon") spec.epsilon = rational_of(value, "epsilon");
    else if (key == "grid") spec.grid = value.get<std::int64_t>();
    else throw InputError("generator spec: unknown field '" + key + "'");
  }
  if (spec.type != "uniform" && spec.type != "powerlaw" && spec.type != "churn" &&
      spec.type != "phase-burst") {
    throw InputError("generator spec: unknown type '" + spec.type + "'");
  }
  if (spec.n < 0) throw InputError("generator spec: n must be >= 0");
  if (spec.d < 1) throw InputError("generator spec: d must be >= 1");
  if (spec.grid < 2 || spec.grid > (std::int64_t(1) << 20)) {
    throw InputError("generator spec: grid must lie in [2, 2^20]");
  }
  if (spec.size_min <= Rational(0) || spec.size_max > Rational(1) ||
      spec.size_min > spec.size_max) {
    throw InputError("generator spec: need 0 < size_min <= size_max <= 1");
  }
  if (spec.exponent < 0 || spec.exponent > 20) {
    throw InputError("generator spec: exponent must lie in [0, 20]");
  }
  if (spec.depart_prob < Rational(0) || spec.depart_prob > Rational(1)) {
    throw InputError("generator spec: depart_prob must lie in [0, 1]");
  }
  return spec;
}

Trace generate_trace(const GeneratorSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SideDrawer side{spec, rng};
  Trace trace;
  std::int64_t counter = 0;

  if (spec.type == "uniform" || spec.type == "powerlaw") {
    for (std::int64_t i = 0; i < spec.n; ++i) {
      trace.events.push_back(
          {i, InsertOp{make_item(spec, "g" + std::to_string(counter++), side,
                                 false)}});
    }
    return trace;
  }

  if (spec.type == "churn") {
    std::vector<std::string> live;
    std::int64_t threshold = (spec.depart_prob * Rational(1000000)).floor();
    for (std::int64_t i = 0; i < spec.n; ++i) {
      bool force = spec.live_cap > 0 &&
                   static_cast<std::int64_t>(live.size()) >= spec.live_cap;
      bool roll = !live.empty() &&
                  static_cast<std::int64_t>(rng() % 1000000) < threshold;
      if (force || roll) {
        std::size_t at = rng() % live.size();
        trace.events.push_back({i, DepartOp{live[at]}});
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(at));
      } else {
        ItemSpec item = make_item(spec, "g" + std::to_string(counter++), side,
                                  false);
        live.push_back(item.id);
        trace.events.push_back({i, InsertOp{std::move(item)}});
      }
    }
    return trace;
  }

  // phase-burst: stay just under the volume-change trigger with small items,
  // then cross it with a size_max item, mirroring the phase accounting.
  Rational v_total(0);
  Rational v_changed(0);
  for (std::int64_t i = 0; i < spec.n; ++i) {
    ItemSpec small = make_item(spec, "g" + std::to_string(counter), side, false);
    Rational v_small = item_size(small);
    bool quiet = v_changed + v_small <= spec.epsilon * (v_total + v_small);
    ItemSpec item = quiet ? std::move(small)
                          : make_item(spec, "g" + std::to_string(counter), side,
                                      true);
    ++counter;
    Rational vol = item_size(item);
    v_total += vol;
    v_changed += vol;
    if (v_changed > spec.epsilon * v_total) v_changed = Rational(0);
    trace.events.push_back({i, InsertOp{std::move(item)}});
  }
  return trace;
}

}  // namespace packshift
