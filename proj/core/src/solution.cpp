#include "packshift/solution.hpp"

#include <stdexcept>

namespace packshift {

Uid ItemTable::insert(const ItemSpec& item) {
  if (live_.count(item.id)) {
    throw InputError("insert of already-live id '" + item.id + "'");
  }
  Uid uid = next_++;
  specs_.emplace(uid, item);
  live_.emplace(item.id, uid);
  return uid;
}

Uid ItemTable::depart(const std::string& id) {
  auto it = live_.find(id);
  if (it == live_.end()) throw InputError("depart of non-live id '" + id + "'");
  Uid uid = it->second;
  live_.erase(it);
  return uid;
}

const ItemSpec& ItemTable::spec(Uid uid) const {
  auto it = specs_.find(uid);
  if (it == specs_.end()) throw std::logic_error("unknown uid");
  return it->second;
}

Uid ItemTable::live_uid(const std::string& id) const {
  auto it = live_.find(id);
  if (it == live_.end()) throw InputError("id '" + id + "' is not live");
  return it->second;
}

void check_solution_wellformed(const SolutionState& s) {
  if (s.live.size() + s.ghosts.size() != s.placements.size()) {
    throw std::logic_error("solution: live+ghosts do not cover placements");
  }
  for (Uid u : s.live) {
    if (s.ghosts.count(u)) throw std::logic_error("solution: uid both live and ghost");
    if (!s.placements.count(u)) throw std::logic_error("solution: live uid unplaced");
  }
  for (Uid u : s.ghosts) {
    if (!s.placements.count(u)) throw std::logic_error("solution: ghost uid unplaced");
  }
}

Rational cost_from_placements(const SolutionState& s, CostDomain domain,
                              const ItemTable& items) {
  if (domain == CostDomain::bins) {
    std::set<std::int64_t> bins;
    for (const auto& [uid, rec] : s.placements) {
      if (!rec.bin) throw std::logic_error("bin-domain placement without bin index");
      bins.insert(*rec.bin);
    }
    return Rational(static_cast<std::int64_t>(bins.size()));
  }
  Rational top(0);
  for (const auto& [uid, rec] : s.placements) {
    auto sides = item_box_sides(items.spec(uid));
    if (!sides || rec.offset.size() != sides->size()) {
      throw std::logic_error("strip-domain placement without box geometry");
    }
    top = max(top, rec.offset.back() + sides->back());
  }
  return top;
}

SolutionState restrict_solution(const SolutionState& s, const std::set<Uid>& keep,
                                CostDomain domain, const ItemTable& items) {
  SolutionState out;
  for (Uid uid : keep) {
    auto it = s.placements.find(uid);
    if (it == s.placements.end()) {
      throw InputError("restrict: uid " + std::to_string(uid) + " is not placed");
    }
    out.placements.emplace(uid, it->second);
    if (s.live.count(uid)) {
      out.live.insert(uid);
    } else {
      out.ghosts.insert(uid);
    }
  }
  if (domain == CostDomain::bins) {
    out.cost = cost_from_placements(out, domain, items);
  } else {
    out.cost = s.cost;  // committed strip height does not shrink
  }
  return out;
}

}  // namespace packshift
