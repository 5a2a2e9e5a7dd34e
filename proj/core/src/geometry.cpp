#include "packshift/geometry.hpp"

#include <stdexcept>

namespace packshift {

bool boxes_disjoint(const Box& a, const Box& b) {
  if (a.origin.size() != b.origin.size()) {
    throw std::logic_error("boxes of different dimension");
  }
  for (std::size_t k = 0; k < a.origin.size(); ++k) {
    if (a.origin[k] + a.sides[k] <= b.origin[k]) return true;
    if (b.origin[k] + b.sides[k] <= a.origin[k]) return true;
  }
  return false;
}

bool box_contains(const Box& outer, const Box& inner) {
  if (outer.origin.size() != inner.origin.size()) {
    throw std::logic_error("boxes of different dimension");
  }
  for (std::size_t k = 0; k < outer.origin.size(); ++k) {
    if (inner.origin[k] < outer.origin[k]) return false;
    if (inner.origin[k] + inner.sides[k] > outer.origin[k] + outer.sides[k]) {
      return false;
    }
  }
  return true;
}

Box placement_box(const PlacementRecord& rec, const ItemSpec& item) {
  auto sides = item_box_sides(item);
  if (!sides) throw std::logic_error("placement_box on a vector load");
  if (rec.offset.size() != sides->size()) {
    throw std::logic_error("placement offset arity mismatch for item '" + item.id + "'");
  }
  return Box{rec.offset, *sides};
}

namespace {

ValidityReport validate_vector(const SolutionState& s, const ItemTable& items, int d) {
  ValidityReport report;
  std::map<std::int64_t, std::vector<Rational>> loads;
  for (const auto& [uid, rec] : s.placements) {
    if (!rec.bin) throw std::logic_error("vector placement without bin index");
    const auto& comps = std::get<VectorLoad>(items.spec(uid).shape).components;
    auto& load = loads.try_emplace(*rec.bin, std::vector<Rational>(d, Rational(0)))
                     .first->second;
    for (int k = 0; k < d; ++k) load[k] += comps[k];
  }
  for (const auto& [bin, load] : loads) {
    for (int k = 0; k < d; ++k) {
      if (load[k] > Rational(1)) {
        report.overloaded_bins.push_back(bin);
        break;
      }
    }
  }
  return report;
}

}  // namespace

ValidityReport validate_packing(const SolutionState& s, const ItemTable& items,
                                Problem problem, int d) {
  if (!is_geometric(problem)) return validate_vector(s, items, d);

  ValidityReport report;
  const bool strip = is_strip(problem);

  struct Entry {
    Uid uid;
    std::int64_t bin;
    Box box;
  };
  std::vector<Entry> entries;
  entries.reserve(s.placements.size());
  for (const auto& [uid, rec] : s.placements) {
    std::int64_t bin = 0;
    if (!strip) {
      if (!rec.bin) throw std::logic_error("bin placement without bin index");
      bin = *rec.bin;
    }
    entries.push_back({uid, bin, placement_box(rec, items.spec(uid))});
  }

  for (const Entry& e : entries) {
    bool inside = true;
    for (std::size_t k = 0; k < e.box.origin.size(); ++k) {
      if (e.box.origin[k] < Rational(0)) inside = false;
      // Strip height (last axis) is unbounded above.
      if (strip && k + 1 == e.box.origin.size()) continue;
      if (e.box.origin[k] + e.box.sides[k] > Rational(1)) inside = false;
    }
    if (!inside) report.out_of_bounds.push_back(e.uid);
  }

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].bin != entries[j].bin) continue;
      if (!boxes_disjoint(entries[i].box, entries[j].box)) {
        report.overlaps.push_back({entries[i].uid, entries[j].uid});
      }
    }
  }
  return report;
}

}  // namespace packshift
