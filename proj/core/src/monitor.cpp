#include "packshift/monitor.hpp"

namespace packshift {

void IncrementalValidityChecker::clear() {
  groups_.clear();
  loads_.clear();
}

void IncrementalValidityChecker::on_place(Uid uid, const PlacementRecord& rec,
                                          const ItemSpec& item, std::int64_t t,
                                          MonitorSink& sink) {
  if (!is_geometric(problem_)) {
    if (!rec.bin) {
      sink.fail(t, "validity", "vector placement without bin index");
      return;
    }
    auto& load =
        loads_.try_emplace(*rec.bin, std::vector<Rational>(d_, Rational(0))).first->second;
    const auto& comps = std::get<VectorLoad>(item.shape).components;
    for (int k = 0; k < d_; ++k) {
      load[k] += comps[k];
      if (load[k] > Rational(1)) {
        sink.fail(t, "validity", "bin " + std::to_string(*rec.bin) + " axis " +
                                     std::to_string(k) + " loaded to " + load[k].str());
      }
    }
    return;
  }

  const bool strip = is_strip(problem_);
  std::int64_t group = 0;
  if (!strip) {
    if (!rec.bin) {
      sink.fail(t, "validity", "bin placement without bin index");
      return;
    }
    group = *rec.bin;
  }
  Box box = placement_box(rec, item);
  for (std::size_t k = 0; k < box.origin.size(); ++k) {
    bool height_axis = strip && k + 1 == box.origin.size();
    if (box.origin[k] < Rational(0) ||
        (!height_axis && box.origin[k] + box.sides[k] > Rational(1))) {
      sink.fail(t, "validity", "item '" + item.id + "' leaves the container on axis " +
                                   std::to_string(k));
    }
  }
  auto& members = groups_[group];
  for (const Placed& p : members) {
    if (!boxes_disjoint(p.box, box)) {
      sink.fail(t, "validity",
                "item '" + item.id + "' overlaps uid " + std::to_string(p.uid));
    }
  }
  members.push_back({uid, box});
}

void IncrementalValidityChecker::reset(const SolutionState& s, const ItemTable& items,
                                       std::int64_t t, MonitorSink& sink) {
  clear();
  for (const auto& [uid, rec] : s.placements) {
    on_place(uid, rec, items.spec(uid), t, sink);
  }
}

}  // namespace packshift
