#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "packshift/geometry.hpp"

namespace packshift {

struct Violation {
  std::int64_t t = 0;
  std::string monitor;
  std::string detail;
};

// Collects invariant violations instead of aborting, so a run can finish and
// report everything it saw. Checks stay cheap: build detail strings only on
// failure.
class MonitorSink {
 public:
  void fail(std::int64_t t, const std::string& monitor, const std::string& detail) {
    violations_.push_back({t, monitor, detail});
  }
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Feasibility guard that follows a run event by event. Placements are
// immutable between repacks, so checking each new box against the existing
// ones at insert time, and re-checking everything when a repack replaces the
// solution, certifies the full pairwise property after every event at a
// fraction of the quadratic-per-event cost.
class IncrementalValidityChecker {
 public:
  IncrementalValidityChecker(Problem problem, int d) : problem_(problem), d_(d) {}

  void on_place(Uid uid, const PlacementRecord& rec, const ItemSpec& item,
                std::int64_t t, MonitorSink& sink);
  // Rebuild from a replacement solution (re-validates it completely).
  void reset(const SolutionState& s, const ItemTable& items, std::int64_t t,
             MonitorSink& sink);
  void clear();

 private:
  struct Placed {
    Uid uid;
    Box box;
  };
  Problem problem_;
  int d_;
  std::map<std::int64_t, std::vector<Placed>> groups_;  // per bin; strips use key 0
  std::map<std::int64_t, std::vector<Rational>> loads_;  // vector problems
};

}  // namespace packshift
