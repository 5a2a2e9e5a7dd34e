#pragma once

#include <cstdint>
#include <vector>

#include "packshift/problem.hpp"
#include "packshift/solution.hpp"

namespace packshift {

// Axis-aligned box: closed region [origin, origin+sides] per axis.
struct Box {
  std::vector<Rational> origin;
  std::vector<Rational> sides;
};

// True when the open interiors do not intersect; shared faces are fine.
bool boxes_disjoint(const Box& a, const Box& b);

// Closed containment: inner may touch outer's boundary.
bool box_contains(const Box& outer, const Box& inner);

struct ValidityReport {
  struct OverlapPair {
    Uid a;
    Uid b;
  };
  std::vector<OverlapPair> overlaps;
  std::vector<Uid> out_of_bounds;
  // Vector problems: bins whose component sums exceed 1 somewhere.
  std::vector<std::int64_t> overloaded_bins;

  bool ok() const {
    return overlaps.empty() && out_of_bounds.empty() && overloaded_bins.empty();
  }
};

// The spatial box a placement claims: absolute strip coordinates, or
// bin-local coordinates for bin problems.
Box placement_box(const PlacementRecord& rec, const ItemSpec& item);

// Full pairwise feasibility check. Geometric problems: pairwise interior
// disjointness (within one bin for bin problems) plus containment in the unit
// cross-section / unit bin. Vector problems: per-bin component sums <= 1.
// Deliberately quadratic -- this is the reference oracle, not a hot path.
ValidityReport validate_packing(const SolutionState& s, const ItemTable& items,
                                Problem problem, int d);

}  // namespace packshift
