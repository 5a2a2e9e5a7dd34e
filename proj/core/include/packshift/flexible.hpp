#pragma once

#include <memory>
#include <optional>

#include "packshift/monitor.hpp"
#include "packshift/problem.hpp"

namespace packshift {

// Online packing algorithm that can extend a frozen prior solution: after
// flexify(prev), prior placements are never touched and new items only add
// structure on top (higher strip segments, fresh bin indices).
class FlexibleAlgorithm {
 public:
  virtual ~FlexibleAlgorithm() = default;

  // Start a new run on top of `prev`. The prior committed height becomes the
  // floor for strips; prior bin indices stay reserved for bins. Run-local
  // state (open containers, pools, volume counters) resets.
  virtual void flexify(const SolutionState& prev) = 0;

  // Place one item; earlier placements are immutable.
  virtual PlacementRecord place(Uid uid, const ItemSpec& item) = 0;

  // Structure cost including the prior solution: strip height or bin count.
  virtual Rational cost() const = 0;

  // Certified volume guarantee: cost <= prior_cost + ratio * (volume placed
  // since flexify) + additive. nullopt when no constant is certified for this
  // configuration (hyperrectangles beyond the plane).
  virtual std::optional<Rational> volume_ratio() const = 0;
  virtual Rational additive() const = 0;

  // Structural self-checks (container/slot bookkeeping and per-class volume
  // bounds); violations land in the sink.
  virtual void check_invariants(MonitorSink& sink, std::int64_t t) const = 0;

  virtual const char* name() const = 0;
};

// The problem's own online algorithm.
std::unique_ptr<FlexibleAlgorithm> make_online(Problem problem, int d);

// Named selector ("default" picks the problem's own algorithm); throws
// InputError for unknown or incompatible names.
std::unique_ptr<FlexibleAlgorithm> make_online(Problem problem, int d,
                                               const std::string& selector);

}  // namespace packshift
