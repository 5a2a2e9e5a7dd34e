#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "packshift/flexible.hpp"
#include "packshift/monitor.hpp"
#include "packshift/problem.hpp"
#include "packshift/solution.hpp"

namespace packshift {

// One full repack of the live items, plus the guarantees the method certifies
// for the packing it returned: cost <= volume_gamma * volume + volume_additive
// against the live volume, and cost <= opt_gamma * opt + opt_additive against
// the offline optimum. A nullopt gamma means no certificate of that kind.
struct RepackResult {
  SolutionState solution;
  std::optional<Rational> volume_gamma;
  Rational volume_additive;
  std::optional<Rational> opt_gamma;
  Rational opt_additive;
  std::string method;
  std::vector<Violation> internal;  // structural self-check failures, if any
};

class OfflineRepacker {
 public:
  virtual ~OfflineRepacker() = default;

  // Items arrive sorted by uid (insertion order); the result must place every
  // one of them, with bin indices contiguous from 0 for bin problems.
  virtual RepackResult repack(
      const std::vector<std::pair<Uid, ItemSpec>>& items) = 0;

  virtual std::optional<Rational> opt_gamma() const = 0;
  virtual Rational opt_additive() const = 0;
  virtual const char* name() const = 0;
};

// Replays the problem's own online algorithm from scratch in a fixed order.
// Inherits the online volume certificate; volume never exceeds the optimum,
// so the same constants certify against opt.
enum class RestartOrder { as_given, volume_desc, major_side_desc };
class RestartRepacker final : public OfflineRepacker {
 public:
  RestartRepacker(Problem problem, int d, RestartOrder order);

  RepackResult repack(const std::vector<std::pair<Uid, ItemSpec>>& items) override;
  std::optional<Rational> opt_gamma() const override;
  Rational opt_additive() const override;
  const char* name() const override;

 private:
  Problem problem_;
  int d_;
  RestartOrder order_;
};

// First-fit decreasing height for plane strip packing: items by height
// descending onto the lowest shelf with room. Certified 17/10 * opt + 1
// (classical) and 2 * volume + 1.
class FfdhRepacker final : public OfflineRepacker {
 public:
  FfdhRepacker() = default;

  RepackResult repack(const std::vector<std::pair<Uid, ItemSpec>>& items) override;
  std::optional<Rational> opt_gamma() const override { return Rational(17, 10); }
  Rational opt_additive() const override { return Rational(1); }
  const char* name() const override { return "ffdh"; }
};

// Branch-and-bound optimum for vector packing up to `cap` items; beyond the
// cap it falls back to first-fit in volume-descending order (then the opt
// certificate weakens to the first-fit constants).
class ExactVectorRepacker final : public OfflineRepacker {
 public:
  ExactVectorRepacker(int d, std::size_t cap);

  RepackResult repack(const std::vector<std::pair<Uid, ItemSpec>>& items) override;
  std::optional<Rational> opt_gamma() const override { return Rational(1); }
  Rational opt_additive() const override { return Rational(0); }
  const char* name() const override { return "exact-vector"; }

  std::size_t cap() const { return cap_; }

 private:
  int d_;
  std::size_t cap_;
};

// Problem default: ffdh for strip2d, exact-vector for vector packing (cap 12),
// restart in volume-descending order otherwise. Throws InputError for unknown
// or incompatible selectors.
std::unique_ptr<OfflineRepacker> make_offline(Problem problem, int d,
                                              const std::string& selector,
                                              std::size_t exact_cap = 12);

// Minimum bin count for vector loads, by branch and bound. Optionally reports
// one optimal assignment (bin index per item, bins contiguous from 0).
std::int64_t exact_vector_bins(const std::vector<std::vector<Rational>>& loads,
                               std::vector<std::int64_t>* assignment = nullptr);

// Smallest strip height any insertion order reaches under the bottom-left
// rule (candidate x positions are 0 and right edges of placed items). An
// upper bound on the optimum; n <= 8.
Rational best_bottom_left_height(const std::vector<Rect2D>& rects);

// Certified lower bound on the offline optimum of the live items: volume and
// max height for strips, ceil(volume) for bins, per-axis ceil(load) for
// vector packing.
Rational packing_lower_bound(Problem problem, int d,
                             const std::vector<ItemSpec>& items);

}  // namespace packshift
