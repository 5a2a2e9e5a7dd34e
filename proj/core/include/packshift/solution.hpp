#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "packshift/item.hpp"

namespace packshift {

// Internal handle for one inserted item incarnation. External ids may be
// reused after a depart; uids never are.
using Uid = std::uint64_t;

// Where one item sits: bin index for bin problems, absolute offset vector for
// geometric ones (strip offsets are global, the last axis is the height), and
// the pool that produced the placement (orientation / axis permutation).
struct PlacementRecord {
  std::optional<std::int64_t> bin;
  std::vector<Rational> offset;
  std::optional<std::string> pool;

  bool operator==(const PlacementRecord&) const = default;
};

// Whether a scalar cost counts bins or strip height. Determines how costs are
// recomputed from placements.
enum class CostDomain { bins, strip };

struct SolutionState {
  std::map<Uid, PlacementRecord> placements;
  std::set<Uid> live;
  std::set<Uid> ghosts;  // departed but still occupying space
  Rational cost;
};

// Trace-replay registry: resolves external ids to the current incarnation and
// remembers every spec ever inserted (ghosts included).
class ItemTable {
 public:
  Uid insert(const ItemSpec& item);
  // Returns the uid that was live under this id.
  Uid depart(const std::string& id);
  const ItemSpec& spec(Uid uid) const;
  bool has_live(const std::string& id) const { return live_.count(id) > 0; }
  Uid live_uid(const std::string& id) const;
  std::size_t known_count() const { return specs_.size(); }

 private:
  std::map<Uid, ItemSpec> specs_;
  std::map<std::string, Uid> live_;
  Uid next_ = 0;
};

// live/ghosts partition placements; throws std::logic_error otherwise.
void check_solution_wellformed(const SolutionState& s);

// Distinct bin count for bin problems; for strips the committed height of the
// kept placements (largest offset+extent along the last axis).
Rational cost_from_placements(const SolutionState& s, CostDomain domain,
                              const ItemTable& items);

// Keeps exactly the placements in `keep` (which must all exist). Bin costs
// are recomputed from the survivors; strip costs keep the committed height.
SolutionState restrict_solution(const SolutionState& s, const std::set<Uid>& keep,
                                CostDomain domain, const ItemTable& items);

}  // namespace packshift
