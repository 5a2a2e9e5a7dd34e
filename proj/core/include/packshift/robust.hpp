#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>

#include "packshift/event.hpp"
#include "packshift/ledger.hpp"
#include "packshift/offline.hpp"

namespace packshift {

// Constants of one robust combination: the offline guarantee gamma (vs opt,
// with additive c_off), the online volume ratio beta (with additive c_on),
// and the phase threshold epsilon.
struct CombinedConstants {
  Rational gamma;
  Rational beta;
  Rational epsilon;
  Rational c_on;
  Rational c_off;
};

// Cost guarantee of the combination against the current optimum:
//   (gamma + eps + 2*(gamma + eps + 1)*beta*eps) * opt
//     + (gamma + eps + 1)*c_on + c_off.
Rational combined_cost_bound(const CombinedConstants& k, const Rational& opt);

// What one event did to the run. `bound` is the tightest bound checked at
// this event: against the exact optimum when the oracle is on, else against
// placed volume via the online certificate, else absent.
struct StepDiagnostics {
  std::int64_t t = 0;
  bool insert = true;
  std::string id;
  Rational cost;       // committed structure cost
  Rational live_cost;  // recomputed over live placements only
  Rational lb;         // certified lower bound on opt of the live items
  bool phase_end = false;
  Rational migrated;  // volume moved by this event's repack (0 otherwise)
  std::optional<Rational> ledger_factor;
  std::optional<Rational> bound;
  bool bound_ok = true;
  std::string bound_kind;  // "opt" | "volume" | "none"
};

struct RunnerConfig {
  Problem problem = Problem::vector_pack;
  int d = 1;
  // Phase threshold in (0, 1/2]; nullopt runs the online algorithm alone
  // (no repacking, no migration).
  std::optional<Rational> epsilon;
  std::string online_selector = "default";
  std::string offline_selector = "default";
  bool check = true;
  // >0 on vector problems: compute the exact optimum whenever at most this
  // many items are live, enabling the optimum-based monitors.
  std::size_t opt_oracle_cap = 0;
  std::size_t exact_repack_cap = 12;
};

// Event-by-event driver. Keeps the packing valid and the cost certified:
// inserts go through the online algorithm; once the volume changed since the
// last repack exceeds epsilon times the tracked total, the offline method
// rebuilds the packing from the live items and the online algorithm resumes
// on top of it.
class RobustRunner {
 public:
  explicit RobustRunner(RunnerConfig cfg);

  StepDiagnostics step(const Event& ev);

  const SolutionState& solution() const { return solution_; }
  const ItemTable& items() const { return items_; }
  const MigrationLedger& ledger() const { return ledger_; }
  const MonitorSink& sink() const { return sink_; }
  MonitorSink& sink() { return sink_; }
  const FlexibleAlgorithm& online() const { return *online_; }
  const Rational& v_total() const { return v_total_; }
  const Rational& v_changed() const { return v_changed_; }
  const Rational& live_volume() const { return live_volume_; }
  std::int64_t phase_count() const { return phase_count_; }
  std::vector<ItemSpec> live_specs() const;

 private:
  Rational repack(std::int64_t t);
  Rational live_cost() const;
  Rational live_lb() const;
  std::optional<Rational> live_opt() const;  // exact optimum if oracle applies

  RunnerConfig cfg_;
  ItemTable items_;
  SolutionState solution_;
  std::unique_ptr<FlexibleAlgorithm> online_;
  std::unique_ptr<OfflineRepacker> offline_;
  IncrementalValidityChecker checker_;
  MonitorSink sink_;
  MigrationLedger ledger_;

  Rational v_total_;
  Rational v_changed_;
  Rational live_volume_;
  Rational flex_base_;      // committed cost at the last flexify
  Rational phase_inserted_;  // volume placed since the last flexify
  Rational phase_departed_;
  std::int64_t phase_count_ = 0;
  std::int64_t last_t_ = -1;
  Rational phase_start_vtotal_;
  std::optional<Rational> phase_start_opt_;

  // Incremental feed for live_lb().
  std::multiset<Rational> live_heights_;
  std::vector<Rational> live_loads_;
};

}  // namespace packshift
