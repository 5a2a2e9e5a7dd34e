#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "packshift/rational.hpp"

namespace packshift {

// Per-phase accounting: volume inserted and departed during the phase, volume
// actually moved by the closing repack, and the live volume right after it.
struct PhaseRecord {
  std::int64_t t = 0;
  Rational inserted;
  Rational departed;
  Rational migrated;
  Rational volume_after;
};

// Running totals of arrived/departed/moved volume. The amortized migration
// bound is stated against these totals.
class MigrationLedger {
 public:
  void record_insert(const Rational& vol);
  void record_depart(const Rational& vol);
  void record_migration(const Rational& vol);
  void close_phase(const PhaseRecord& phase) { phases_.push_back(phase); }

  const Rational& inserted() const { return inserted_; }
  const Rational& departed() const { return departed_; }
  const Rational& migrated() const { return migrated_; }
  const std::vector<PhaseRecord>& phases() const { return phases_; }

  // migrated / (inserted + departed); nullopt before any volume has moved in
  // or out (division would be undefined).
  std::optional<Rational> factor() const;

 private:
  Rational inserted_;
  Rational departed_;
  Rational migrated_;
  std::vector<PhaseRecord> phases_;
};

}  // namespace packshift
