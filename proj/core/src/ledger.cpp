#include "packshift/ledger.hpp"

#include <stdexcept>

namespace packshift {

namespace {

void check_nonneg(const Rational& vol) {
  if (vol.is_negative()) throw std::invalid_argument("ledger volume must be >= 0");
}

}  // namespace

void MigrationLedger::record_insert(const Rational& vol) {
  check_nonneg(vol);
  inserted_ += vol;
}

void MigrationLedger::record_depart(const Rational& vol) {
  check_nonneg(vol);
  departed_ += vol;
}

void MigrationLedger::record_migration(const Rational& vol) {
  check_nonneg(vol);
  migrated_ += vol;
}

std::optional<Rational> MigrationLedger::factor() const {
  Rational turnover = inserted_ + departed_;
  if (turnover.is_zero()) return std::nullopt;
  return migrated_ / turnover;
}

}  // namespace packshift
