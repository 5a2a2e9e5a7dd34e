#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "packshift/flexible.hpp"

namespace packshift {

// Size class of a box's largest side: j >= 1 with 2^-(j-1) >= s > 2^-j.
int bin_class_of(const Rational& largest_side);

// Pool and class assignment for one box. perm lists the axes with sides
// ascending (ties keep the lower axis first); items whose smallest side also
// exceeds 2^-j fill any slot they enter past its closing threshold at once.
struct BoxClass {
  std::vector<int> perm;
  int klass = 1;
  bool square_like = false;
};
BoxClass classify_box(const std::vector<Rational>& sides);

// Slot-based bin packing for boxes in any dimension d >= 1. Bins belong to
// per-permutation pools; each pool keeps one open stacking bin for elongated
// class-1 items and one open slot-tree bin for classes >= 2. Slots split
// 2^d-way down to the item's class; reserved slots stack items along the
// pool's smallest axis until the stacked extent reaches half the slot side.
// Bin-count constants are certified for d = 2 only (48/5 * volume + 4).
class HyperrectBinPacker final : public FlexibleAlgorithm {
 public:
  explicit HyperrectBinPacker(int d);

  void flexify(const SolutionState& prev) override;
  PlacementRecord place(Uid uid, const ItemSpec& item) override;
  Rational cost() const override { return Rational(base_bins_ + opened_); }
  std::optional<Rational> volume_ratio() const override;
  Rational additive() const override { return Rational(4); }
  void check_invariants(MonitorSink& sink, std::int64_t t) const override;
  const char* name() const override { return "slot-bin"; }

  std::int64_t bins_opened() const { return opened_; }
  const Rational& placed_volume() const { return placed_volume_; }
  // Empty-slot counts per class of every bin opened this run, open or closed.
  std::vector<std::map<int, std::int64_t>> empty_slot_counts() const;

 private:
  struct ReservedSlot {
    std::vector<Rational> origin;  // pool-local coordinates
    Rational fill;                 // stacked extent along local axis 0
    Rational volume;
  };
  enum class BinKind { stacking, slotted, single };
  struct BinRecord {
    std::int64_t index = 0;
    BinKind kind = BinKind::slotted;
    std::map<int, std::set<std::vector<Rational>>> empties;  // class -> origins
    std::map<int, ReservedSlot> reserved;                    // open reserved slots
    Rational item_volume;
    bool closed = false;
  };
  struct Pool {
    std::string tag;
    std::vector<BinRecord> bins;  // this run's bins, open ones last by kind
    std::int64_t open_stacking = -1;  // index into bins, -1 = none
    std::int64_t open_slotted = -1;
  };

  BinRecord& open_bin(Pool& pool, BinKind kind);
  void close_bin(BinRecord& bin);
  void close_reserved(BinRecord& bin, int klass);
  std::vector<Rational> to_real_offset(const std::vector<int>& perm,
                                       const std::vector<Rational>& local) const;

  int d_;
  std::map<std::vector<int>, Pool> pools_;
  std::int64_t base_bins_ = 0;
  std::int64_t opened_ = 0;
  Rational placed_volume_;
  mutable std::vector<std::string> deferred_;  // close-time check failures
};

// Hypercube bin packing: one pool, slots are empty or closed, every item
// closes the slot it lands in. Certified: 2^2d/(2^d - 1) * volume + 1 bins.
class HypercubeBinPacker final : public FlexibleAlgorithm {
 public:
  explicit HypercubeBinPacker(int d);

  void flexify(const SolutionState& prev) override;
  PlacementRecord place(Uid uid, const ItemSpec& item) override;
  Rational cost() const override { return Rational(base_bins_ + opened_); }
  std::optional<Rational> volume_ratio() const override;
  Rational additive() const override { return Rational(1); }
  void check_invariants(MonitorSink& sink, std::int64_t t) const override;
  const char* name() const override { return "hypercube-bin"; }

  std::int64_t bins_opened() const { return opened_; }
  const Rational& placed_volume() const { return placed_volume_; }
  std::vector<std::map<int, std::int64_t>> empty_slot_counts() const;

 private:
  struct BinRecord {
    std::int64_t index = 0;
    std::map<int, std::set<std::vector<Rational>>> empties;
    Rational item_volume;
    bool closed = false;
  };

  BinRecord& open_bin();
  void close_bin(BinRecord& bin);

  int d_;
  std::vector<BinRecord> bins_;
  std::int64_t open_ = -1;
  std::int64_t base_bins_ = 0;
  std::int64_t opened_ = 0;
  Rational placed_volume_;
  mutable std::vector<std::string> deferred_;
};

// First-fit vector packing: a load vector goes to the lowest-indexed bin of
// this run with room on every axis. Certified: fewer than 2d * volume + 1
// new bins.
class VectorPacker final : public FlexibleAlgorithm {
 public:
  explicit VectorPacker(int d);

  void flexify(const SolutionState& prev) override;
  PlacementRecord place(Uid uid, const ItemSpec& item) override;
  Rational cost() const override {
    return Rational(base_bins_ + static_cast<std::int64_t>(bins_.size()));
  }
  std::optional<Rational> volume_ratio() const override {
    return Rational(2 * d_);
  }
  Rational additive() const override { return Rational(1); }
  void check_invariants(MonitorSink& sink, std::int64_t t) const override;
  const char* name() const override { return "vector-firstfit"; }

  const std::vector<std::vector<Rational>>& bin_loads() const { return bins_; }
  const Rational& placed_volume() const { return placed_volume_; }

 private:
  int d_;
  std::vector<std::vector<Rational>> bins_;
  std::int64_t base_bins_ = 0;
  Rational placed_volume_;
};

}  // namespace packshift
