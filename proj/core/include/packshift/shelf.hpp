#pragma once

#include <map>
#include <memory>

#include "packshift/flexible.hpp"

namespace packshift {

// Container class for a 2-D rectangle: 0 for wide items (w >= 1/2, stacked
// vertically in full-height containers), otherwise the height class i >= 1
// with h in (2^-i, 2^-i+1] (stacked left to right in containers of height
// 2^-i+1).
int shelf_class_of(const Rect2D& r);

// Height class of a hypercube side: i >= 1 with s in (2^-i, 2^-i+1].
int cube_class_of(const Rational& side);

// Height class of a box's last side: i >= 0 with r_d in (2^-i-1, 2^-i].
int height_class_of(const Rational& rd);

// Shelf strip packing for rectangles: one active container per class, new
// containers open at the current top. Certified: top grows by at most
// 4 * volume + 16 beyond the inherited base.
class ShelfStripPacker final : public FlexibleAlgorithm {
 public:
  struct ClassAggregate {
    Rational container_heights;  // all containers of the class, open included
    Rational item_volume;
    std::int64_t containers = 0;
    bool active = false;
    Rational active_base;
    Rational active_fill;  // stacked height (class 0) or width (class >= 1)
  };

  void flexify(const SolutionState& prev) override;
  PlacementRecord place(Uid uid, const ItemSpec& item) override;
  Rational cost() const override { return top_; }
  std::optional<Rational> volume_ratio() const override { return Rational(4); }
  Rational additive() const override { return Rational(16); }
  void check_invariants(MonitorSink& sink, std::int64_t t) const override;
  const char* name() const override { return "shelf-strip"; }

  const std::map<int, ClassAggregate>& aggregates() const { return classes_; }
  const Rational& base() const { return base_; }
  const Rational& placed_volume() const { return placed_volume_; }

 private:
  std::map<int, ClassAggregate> classes_;
  Rational base_;
  Rational top_;
  Rational placed_volume_;
};

// Hypercube strip packing: per-class containers of height 2^-i+1 holding a
// lexicographically filled grid of floor(2^(i-1))^(d-1) slots. Certified:
// top grows by at most 2^d * volume + 2 beyond the base.
class HypercubeStripPacker final : public FlexibleAlgorithm {
 public:
  explicit HypercubeStripPacker(int d);

  void flexify(const SolutionState& prev) override;
  PlacementRecord place(Uid uid, const ItemSpec& item) override;
  Rational cost() const override { return top_; }
  std::optional<Rational> volume_ratio() const override;
  Rational additive() const override { return Rational(2); }
  void check_invariants(MonitorSink& sink, std::int64_t t) const override;
  const char* name() const override { return "hypercube-strip"; }

  const Rational& base() const { return base_; }
  const Rational& placed_volume() const { return placed_volume_; }

 private:
  struct ActiveContainer {
    Rational base;
    std::int64_t filled = 0;
    std::int64_t capacity = 0;
    Rational item_volume;
  };

  int d_;
  std::map<int, ActiveContainer> active_;
  Rational base_;
  Rational top_;
  Rational placed_volume_;
  MonitorSink deferred_;  // close-time coverage failures surface on next check
};

class HyperrectBinPacker;

// Box strip packing: items are grouped by height class into containers of
// height 2^-i; the cross-sections are delegated to the (d-1)-dimensional bin
// packer, one delegate bin per container. The multiplicative constant is
// certified only for d = 2.
class HyperrectStripPacker final : public FlexibleAlgorithm {
 public:
  explicit HyperrectStripPacker(int d);
  ~HyperrectStripPacker() override;

  void flexify(const SolutionState& prev) override;
  PlacementRecord place(Uid uid, const ItemSpec& item) override;
  Rational cost() const override { return top_; }
  std::optional<Rational> volume_ratio() const override;
  Rational additive() const override { return Rational(2); }
  void check_invariants(MonitorSink& sink, std::int64_t t) const override;
  const char* name() const override { return "box-strip"; }

  const Rational& base() const { return base_; }
  const Rational& placed_volume() const { return placed_volume_; }

 private:
  struct HeightClass {
    std::unique_ptr<HyperrectBinPacker> delegate;
    std::map<std::int64_t, Rational> container_base;  // delegate bin -> base height
  };

  int d_;
  std::map<int, HeightClass> classes_;
  Rational base_;
  Rational top_;
  Rational placed_volume_;
};

}  // namespace packshift
