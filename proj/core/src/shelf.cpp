#include "packshift/shelf.hpp"

#include <limits>

#include "packshift/binpack.hpp"

namespace packshift {

namespace {

int class_guard(int i, const char* what) {
  if (i > 62) throw InputError(std::string("side of ") + what + " below 2^-62");
  return i;
}

}  // namespace

int shelf_class_of(const Rect2D& r) {
  if (r.w >= Rational(1, 2)) return 0;
  int i = 1;
  while (r.h <= Rational::pow2(-i)) class_guard(++i, "rectangle");
  return i;
}

int cube_class_of(const Rational& side) {
  int i = 1;
  while (side <= Rational::pow2(-i)) class_guard(++i, "cube");
  return i;
}

int height_class_of(const Rational& rd) {
  int i = 0;
  // Stop at class 61: probing class 62 would need pow2(-63).
  while (rd <= Rational::pow2(-i - 1)) class_guard(++i + 1, "box");
  return i;
}

// --- ShelfStripPacker ---

void ShelfStripPacker::flexify(const SolutionState& prev) {
  classes_.clear();
  base_ = prev.cost;
  top_ = base_;
  placed_volume_ = Rational(0);
}

PlacementRecord ShelfStripPacker::place(Uid, const ItemSpec& item) {
  validate_item(item);
  const auto* r = std::get_if<Rect2D>(&item.shape);
  if (!r) throw InputError("shelf strip packing expects rect2d items");

  int cls = shelf_class_of(*r);
  Rational container_h = cls == 0 ? Rational(1) : Rational::pow2(-cls + 1);
  Rational need = cls == 0 ? r->h : r->w;

  ClassAggregate& agg = classes_[cls];
  if (!agg.active || agg.active_fill + need > Rational(1)) {
    agg.active = true;
    agg.active_base = top_;
    agg.active_fill = Rational(0);
    agg.containers += 1;
    agg.container_heights += container_h;
    top_ += container_h;
  }

  PlacementRecord rec;
  if (cls == 0) {
    rec.offset = {Rational(0), agg.active_base + agg.active_fill};
  } else {
    rec.offset = {agg.active_fill, agg.active_base};
  }
  agg.active_fill += need;

  Rational size = item_size(item);
  agg.item_volume += size;
  placed_volume_ += size;
  return rec;
}

void ShelfStripPacker::check_invariants(MonitorSink& sink, std::int64_t t) const {
  Rational heights(0);
  for (const auto& [cls, agg] : classes_) {
    heights += agg.container_heights;
    if (agg.active && agg.active_fill > Rational(1)) {
      sink.fail(t, "shelf-fill", "class " + std::to_string(cls) + " container overfull");
    }
    // Per-class volume floor: containers cannot be mostly air.
    Rational slack = Rational::pow2(-cls + 1);
    if (agg.item_volume < agg.container_heights / Rational(4) - slack) {
      sink.fail(t, "shelf-class-volume",
                "class " + std::to_string(cls) + " volume " + agg.item_volume.str() +
                    " below " + (agg.container_heights / Rational(4) - slack).str());
    }
  }
  if (top_ != base_ + heights) {
    sink.fail(t, "shelf-top", "top " + top_.str() + " != base+containers " +
                                  (base_ + heights).str());
  }
}

// --- HypercubeStripPacker ---

HypercubeStripPacker::HypercubeStripPacker(int d) : d_(d) {
  if (d < 2 || d > 16) throw InputError("hypercube strip packing supports 2 <= d <= 16");
}

void HypercubeStripPacker::flexify(const SolutionState& prev) {
  active_.clear();
  base_ = prev.cost;
  top_ = base_;
  placed_volume_ = Rational(0);
  deferred_ = MonitorSink();
}

PlacementRecord HypercubeStripPacker::place(Uid, const ItemSpec& item) {
  validate_item(item);
  const auto* cube = std::get_if<Hypercube>(&item.shape);
  if (!cube || cube->dim != d_) {
    throw InputError("hypercube strip packing expects hypercube items of dimension " +
                     std::to_string(d_));
  }

  int cls = cube_class_of(cube->side);
  Rational height = Rational::pow2(-cls + 1);
  std::int64_t grid = cls == 1 ? 1 : (std::int64_t(1) << (cls - 1));

  auto open_new = [&]() {
    ActiveContainer c;
    c.base = top_;
    c.filled = 0;
    c.capacity = 1;
    for (int k = 0; k + 1 < d_; ++k) {
      if (c.capacity > std::numeric_limits<std::int64_t>::max() / grid) {
        c.capacity = std::numeric_limits<std::int64_t>::max();
        break;
      }
      c.capacity *= grid;
    }
    top_ += height;
    return c;
  };

  auto it = active_.find(cls);
  if (it == active_.end()) {
    it = active_.emplace(cls, open_new()).first;
  } else if (it->second.filled == it->second.capacity) {
    if (it->second.item_volume < Rational::pow2(-d_) * height) {
      deferred_.fail(0, "cube-container-coverage",
                     "closed container of class " + std::to_string(cls) + " holds " +
                         it->second.item_volume.str());
    }
    it->second = open_new();
  }

  ActiveContainer& c = it->second;
  PlacementRecord rec;
  rec.offset.resize(d_);
  std::int64_t rest = c.filled;
  for (int k = d_ - 2; k >= 0; --k) {
    rec.offset[k] = Rational(rest % grid) * height;
    rest /= grid;
  }
  rec.offset[d_ - 1] = c.base;
  c.filled += 1;

  Rational size = item_size(item);
  c.item_volume += size;
  placed_volume_ += size;
  return rec;
}

std::optional<Rational> HypercubeStripPacker::volume_ratio() const {
  return Rational::pow2(d_);
}

void HypercubeStripPacker::check_invariants(MonitorSink& sink, std::int64_t t) const {
  for (const auto& v : deferred_.violations()) sink.fail(t, v.monitor, v.detail);
  const_cast<MonitorSink&>(deferred_) = MonitorSink();
  Rational open_heights(0);
  for (const auto& [cls, c] : active_) {
    if (c.filled > c.capacity) {
      sink.fail(t, "cube-container-fill", "class " + std::to_string(cls) + " overfull");
    }
    open_heights += Rational::pow2(-cls + 1);
  }
  if (open_heights > Rational(2)) {
    sink.fail(t, "cube-open-heights", "open containers sum to " + open_heights.str());
  }
}

// --- HyperrectStripPacker ---

HyperrectStripPacker::HyperrectStripPacker(int d) : d_(d) {
  if (d < 2 || d > 16) throw InputError("box strip packing supports 2 <= d <= 16");
}

HyperrectStripPacker::~HyperrectStripPacker() = default;

void HyperrectStripPacker::flexify(const SolutionState& prev) {
  classes_.clear();
  base_ = prev.cost;
  top_ = base_;
  placed_volume_ = Rational(0);
}

PlacementRecord HyperrectStripPacker::place(Uid uid, const ItemSpec& item) {
  validate_item(item);
  auto sides = item_box_sides(item);
  if (!sides || static_cast<int>(sides->size()) != d_ ||
      !std::holds_alternative<Hyperrect>(item.shape)) {
    throw InputError("box strip packing expects hyperrect items of dimension " +
                     std::to_string(d_));
  }

  int cls = height_class_of(sides->back());
  Rational container_h = Rational::pow2(-cls);

  HeightClass& hc = classes_[cls];
  if (!hc.delegate) {
    hc.delegate = std::make_unique<HyperrectBinPacker>(d_ - 1);
    hc.delegate->flexify(SolutionState{});
  }

  ItemSpec cross{item.id,
                 Hyperrect{std::vector<Rational>(sides->begin(), sides->end() - 1)}};
  PlacementRecord inner = hc.delegate->place(uid, cross);

  auto [slot, fresh] = hc.container_base.try_emplace(*inner.bin, top_);
  if (fresh) top_ += container_h;

  PlacementRecord rec;
  rec.offset = std::move(inner.offset);
  rec.offset.push_back(slot->second);
  rec.pool = inner.pool;
  placed_volume_ += item_size(item);
  return rec;
}

std::optional<Rational> HyperrectStripPacker::volume_ratio() const {
  if (d_ == 2) return Rational(48, 5);
  return std::nullopt;
}

void HyperrectStripPacker::check_invariants(MonitorSink& sink, std::int64_t t) const {
  Rational heights(0);
  for (const auto& [cls, hc] : classes_) {
    hc.delegate->check_invariants(sink, t);
    heights += Rational(static_cast<std::int64_t>(hc.container_base.size())) *
               Rational::pow2(-cls);
  }
  if (top_ != base_ + heights) {
    sink.fail(t, "box-strip-top", "top " + top_.str() + " != base+containers " +
                                      (base_ + heights).str());
  }
}

}  // namespace packshift
