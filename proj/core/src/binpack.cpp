#include "packshift/binpack.hpp"

#include <algorithm>
#include <numeric>

#include "packshift/shelf.hpp"

namespace packshift {

int bin_class_of(const Rational& largest_side) {
  if (largest_side <= Rational(0) || largest_side > Rational(1)) {
    throw InputError("side must lie in (0, 1]");
  }
  int j = 1;
  while (largest_side <= Rational::pow2(-j)) {
    if (++j > 62) throw InputError("side below 2^-62");
  }
  return j;
}

BoxClass classify_box(const std::vector<Rational>& sides) {
  BoxClass c;
  c.perm.resize(sides.size());
  std::iota(c.perm.begin(), c.perm.end(), 0);
  std::stable_sort(c.perm.begin(), c.perm.end(),
                   [&](int a, int b) { return sides[a] < sides[b]; });
  c.klass = bin_class_of(sides[c.perm.back()]);
  c.square_like = sides[c.perm.front()] > Rational::pow2(-c.klass);
  return c;
}

namespace {

std::string pool_tag_for(const std::vector<int>& perm, int d) {
  if (d == 2) return perm[0] == 0 ? "vertical" : "horizontal";
  std::string s = "p";
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (k) s += '.';
    s += std::to_string(perm[k]);
  }
  return s;
}

std::vector<Rational> zeros(int d) { return std::vector<Rational>(d, Rational(0)); }

}  // namespace

// --- HyperrectBinPacker ---

HyperrectBinPacker::HyperrectBinPacker(int d) : d_(d) {
  if (d < 1 || d > 16) throw InputError("box bin packing supports 1 <= d <= 16");
}

void HyperrectBinPacker::flexify(const SolutionState& prev) {
  pools_.clear();
  opened_ = 0;
  placed_volume_ = Rational(0);
  deferred_.clear();
  base_bins_ = 0;
  for (const auto& [uid, rec] : prev.placements) {
    if (rec.bin) base_bins_ = std::max(base_bins_, *rec.bin + 1);
  }
}

HyperrectBinPacker::BinRecord& HyperrectBinPacker::open_bin(Pool& pool, BinKind kind) {
  BinRecord b;
  b.index = base_bins_ + opened_;
  ++opened_;
  b.kind = kind;
  if (kind == BinKind::slotted) {
    // Fresh bin: 2^d empty slots of class 2 (side 1/2).
    for (std::int64_t mask = 0; mask < (std::int64_t(1) << d_); ++mask) {
      std::vector<Rational> origin(d_);
      for (int k = 0; k < d_; ++k) {
        if ((mask >> (d_ - 1 - k)) & 1) origin[k] = Rational(1, 2);
      }
      b.empties[2].insert(std::move(origin));
    }
  } else if (kind == BinKind::stacking) {
    b.reserved[1] = ReservedSlot{zeros(d_), Rational(0), Rational(0)};
  }
  pool.bins.push_back(std::move(b));
  std::int64_t at = static_cast<std::int64_t>(pool.bins.size()) - 1;
  if (kind == BinKind::stacking) pool.open_stacking = at;
  if (kind == BinKind::slotted) pool.open_slotted = at;
  return pool.bins.back();
}

void HyperrectBinPacker::close_bin(BinRecord& bin) {
  bin.closed = true;
  if (bin.kind == BinKind::slotted && bin.empties.count(2)) {
    deferred_.push_back("closed bin " + std::to_string(bin.index) +
                        " still has an empty slot of class 2");
  }
  if (d_ == 1 || d_ == 2) {
    Rational floor = bin.kind == BinKind::slotted && d_ == 2 ? Rational(5, 48)
                                                             : Rational(1, 4);
    if (bin.item_volume < floor) {
      deferred_.push_back("closed bin " + std::to_string(bin.index) + " holds " +
                          bin.item_volume.str() + " < " + floor.str());
    }
  }
}

void HyperrectBinPacker::close_reserved(BinRecord& bin, int klass) {
  auto it = bin.reserved.find(klass);
  // Closed reserved slot must be at least 2^-d covered (plain d<=2 geometry).
  if (d_ <= 2 && d_ * (klass - 1) + d_ <= 62) {
    Rational floor = Rational::pow2(-d_ * (klass - 1) - d_);
    if (it->second.volume < floor) {
      deferred_.push_back("reserved slot of class " + std::to_string(klass) +
                          " in bin " + std::to_string(bin.index) + " closed at " +
                          it->second.volume.str() + " < " + floor.str());
    }
  }
  bin.reserved.erase(it);
}

std::vector<Rational> HyperrectBinPacker::to_real_offset(
    const std::vector<int>& perm, const std::vector<Rational>& local) const {
  std::vector<Rational> real(d_);
  for (int k = 0; k < d_; ++k) real[perm[k]] = local[k];
  return real;
}

PlacementRecord HyperrectBinPacker::place(Uid, const ItemSpec& item) {
  validate_item(item);
  auto sides_opt = item_box_sides(item);
  if (!sides_opt || static_cast<int>(sides_opt->size()) != d_) {
    throw InputError("box bin packing expects box items of dimension " +
                     std::to_string(d_));
  }
  const std::vector<Rational>& sides = *sides_opt;

  BoxClass cls = classify_box(sides);
  Pool& pool = pools_[cls.perm];
  if (pool.tag.empty()) pool.tag = pool_tag_for(cls.perm, d_);
  Rational smin = sides[cls.perm[0]];
  Rational size = item_size(item);
  placed_volume_ += size;

  PlacementRecord rec;
  rec.pool = pool.tag;

  if (cls.klass == 1) {
    if (cls.square_like) {
      // All sides > 1/2: the item gets a bin of its own.
      BinRecord& bin = open_bin(pool, BinKind::single);
      bin.item_volume += size;
      close_bin(bin);
      rec.bin = bin.index;
      rec.offset = zeros(d_);
      return rec;
    }
    // Elongated class-1 items stack along the smallest axis.
    if (pool.open_stacking < 0) open_bin(pool, BinKind::stacking);
    BinRecord& bin = pool.bins[pool.open_stacking];
    ReservedSlot& rs = bin.reserved.at(1);
    std::vector<Rational> local = rs.origin;
    local[0] += rs.fill;
    rs.fill += smin;
    rs.volume += size;
    bin.item_volume += size;
    rec.bin = bin.index;
    rec.offset = to_real_offset(cls.perm, local);
    if (rs.fill >= Rational(1, 2)) {
      close_reserved(bin, 1);
      close_bin(bin);
      pool.open_stacking = -1;
    }
    return rec;
  }

  // Class >= 2: slotted bins.
  if (!cls.square_like && pool.open_slotted >= 0) {
    BinRecord& bin = pool.bins[pool.open_slotted];
    auto it = bin.reserved.find(cls.klass);
    if (it != bin.reserved.end()) {
      ReservedSlot& rs = it->second;
      std::vector<Rational> local = rs.origin;
      local[0] += rs.fill;
      rs.fill += smin;
      rs.volume += size;
      bin.item_volume += size;
      rec.bin = bin.index;
      rec.offset = to_real_offset(cls.perm, local);
      if (rs.fill >= Rational::pow2(-cls.klass)) close_reserved(bin, cls.klass);
      return rec;
    }
  }

  for (;;) {
    if (pool.open_slotted < 0) open_bin(pool, BinKind::slotted);
    BinRecord& bin = pool.bins[pool.open_slotted];

    auto it = bin.empties.upper_bound(cls.klass);
    if (it == bin.empties.begin()) {
      close_bin(bin);
      pool.open_slotted = -1;
      continue;
    }
    --it;
    int from = it->first;
    std::vector<Rational> origin = *it->second.begin();
    it->second.erase(it->second.begin());
    if (it->second.empty()) bin.empties.erase(it);

    // Halve repeatedly; the lexicographically smallest child stays under the knife.
    for (int k = from; k < cls.klass; ++k) {
      Rational child = Rational::pow2(-k);
      for (std::int64_t mask = 1; mask < (std::int64_t(1) << d_); ++mask) {
        std::vector<Rational> sib = origin;
        for (int ax = 0; ax < d_; ++ax) {
          if ((mask >> (d_ - 1 - ax)) & 1) sib[ax] += child;
        }
        bin.empties[k + 1].insert(std::move(sib));
      }
    }

    bin.item_volume += size;
    rec.bin = bin.index;
    rec.offset = to_real_offset(cls.perm, origin);
    if (cls.square_like) {
      // Slot closes at once; every side exceeds half the slot side.
      if (d_ * cls.klass <= 62 && size < Rational::pow2(-d_ * cls.klass)) {
        deferred_.push_back("square-like item of class " + std::to_string(cls.klass) +
                            " under-fills its slot");
      }
    } else {
      auto [slot, fresh] =
          bin.reserved.emplace(cls.klass, ReservedSlot{origin, smin, size});
      if (!fresh) {
        deferred_.push_back("second reserved slot of class " +
                            std::to_string(cls.klass) + " in bin " +
                            std::to_string(bin.index));
      }
      if (slot->second.fill >= Rational::pow2(-cls.klass)) {
        close_reserved(bin, cls.klass);
      }
    }
    return rec;
  }
}

std::optional<Rational> HyperrectBinPacker::volume_ratio() const {
  if (d_ == 2) return Rational(48, 5);
  if (d_ == 1) return Rational(4);
  return std::nullopt;
}

std::vector<std::map<int, std::int64_t>> HyperrectBinPacker::empty_slot_counts()
    const {
  std::vector<std::pair<std::int64_t, std::map<int, std::int64_t>>> rows;
  for (const auto& [perm, pool] : pools_) {
    for (const auto& bin : pool.bins) {
      std::map<int, std::int64_t> counts;
      for (const auto& [klass, set] : bin.empties) {
        counts[klass] = static_cast<std::int64_t>(set.size());
      }
      rows.emplace_back(bin.index, std::move(counts));
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::map<int, std::int64_t>> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(std::move(row.second));
  return out;
}

void HyperrectBinPacker::check_invariants(MonitorSink& sink, std::int64_t t) const {
  for (const auto& msg : deferred_) sink.fail(t, "bin-structure", msg);
  deferred_.clear();

  std::int64_t total_bins = 0;
  std::int64_t cap = (std::int64_t(1) << d_) - 1;
  for (const auto& [perm, pool] : pools_) {
    total_bins += static_cast<std::int64_t>(pool.bins.size());
    for (const auto& bin : pool.bins) {
      for (const auto& [klass, set] : bin.empties) {
        if (static_cast<std::int64_t>(set.size()) > cap) {
          sink.fail(t, "empty-slot-bound",
                    "bin " + std::to_string(bin.index) + " holds " +
                        std::to_string(set.size()) + " empty slots of class " +
                        std::to_string(klass));
        }
      }
      for (const auto& [klass, rs] : bin.reserved) {
        if (rs.fill >= Rational::pow2(-klass)) {
          sink.fail(t, "reserved-slot-open",
                    "reserved slot of class " + std::to_string(klass) + " in bin " +
                        std::to_string(bin.index) + " should have closed");
        }
      }
    }
  }
  if (total_bins != opened_) {
    sink.fail(t, "bin-count", "opened " + std::to_string(opened_) + " != recorded " +
                                  std::to_string(total_bins));
  }
  if (d_ <= 2) {
    Rational bound = *volume_ratio() * placed_volume_ + additive();
    if (Rational(opened_) > bound) {
      sink.fail(t, "bin-ratio", "opened " + std::to_string(opened_) + " bins > " +
                                    bound.str());
    }
  }
}

// --- HypercubeBinPacker ---

HypercubeBinPacker::HypercubeBinPacker(int d) : d_(d) {
  if (d < 1 || d > 16) throw InputError("hypercube bin packing supports 1 <= d <= 16");
}

void HypercubeBinPacker::flexify(const SolutionState& prev) {
  bins_.clear();
  open_ = -1;
  opened_ = 0;
  placed_volume_ = Rational(0);
  deferred_.clear();
  base_bins_ = 0;
  for (const auto& [uid, rec] : prev.placements) {
    if (rec.bin) base_bins_ = std::max(base_bins_, *rec.bin + 1);
  }
}

HypercubeBinPacker::BinRecord& HypercubeBinPacker::open_bin() {
  BinRecord bin;
  bin.index = base_bins_ + opened_;
  ++opened_;
  for (std::int64_t mask = 0; mask < (std::int64_t(1) << d_); ++mask) {
    std::vector<Rational> origin(d_);
    for (int k = 0; k < d_; ++k) {
      if ((mask >> (d_ - 1 - k)) & 1) origin[k] = Rational(1, 2);
    }
    bin.empties[2].insert(std::move(origin));
  }
  bins_.push_back(std::move(bin));
  open_ = static_cast<std::int64_t>(bins_.size()) - 1;
  return bins_.back();
}

void HypercubeBinPacker::close_bin(BinRecord& bin) {
  bin.closed = true;
  if (bin.empties.count(2)) {
    deferred_.push_back("closed bin " + std::to_string(bin.index) +
                        " still has an empty slot of class 2");
  }
  if (2 * d_ <= 62) {
    Rational floor = (Rational::pow2(d_) - Rational(1)) * Rational::pow2(-2 * d_);
    if (bin.item_volume < floor) {
      deferred_.push_back("closed bin " + std::to_string(bin.index) + " holds " +
                          bin.item_volume.str() + " < " + floor.str());
    }
  }
}

PlacementRecord HypercubeBinPacker::place(Uid, const ItemSpec& item) {
  validate_item(item);
  const auto* cube = std::get_if<Hypercube>(&item.shape);
  if (!cube || cube->dim != d_) {
    throw InputError("hypercube bin packing expects hypercube items of dimension " +
                     std::to_string(d_));
  }

  int j = bin_class_of(cube->side);
  Rational size = item_size(item);
  placed_volume_ += size;

  PlacementRecord rec;
  if (j == 1) {
    BinRecord bin;
    bin.index = base_bins_ + opened_;
    ++opened_;
    bin.item_volume = size;
    bin.closed = true;
    bins_.push_back(std::move(bin));
    rec.bin = bins_.back().index;
    rec.offset = zeros(d_);
    return rec;
  }

  for (;;) {
    if (open_ < 0) open_bin();
    BinRecord& bin = bins_[open_];

    auto it = bin.empties.upper_bound(j);
    if (it == bin.empties.begin()) {
      close_bin(bin);
      open_ = -1;
      continue;
    }
    --it;
    int from = it->first;
    std::vector<Rational> origin = *it->second.begin();
    it->second.erase(it->second.begin());
    if (it->second.empty()) bin.empties.erase(it);

    for (int k = from; k < j; ++k) {
      Rational child = Rational::pow2(-k);
      for (std::int64_t mask = 1; mask < (std::int64_t(1) << d_); ++mask) {
        std::vector<Rational> sib = origin;
        for (int ax = 0; ax < d_; ++ax) {
          if ((mask >> (d_ - 1 - ax)) & 1) sib[ax] += child;
        }
        bin.empties[k + 1].insert(std::move(sib));
      }
    }

    bin.item_volume += size;
    rec.bin = bin.index;
    rec.offset = origin;
    return rec;
  }
}

std::optional<Rational> HypercubeBinPacker::volume_ratio() const {
  if (2 * d_ > 62) return std::nullopt;
  return Rational::pow2(2 * d_) / (Rational::pow2(d_) - Rational(1));
}

std::vector<std::map<int, std::int64_t>> HypercubeBinPacker::empty_slot_counts()
    const {
  std::vector<std::map<int, std::int64_t>> out;
  out.reserve(bins_.size());
  for (const auto& bin : bins_) {
    std::map<int, std::int64_t> counts;
    for (const auto& [klass, set] : bin.empties) {
      counts[klass] = static_cast<std::int64_t>(set.size());
    }
    out.push_back(std::move(counts));
  }
  return out;
}

void HypercubeBinPacker::check_invariants(MonitorSink& sink, std::int64_t t) const {
  for (const auto& msg : deferred_) sink.fail(t, "bin-structure", msg);
  deferred_.clear();

  std::int64_t cap = (std::int64_t(1) << d_) - 1;
  for (const auto& bin : bins_) {
    for (const auto& [klass, set] : bin.empties) {
      if (static_cast<std::int64_t>(set.size()) > cap) {
        sink.fail(t, "empty-slot-bound",
                  "bin " + std::to_string(bin.index) + " holds " +
                      std::to_string(set.size()) + " empty slots of class " +
                      std::to_string(klass));
      }
    }
  }
  if (auto ratio = volume_ratio()) {
    Rational bound = *ratio * placed_volume_ + additive();
    if (Rational(opened_) > bound) {
      sink.fail(t, "bin-ratio",
                "opened " + std::to_string(opened_) + " bins > " + bound.str());
    }
  }
}

// --- VectorPacker ---

VectorPacker::VectorPacker(int d) : d_(d) {
  if (d < 1) throw InputError("vector packing needs d >= 1");
}

void VectorPacker::flexify(const SolutionState& prev) {
  bins_.clear();
  placed_volume_ = Rational(0);
  base_bins_ = 0;
  for (const auto& [uid, rec] : prev.placements) {
    if (rec.bin) base_bins_ = std::max(base_bins_, *rec.bin + 1);
  }
}

PlacementRecord VectorPacker::place(Uid, const ItemSpec& item) {
  validate_item(item);
  const auto* load = std::get_if<VectorLoad>(&item.shape);
  if (!load || static_cast<int>(load->components.size()) != d_) {
    throw InputError("vector packing expects vector items of dimension " +
                     std::to_string(d_));
  }

  placed_volume_ += item_size(item);

  std::size_t at = bins_.size();
  for (std::size_t b = 0; b < bins_.size(); ++b) {
    bool fits = true;
    for (int k = 0; k < d_; ++k) {
      if (bins_[b][k] + load->components[k] > Rational(1)) {
        fits = false;
        break;
      }
    }
    if (fits) {
      at = b;
      break;
    }
  }
  if (at == bins_.size()) bins_.emplace_back(d_, Rational(0));
  for (int k = 0; k < d_; ++k) bins_[at][k] += load->components[k];

  PlacementRecord rec;
  rec.bin = base_bins_ + static_cast<std::int64_t>(at);
  return rec;
}

void VectorPacker::check_invariants(MonitorSink& sink, std::int64_t t) const {
  for (std::size_t b = 0; b < bins_.size(); ++b) {
    for (int k = 0; k < d_; ++k) {
      if (bins_[b][k] > Rational(1)) {
        sink.fail(t, "vector-load", "bin " + std::to_string(b) + " axis " +
                                        std::to_string(k) + " overloaded");
      }
    }
  }
  Rational bound = Rational(2 * d_) * placed_volume_ + Rational(1);
  if (Rational(static_cast<std::int64_t>(bins_.size())) > bound) {
    sink.fail(t, "vector-ratio",
              "opened " + std::to_string(bins_.size()) + " bins > " + bound.str());
  }
}

}  // namespace packshift
