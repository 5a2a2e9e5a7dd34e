#include "packshift/offline.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "packshift/geometry.hpp"

namespace packshift {

namespace {

Rational major_side_of(const ItemSpec& item) {
  if (auto sides = item_box_sides(item)) {
    return *std::max_element(sides->begin(), sides->end());
  }
  const auto& comps = std::get<VectorLoad>(item.shape).components;
  return *std::max_element(comps.begin(), comps.end());
}

std::vector<std::pair<Uid, ItemSpec>> ordered(
    std::vector<std::pair<Uid, ItemSpec>> items, RestartOrder order) {
  switch (order) {
    case RestartOrder::as_given:
      break;
    case RestartOrder::volume_desc:
      std::stable_sort(items.begin(), items.end(),
                       [](const auto& a, const auto& b) {
                         return item_size(a.second) > item_size(b.second);
                       });
      break;
    case RestartOrder::major_side_desc:
      std::stable_sort(items.begin(), items.end(),
                       [](const auto& a, const auto& b) {
                         return major_side_of(a.second) > major_side_of(b.second);
                       });
      break;
  }
  return items;
}

}  // namespace

// --- RestartRepacker ---

RestartRepacker::RestartRepacker(Problem problem, int d, RestartOrder order)
    : problem_(problem), d_(d), order_(order) {}

RepackResult RestartRepacker::repack(
    const std::vector<std::pair<Uid, ItemSpec>>& items) {
  auto online = make_online(problem_, d_);
  online->flexify(SolutionState{});

  RepackResult out;
  out.method = name();
  for (const auto& [uid, spec] : ordered(items, order_)) {
    out.solution.placements[uid] = online->place(uid, spec);
    out.solution.live.insert(uid);
  }
  out.solution.cost = online->cost();

  MonitorSink sink;
  online->check_invariants(sink, 0);
  out.internal = sink.violations();
  out.volume_gamma = online->volume_ratio();
  out.volume_additive = online->additive();
  out.opt_gamma = out.volume_gamma;
  out.opt_additive = out.volume_additive;
  return out;
}

std::optional<Rational> RestartRepacker::opt_gamma() const {
  auto online = make_online(problem_, d_);
  return online->volume_ratio();
}

Rational RestartRepacker::opt_additive() const {
  auto online = make_online(problem_, d_);
  return online->additive();
}

const char* RestartRepacker::name() const {
  switch (order_) {
    case RestartOrder::as_given:
      return "restart";
    case RestartOrder::volume_desc:
      return "restart-volume-desc";
    case RestartOrder::major_side_desc:
      return "restart-major-side-desc";
  }
  return "restart";
}

// --- FfdhRepacker ---

RepackResult FfdhRepacker::repack(
    const std::vector<std::pair<Uid, ItemSpec>>& items) {
  RepackResult out;
  out.method = name();
  out.volume_gamma = Rational(2);
  out.volume_additive = Rational(1);
  out.opt_gamma = opt_gamma();
  out.opt_additive = opt_additive();

  std::vector<std::pair<Uid, Rect2D>> rects;
  rects.reserve(items.size());
  for (const auto& [uid, spec] : items) {
    const auto* r = std::get_if<Rect2D>(&spec.shape);
    if (!r) throw InputError("ffdh repacks rect2d items only");
    rects.emplace_back(uid, *r);
  }
  std::sort(rects.begin(), rects.end(), [](const auto& a, const auto& b) {
    if (a.second.h != b.second.h) return a.second.h > b.second.h;
    if (a.second.w != b.second.w) return a.second.w > b.second.w;
    return a.first < b.first;
  });

  struct Shelf {
    Rational y;
    Rational height;
    Rational used;
  };
  std::vector<Shelf> shelves;
  Rational top(0);
  for (const auto& [uid, r] : rects) {
    std::size_t at = shelves.size();
    for (std::size_t s = 0; s < shelves.size(); ++s) {
      if (shelves[s].used + r.w <= Rational(1)) {
        at = s;
        break;
      }
    }
    if (at == shelves.size()) {
      shelves.push_back({top, r.h, Rational(0)});
      top += r.h;
    }
    PlacementRecord rec;
    rec.offset = {shelves[at].used, shelves[at].y};
    shelves[at].used += r.w;
    out.solution.placements[uid] = rec;
    out.solution.live.insert(uid);
  }
  out.solution.cost = top;
  return out;
}

// --- ExactVectorRepacker ---

ExactVectorRepacker::ExactVectorRepacker(int d, std::size_t cap)
    : d_(d), cap_(cap) {
  if (d < 1) throw InputError("vector packing needs d >= 1");
  if (cap < 1) throw InputError("exact repacking needs a positive item cap");
}

RepackResult ExactVectorRepacker::repack(
    const std::vector<std::pair<Uid, ItemSpec>>& items) {
  RepackResult out;
  out.volume_gamma = Rational(2 * d_);
  out.volume_additive = Rational(1);

  std::vector<std::vector<Rational>> loads;
  loads.reserve(items.size());
  for (const auto& [uid, spec] : items) {
    const auto* v = std::get_if<VectorLoad>(&spec.shape);
    if (!v || static_cast<int>(v->components.size()) != d_) {
      throw InputError("exact repacking expects vector items of dimension " +
                       std::to_string(d_));
    }
    loads.push_back(v->components);
  }

  if (items.size() > cap_) {
    RestartRepacker fallback(Problem::vector_pack, d_, RestartOrder::volume_desc);
    out = fallback.repack(items);
    out.method = "exact-vector(first-fit fallback)";
    return out;
  }

  std::vector<std::int64_t> assignment;
  std::int64_t bins = exact_vector_bins(loads, &assignment);
  out.method = name();
  out.opt_gamma = opt_gamma();
  out.opt_additive = opt_additive();
  for (std::size_t i = 0; i < items.size(); ++i) {
    PlacementRecord rec;
    rec.bin = assignment[i];
    out.solution.placements[items[i].first] = rec;
    out.solution.live.insert(items[i].first);
  }
  out.solution.cost = Rational(bins);
  return out;
}

// --- factory ---

std::unique_ptr<OfflineRepacker> make_offline(Problem problem, int d,
                                              const std::string& selector,
                                              std::size_t exact_cap) {
  std::string pick = selector;
  if (pick.empty() || pick == "default") {
    if (problem == Problem::strip2d) pick = "ffdh";
    else if (problem == Problem::vector_pack) pick = "exact-vector";
    else pick = "restart-volume-desc";
  }
  if (pick == "restart") {
    return std::make_unique<RestartRepacker>(problem, d, RestartOrder::as_given);
  }
  if (pick == "restart-volume-desc") {
    return std::make_unique<RestartRepacker>(problem, d, RestartOrder::volume_desc);
  }
  if (pick == "restart-major-side-desc") {
    return std::make_unique<RestartRepacker>(problem, d,
                                             RestartOrder::major_side_desc);
  }
  if (pick == "ffdh") {
    if (problem != Problem::strip2d) {
      throw InputError("ffdh repacks strip2d only");
    }
    return std::make_unique<FfdhRepacker>();
  }
  if (pick == "exact-vector") {
    if (problem != Problem::vector_pack) {
      throw InputError("exact-vector repacks vector problems only");
    }
    return std::make_unique<ExactVectorRepacker>(d, exact_cap);
  }
  throw InputError("unknown offline repacker '" + selector + "'");
}

// --- oracles ---

namespace {

struct VectorSearch {
  const std::vector<std::vector<Rational>>& loads;
  int d;
  std::vector<std::vector<Rational>> bins;
  std::vector<std::int64_t> assign;
  std::vector<std::int64_t> best_assign;
  std::int64_t best;

  void run(std::size_t i) {
    if (static_cast<std::int64_t>(bins.size()) >= best) return;
    if (i == loads.size()) {
      best = static_cast<std::int64_t>(bins.size());
      best_assign = assign;
      return;
    }
    const auto& w = loads[i];
    // Bins with identical residual load are interchangeable; try one of each.
    std::set<std::vector<Rational>> seen;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      bool fits = true;
      for (int k = 0; k < d; ++k) {
        if (bins[b][k] + w[k] > Rational(1)) {
          fits = false;
          break;
        }
      }
      if (!fits || !seen.insert(bins[b]).second) continue;
      for (int k = 0; k < d; ++k) bins[b][k] += w[k];
      assign[i] = static_cast<std::int64_t>(b);
      run(i + 1);
      for (int k = 0; k < d; ++k) bins[b][k] -= w[k];
    }
    if (static_cast<std::int64_t>(bins.size()) + 1 < best) {
      bins.emplace_back(d, Rational(0));
      for (int k = 0; k < d; ++k) bins.back()[k] += w[k];
      assign[i] = static_cast<std::int64_t>(bins.size()) - 1;
      run(i + 1);
      bins.pop_back();
    }
  }
};

}  // namespace

std::int64_t exact_vector_bins(const std::vector<std::vector<Rational>>& loads,
                               std::vector<std::int64_t>* assignment) {
  if (loads.empty()) {
    if (assignment) assignment->clear();
    return 0;
  }
  int d = static_cast<int>(loads[0].size());
  for (const auto& w : loads) {
    if (static_cast<int>(w.size()) != d) {
      throw InputError("vector loads must share one dimension");
    }
    for (const auto& c : w) {
      if (c < Rational(0) || c > Rational(1)) {
        throw InputError("vector components must lie in [0, 1]");
      }
    }
  }

  // Search big items first; seed the bound with first-fit on that order.
  std::vector<std::size_t> order(loads.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return *std::max_element(loads[a].begin(), loads[a].end()) >
           *std::max_element(loads[b].begin(), loads[b].end());
  });
  std::vector<std::vector<Rational>> sorted;
  sorted.reserve(loads.size());
  for (std::size_t i : order) sorted.push_back(loads[i]);

  std::vector<std::int64_t> ff_assign(sorted.size());
  std::vector<std::vector<Rational>> ff_bins;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    std::size_t at = ff_bins.size();
    for (std::size_t b = 0; b < ff_bins.size(); ++b) {
      bool fits = true;
      for (int k = 0; k < d; ++k) {
        if (ff_bins[b][k] + sorted[i][k] > Rational(1)) {
          fits = false;
          break;
        }
      }
      if (fits) {
        at = b;
        break;
      }
    }
    if (at == ff_bins.size()) ff_bins.emplace_back(d, Rational(0));
    for (int k = 0; k < d; ++k) ff_bins[at][k] += sorted[i][k];
    ff_assign[i] = static_cast<std::int64_t>(at);
  }

  VectorSearch search{sorted, d, {}, std::vector<std::int64_t>(sorted.size()),
                      ff_assign, static_cast<std::int64_t>(ff_bins.size())};
  search.run(0);

  if (assignment) {
    assignment->assign(loads.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      (*assignment)[order[i]] = search.best_assign[i];
    }
  }
  return search.best;
}

Rational best_bottom_left_height(const std::vector<Rect2D>& rects) {
  if (rects.size() > 8) {
    throw InputError("bottom-left search handles at most 8 items");
  }
  for (const auto& r : rects) {
    if (r.w <= Rational(0) || r.w > Rational(1) || r.h <= Rational(0)) {
      throw InputError("rect sides must lie in (0, 1]");
    }
  }
  if (rects.empty()) return Rational(0);

  struct Placed {
    Rational x, y, w, h;
  };
  std::vector<std::size_t> perm(rects.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  std::optional<Rational> best;
  do {
    std::vector<Placed> placed;
    Rational top(0);
    for (std::size_t i : perm) {
      const Rect2D& r = rects[i];
      std::set<Rational> xs{Rational(0)};
      for (const auto& p : placed) xs.insert(p.x + p.w);
      std::optional<std::pair<Rational, Rational>> spot;  // (y, x)
      for (const auto& x : xs) {
        if (x + r.w > Rational(1)) continue;
        Rational y(0);
        for (const auto& p : placed) {
          if (p.x < x + r.w && x < p.x + p.w) y = std::max(y, p.y + p.h);
        }
        if (!spot || std::pair(y, x) < *spot) spot = {y, x};
      }
      placed.push_back({spot->second, spot->first, r.w, r.h});
      top = std::max(top, spot->first + r.h);
    }
    if (!best || top < *best) best = top;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

Rational packing_lower_bound(Problem problem, int d,
                             const std::vector<ItemSpec>& items) {
  if (problem == Problem::vector_pack) {
    std::vector<Rational> load(d, Rational(0));
    for (const auto& item : items) {
      const auto& comps = std::get<VectorLoad>(item.shape).components;
      for (int k = 0; k < d; ++k) load[k] += comps[k];
    }
    Rational lb(0);
    for (const auto& l : load) lb = std::max(lb, Rational(l.ceil()));
    if (!items.empty()) lb = std::max(lb, Rational(1));
    return lb;
  }

  Rational vol(0);
  Rational tallest(0);
  for (const auto& item : items) {
    vol += item_size(item);
    auto sides = item_box_sides(item);
    tallest = std::max(tallest, sides->back());
  }
  if (is_strip(problem)) return std::max(vol, tallest);
  Rational lb(vol.ceil());
  if (!items.empty()) lb = std::max(lb, Rational(1));
  return lb;
}

}  // namespace packshift
