#include "packshift/robust.hpp"

#include <algorithm>

namespace packshift {

Rational combined_cost_bound(const CombinedConstants& k, const Rational& opt) {
  Rational ge1 = k.gamma + k.epsilon + Rational(1);
  Rational factor = k.gamma + k.epsilon + Rational(2) * ge1 * k.beta * k.epsilon;
  return factor * opt + ge1 * k.c_on + k.c_off;
}

RobustRunner::RobustRunner(RunnerConfig cfg)
    : cfg_(std::move(cfg)),
      online_(make_online(cfg_.problem, cfg_.d, cfg_.online_selector)),
      offline_(cfg_.epsilon ? make_offline(cfg_.problem, cfg_.d,
                                           cfg_.offline_selector,
                                           cfg_.exact_repack_cap)
                            : nullptr),
      checker_(cfg_.problem, cfg_.d) {
  if (cfg_.epsilon &&
      (*cfg_.epsilon <= Rational(0) || *cfg_.epsilon > Rational(1, 2))) {
    throw InputError("epsilon must lie in (0, 1/2]");
  }
  if (cfg_.problem == Problem::vector_pack) {
    live_loads_.assign(cfg_.d, Rational(0));
  }
  online_->flexify(solution_);
}

std::vector<ItemSpec> RobustRunner::live_specs() const {
  std::vector<ItemSpec> out;
  out.reserve(solution_.live.size());
  for (Uid uid : solution_.live) out.push_back(items_.spec(uid));
  return out;
}

Rational RobustRunner::live_cost() const {
  if (cost_domain(cfg_.problem) == CostDomain::bins) {
    std::set<std::int64_t> bins;
    for (Uid uid : solution_.live) bins.insert(*solution_.placements.at(uid).bin);
    return Rational(static_cast<std::int64_t>(bins.size()));
  }
  Rational top(0);
  for (Uid uid : solution_.live) {
    const PlacementRecord& rec = solution_.placements.at(uid);
    Rational extent = item_box_sides(items_.spec(uid))->back();
    top = std::max(top, rec.offset.back() + extent);
  }
  return top;
}

Rational RobustRunner::live_lb() const {
  if (cfg_.problem == Problem::vector_pack) {
    Rational lb(0);
    for (const auto& l : live_loads_) lb = std::max(lb, Rational(l.ceil()));
    if (!solution_.live.empty()) lb = std::max(lb, Rational(1));
    return lb;
  }
  if (is_strip(cfg_.problem)) {
    Rational lb = live_volume_;
    if (!live_heights_.empty()) lb = std::max(lb, *live_heights_.rbegin());
    return lb;
  }
  Rational lb(live_volume_.ceil());
  if (!solution_.live.empty()) lb = std::max(lb, Rational(1));
  return lb;
}

std::optional<Rational> RobustRunner::live_opt() const {
  if (cfg_.problem != Problem::vector_pack || cfg_.opt_oracle_cap == 0 ||
      solution_.live.size() > cfg_.opt_oracle_cap) {
    return std::nullopt;
  }
  std::vector<std::vector<Rational>> loads;
  loads.reserve(solution_.live.size());
  for (Uid uid : solution_.live) {
    loads.push_back(std::get<VectorLoad>(items_.spec(uid).shape).components);
  }
  return Rational(exact_vector_bins(loads));
}

StepDiagnostics RobustRunner::step(const Event& ev) {
  if (ev.t <= last_t_) {
    throw InputError("event times must be strictly increasing");
  }
  last_t_ = ev.t;
  std::int64_t t = ev.t;

  StepDiagnostics diag;
  diag.t = t;

  if (const auto* ins = std::get_if<InsertOp>(&ev.op)) {
    const ItemSpec& spec = ins->item;
    check_item_for_problem(spec, cfg_.problem, cfg_.d);
    if (items_.has_live(spec.id)) {
      throw InputError("insert of live id '" + spec.id + "'");
    }
    diag.insert = true;
    diag.id = spec.id;

    Uid uid = items_.insert(spec);
    Rational vol = item_size(spec);
    PlacementRecord rec = online_->place(uid, spec);
    solution_.placements[uid] = rec;
    solution_.live.insert(uid);
    solution_.cost = online_->cost();

    live_volume_ += vol;
    v_total_ += vol;
    v_changed_ += vol;
    phase_inserted_ += vol;
    ledger_.record_insert(vol);
    if (is_geometric(cfg_.problem)) {
      live_heights_.insert(item_box_sides(spec)->back());
    } else {
      const auto& comps = std::get<VectorLoad>(spec.shape).components;
      for (int k = 0; k < cfg_.d; ++k) live_loads_[k] += comps[k];
    }
    if (cfg_.check) {
      checker_.on_place(uid, rec, spec, t, sink_);
      online_->check_invariants(sink_, t);
    }
  } else {
    const auto& dep = std::get<DepartOp>(ev.op);
    if (!items_.has_live(dep.id)) {
      throw InputError("depart of unknown id '" + dep.id + "'");
    }
    diag.insert = false;
    diag.id = dep.id;

    Uid uid = items_.depart(dep.id);
    const ItemSpec& spec = items_.spec(uid);
    Rational vol = item_size(spec);
    solution_.live.erase(uid);
    solution_.ghosts.insert(uid);

    live_volume_ -= vol;
    v_changed_ += vol;
    phase_departed_ += vol;
    ledger_.record_depart(vol);
    if (is_geometric(cfg_.problem)) {
      live_heights_.erase(live_heights_.find(item_box_sides(spec)->back()));
    } else {
      const auto& comps = std::get<VectorLoad>(spec.shape).components;
      for (int k = 0; k < cfg_.d; ++k) live_loads_[k] -= comps[k];
    }
  }

  // Phase boundary: strictly more volume changed than epsilon times tracked.
  diag.phase_end = cfg_.epsilon && v_changed_ > *cfg_.epsilon * v_total_;
  if (diag.phase_end) {
    diag.migrated = repack(t);
  } else if (cfg_.check && cfg_.epsilon) {
    if (live_volume_ < (Rational(1) - *cfg_.epsilon) * v_total_) {
      sink_.fail(t, "phase-volume-floor",
                 "live volume " + live_volume_.str() + " below (1-eps)*V = " +
                     ((Rational(1) - *cfg_.epsilon) * v_total_).str());
    }
  }

  diag.cost = solution_.cost;
  diag.live_cost = live_cost();
  diag.lb = live_lb();
  diag.ledger_factor = ledger_.factor();

  std::optional<Rational> beta = online_->volume_ratio();
  std::optional<Rational> opt_now = live_opt();

  if (cfg_.epsilon && opt_now && beta && offline_->opt_gamma()) {
    CombinedConstants k{*offline_->opt_gamma(), *beta, *cfg_.epsilon,
                        online_->additive(), offline_->opt_additive()};
    diag.bound = combined_cost_bound(k, *opt_now);
    diag.bound_kind = "opt";
    diag.bound_ok = diag.cost <= *diag.bound;
    if (cfg_.check && !diag.bound_ok) {
      sink_.fail(t, "combined-bound", "cost " + diag.cost.str() + " > " +
                                          diag.bound->str() + " at opt " +
                                          opt_now->str());
    }
  } else if (beta) {
    diag.bound = flex_base_ + *beta * phase_inserted_ + online_->additive();
    diag.bound_kind = "volume";
    diag.bound_ok = diag.cost <= *diag.bound;
    if (cfg_.check && !diag.bound_ok) {
      sink_.fail(t, "flexible-contract",
                 "cost " + diag.cost.str() + " > " + diag.bound->str());
    }
  } else {
    diag.bound_kind = "none";
  }

  // Between repacks the optimum cannot have dropped far below what the phase
  // started from: opt(start) <= opt(now) + beta*eps*V_start + c_on.
  if (cfg_.check && !diag.phase_end && phase_start_opt_ && opt_now && beta &&
      cfg_.epsilon) {
    Rational rhs = *opt_now + *beta * *cfg_.epsilon * phase_start_vtotal_ +
                   online_->additive();
    if (*phase_start_opt_ > rhs) {
      sink_.fail(t, "phase-start-opt",
                 "opt at phase start " + phase_start_opt_->str() +
                     " exceeds opt now + beta*eps*V + c = " + rhs.str());
    }
  }

  if (cfg_.check && cfg_.epsilon) {
    Rational cap = Rational(1) / *cfg_.epsilon + Rational(1);
    if (auto factor = ledger_.factor(); factor && *factor > cap) {
      sink_.fail(t, "migration-amortized",
                 "migration factor " + factor->str() + " exceeds " + cap.str());
    }
  }
  return diag;
}

Rational RobustRunner::repack(std::int64_t t) {
  std::vector<std::pair<Uid, ItemSpec>> live;
  live.reserve(solution_.live.size());
  for (Uid uid : solution_.live) live.emplace_back(uid, items_.spec(uid));

  RepackResult res = offline_->repack(live);

  Rational migrated(0);
  for (const auto& [uid, spec] : live) {
    auto now = res.solution.placements.find(uid);
    if (now == res.solution.placements.end()) {
      throw std::logic_error("repack lost item uid " + std::to_string(uid));
    }
    if (!(now->second == solution_.placements.at(uid))) {
      migrated += item_size(spec);
    }
  }

  if (cfg_.check) {
    Rational turnover = phase_inserted_ + phase_departed_;
    Rational cap = (Rational(1) / *cfg_.epsilon + Rational(1)) * turnover;
    if (migrated > cap) {
      sink_.fail(t, "phase-migration", "migrated " + migrated.str() +
                                           " exceeds (1/eps+1)*turnover = " +
                                           cap.str());
    }
    if (res.volume_gamma &&
        res.solution.cost > *res.volume_gamma * live_volume_ + res.volume_additive) {
      sink_.fail(t, "repack-volume-cert",
                 "repacked cost " + res.solution.cost.str() + " > " +
                     (*res.volume_gamma * live_volume_ + res.volume_additive).str());
    }
    for (const auto& v : res.internal) {
      sink_.fail(t, "offline-" + v.monitor, v.detail);
    }
  }

  ledger_.record_migration(migrated);
  ledger_.close_phase({t, phase_inserted_, phase_departed_, migrated, live_volume_});

  solution_ = std::move(res.solution);
  check_solution_wellformed(solution_);
  online_->flexify(solution_);
  flex_base_ = solution_.cost;
  v_total_ = live_volume_;
  v_changed_ = Rational(0);
  phase_inserted_ = Rational(0);
  phase_departed_ = Rational(0);
  ++phase_count_;
  phase_start_vtotal_ = v_total_;
  phase_start_opt_.reset();

  if (cfg_.check) {
    checker_.reset(solution_, items_, t, sink_);
    online_->check_invariants(sink_, t);
    if (auto opt = live_opt()) {
      phase_start_opt_ = opt;
      if (res.opt_gamma &&
          solution_.cost > *res.opt_gamma * *opt + res.opt_additive) {
        sink_.fail(t, "repack-opt-cert",
                   "repacked cost " + solution_.cost.str() + " > " +
                       (*res.opt_gamma * *opt + res.opt_additive).str());
      }
    }
  }
  return migrated;
}

}  // namespace packshift
