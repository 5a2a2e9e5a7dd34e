#include "doctest.h"
#include "packshift/event.hpp"
#include "packshift/ledger.hpp"
#include "packshift/problem.hpp"
#include "packshift/solution.hpp"

using namespace packshift;

namespace {

ItemSpec rect(const std::string& id, const Rational& w, const Rational& h) {
  return {id, Rect2D{w, h}};
}

ItemSpec vec(const std::string& id, std::vector<Rational> comps) {
  return {id, VectorLoad{std::move(comps)}};
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("item sizes") {
  CHECK(item_size(rect("a", Rational(1, 2), Rational(1, 3))) == Rational(1, 6));
  CHECK(item_size({"c", Hypercube{3, Rational(1, 2)}}) == Rational(1, 8));
  CHECK(item_size(vec("v", {Rational::parse("0.35")})) == Rational(7, 20));
  CHECK(item_size(vec("v", {Rational(1, 2), Rational(1, 4)})) == Rational(3, 8));
  CHECK(item_size({"r", Hyperrect{{Rational(1, 2), Rational(1, 2), Rational(1, 2)}}}) ==
        Rational(1, 8));
  std::vector<ItemSpec> items = {rect("a", Rational(1, 2), Rational(1, 2)),
                                 rect("b", Rational(9, 10), Rational(1, 2))};
  CHECK(total_volume(items) == Rational(7, 10));
}

TEST_CASE("item validation") {
  CHECK_THROWS_AS(validate_item(rect("a", Rational(0), Rational(1, 2))), InputError);
  CHECK_THROWS_AS(validate_item(rect("a", Rational(3, 2), Rational(1, 2))),
                  InputError);
  CHECK_THROWS_AS(validate_item(rect("", Rational(1, 2), Rational(1, 2))),
                  InputError);
  CHECK_THROWS_AS(validate_item({"c", Hypercube{0, Rational(1, 2)}}), InputError);
  CHECK_THROWS_AS(validate_item({"h", Hyperrect{{}}}), InputError);
  CHECK_THROWS_AS(validate_item(vec("v", {Rational(-1, 4)})), InputError);
  CHECK_THROWS_AS(validate_item(vec("v", {Rational(5, 4)})), InputError);
  CHECK_NOTHROW(validate_item(vec("v", {Rational(0), Rational(1)})));
  CHECK_NOTHROW(validate_item(rect("a", Rational(1), Rational(1))));
}

TEST_CASE("item introspection") {
  ItemSpec cube{"c", Hypercube{4, Rational(1, 3)}};
  CHECK(item_dimension(cube) == 4);
  CHECK(std::string(item_kind_name(cube)) == "hypercube");
  auto sides = item_box_sides(cube);
  REQUIRE(sides.has_value());
  CHECK(sides->size() == 4);
  CHECK((*sides)[3] == Rational(1, 3));
  CHECK_FALSE(item_box_sides(vec("v", {Rational(1, 2)})).has_value());
}

TEST_CASE("trace validation") {
  Trace ok;
  ok.events.push_back({0, InsertOp{rect("a", Rational(1, 2), Rational(1, 2))}});
  ok.events.push_back({3, InsertOp{rect("b", Rational(1, 4), Rational(1, 4))}});
  ok.events.push_back({4, DepartOp{"a"}});
  ok.events.push_back({9, InsertOp{rect("a", Rational(1, 8), Rational(1, 8))}});
  CHECK_NOTHROW(validate_trace(ok));

  Trace dup = ok;
  dup.events.push_back({10, InsertOp{rect("b", Rational(1, 8), Rational(1, 8))}});
  CHECK_THROWS_AS(validate_trace(dup), InputError);

  Trace ghost;
  ghost.events.push_back({0, DepartOp{"nope"}});
  CHECK_THROWS_AS(validate_trace(ghost), InputError);

  Trace stale = ok;
  stale.events.push_back({9, DepartOp{"b"}});
  CHECK_THROWS_AS(validate_trace(stale), InputError);

  Trace mixed = ok;
  mixed.events.push_back({20, InsertOp{vec("z", {Rational(1, 2)})}});
  CHECK_THROWS_AS(validate_trace(mixed), InputError);

  Trace wrongd = ok;
  wrongd.events.push_back(
      {21, InsertOp{{"y", Hyperrect{{Rational(1, 2), Rational(1, 2)}}}}});
  CHECK_THROWS_AS(validate_trace(wrongd), InputError);
}

TEST_CASE("item table tracks incarnations") {
  ItemTable table;
  Uid a0 = table.insert(rect("a", Rational(1, 2), Rational(1, 2)));
  Uid b0 = table.insert(rect("b", Rational(1, 4), Rational(1, 4)));
  CHECK(a0 != b0);
  CHECK(table.has_live("a"));
  CHECK(table.live_uid("a") == a0);
  CHECK(table.depart("a") == a0);
  CHECK_FALSE(table.has_live("a"));
  Uid a1 = table.insert(rect("a", Rational(1, 8), Rational(1, 8)));
  CHECK(a1 != a0);
  // Ghost specs stay addressable.
  CHECK(item_size(table.spec(a0)) == Rational(1, 4));
  CHECK(item_size(table.spec(a1)) == Rational(1, 64));
  CHECK(table.known_count() == 3);
}

TEST_CASE("cost from placements") {
  ItemTable table;
  Uid a = table.insert(rect("a", Rational(1, 2), Rational(1, 2)));
  Uid b = table.insert(rect("b", Rational(1, 4), Rational(3, 4)));
  SolutionState s;
  s.placements[a] = PlacementRecord{2, {}, std::nullopt};
  s.placements[b] = PlacementRecord{7, {}, std::nullopt};
  s.live = {a, b};
  CHECK(cost_from_placements(s, CostDomain::bins, table) == Rational(2));
  s.placements[b].bin = 2;
  CHECK(cost_from_placements(s, CostDomain::bins, table) == Rational(1));

  SolutionState strip;
  strip.placements[a] =
      PlacementRecord{std::nullopt, {Rational(0), Rational(0)}, std::nullopt};
  strip.placements[b] =
      PlacementRecord{std::nullopt, {Rational(1, 2), Rational(1, 2)}, std::nullopt};
  strip.live = {a, b};
  CHECK(cost_from_placements(strip, CostDomain::strip, table) == Rational(5, 4));
}

TEST_CASE("restrict solution") {
  ItemTable table;
  Uid a = table.insert(rect("a", Rational(1, 2), Rational(1, 2)));
  Uid b = table.insert(rect("b", Rational(1, 4), Rational(3, 4)));
  SolutionState s;
  s.placements[a] = PlacementRecord{0, {}, std::nullopt};
  s.placements[b] = PlacementRecord{1, {}, std::nullopt};
  s.live = {a};
  s.ghosts = {b};
  s.cost = Rational(2);

  SolutionState bins = restrict_solution(s, {a}, CostDomain::bins, table);
  CHECK(bins.placements.size() == 1);
  CHECK(bins.cost == Rational(1));
  CHECK(bins.live == std::set<Uid>{a});
  CHECK(bins.ghosts.empty());

  SolutionState strip;
  strip.placements[a] =
      PlacementRecord{std::nullopt, {Rational(0), Rational(0)}, std::nullopt};
  strip.placements[b] =
      PlacementRecord{std::nullopt, {Rational(0), Rational(1, 2)}, std::nullopt};
  strip.live = {a, b};
  strip.cost = Rational(5, 4);
  SolutionState kept = restrict_solution(strip, {a}, CostDomain::strip, table);
  // Strip height is committed structure; dropping items does not lower it.
  CHECK(kept.cost == Rational(5, 4));
  CHECK(kept.placements.size() == 1);

  CHECK_THROWS_AS(restrict_solution(s, {Uid{999}}, CostDomain::bins, table),
                  InputError);
}

TEST_CASE("ledger") {
  MigrationLedger ledger;
  CHECK_FALSE(ledger.factor().has_value());
  ledger.record_insert(Rational(1, 2));
  ledger.record_depart(Rational(1, 4));
  ledger.record_migration(Rational(3, 2));
  CHECK(ledger.inserted() == Rational(1, 2));
  CHECK(ledger.departed() == Rational(1, 4));
  CHECK(ledger.migrated() == Rational(3, 2));
  REQUIRE(ledger.factor().has_value());
  CHECK(*ledger.factor() == Rational(2));
  ledger.close_phase({5, Rational(1, 2), Rational(1, 4), Rational(3, 2), Rational(1)});
  CHECK(ledger.phases().size() == 1);
  CHECK(ledger.phases()[0].t == 5);
  CHECK_THROWS_AS(ledger.record_insert(Rational(-1)), std::invalid_argument);
}

TEST_CASE("problem names and compatibility") {
  for (Problem p : {Problem::strip2d, Problem::strip_d, Problem::strip_hypercube,
                    Problem::bin2d, Problem::bin_d, Problem::bin_hypercube,
                    Problem::vector_pack}) {
    CHECK(parse_problem(problem_name(p)) == p);
  }
  CHECK_THROWS_AS(parse_problem("knapsack"), InputError);
  CHECK(is_strip(Problem::strip_hypercube));
  CHECK_FALSE(is_strip(Problem::bin2d));
  CHECK(is_geometric(Problem::bin_d));
  CHECK_FALSE(is_geometric(Problem::vector_pack));
  CHECK(cost_domain(Problem::strip2d) == CostDomain::strip);
  CHECK(cost_domain(Problem::vector_pack) == CostDomain::bins);

  CHECK_NOTHROW(check_item_for_problem(rect("a", Rational(1, 2), Rational(1, 2)),
                                       Problem::strip2d, 2));
  CHECK_THROWS_AS(check_item_for_problem(rect("a", Rational(1, 2), Rational(1, 2)),
                                         Problem::vector_pack, 2),
                  InputError);
  CHECK_THROWS_AS(check_item_for_problem(vec("v", {Rational(1, 2)}),
                                         Problem::vector_pack, 2),
                  InputError);
  CHECK_NOTHROW(check_item_for_problem(vec("v", {Rational(1, 2)}),
                                       Problem::vector_pack, 1));
}

}  // TEST_SUITE
