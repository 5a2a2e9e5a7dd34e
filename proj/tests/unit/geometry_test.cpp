#include "doctest.h"
#include "packshift/geometry.hpp"

using namespace packshift;

namespace {

Box box2(const Rational& x, const Rational& y, const Rational& w,
         const Rational& h) {
  return Box{{x, y}, {w, h}};
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("disjointness is about interiors") {
  Box a = box2(Rational(0), Rational(0), Rational(1, 2), Rational(1, 2));
  Box b = box2(Rational(1, 2), Rational(0), Rational(1, 2), Rational(1, 2));
  CHECK(boxes_disjoint(a, b));  // shared edge
  Box c = box2(Rational(1, 4), Rational(1, 4), Rational(1, 2), Rational(1, 2));
  CHECK_FALSE(boxes_disjoint(a, c));
  CHECK_FALSE(boxes_disjoint(a, a));
  Box far = box2(Rational(0), Rational(3), Rational(1), Rational(1));
  CHECK(boxes_disjoint(a, far));
  // Disjoint on one axis suffices in any dimension.
  Box d1{{Rational(0), Rational(0), Rational(0)},
         {Rational(1), Rational(1), Rational(1, 4)}};
  Box d2{{Rational(0), Rational(0), Rational(1, 4)},
         {Rational(1), Rational(1), Rational(1, 4)}};
  CHECK(boxes_disjoint(d1, d2));
}

TEST_CASE("containment is closed") {
  Box outer = box2(Rational(0), Rational(0), Rational(1), Rational(1));
  CHECK(box_contains(outer, box2(Rational(0), Rational(0), Rational(1), Rational(1))));
  CHECK(box_contains(outer,
                     box2(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2))));
  CHECK_FALSE(box_contains(
      outer, box2(Rational(3, 4), Rational(0), Rational(1, 2), Rational(1, 2))));
  CHECK_FALSE(box_contains(
      outer, box2(Rational(-1, 8), Rational(0), Rational(1, 4), Rational(1, 4))));
}

TEST_CASE("placement box") {
  ItemSpec item{"a", Rect2D{Rational(1, 4), Rational(1, 2)}};
  PlacementRecord rec{std::nullopt, {Rational(1, 8), Rational(3)}, std::nullopt};
  Box b = placement_box(rec, item);
  CHECK(b.origin[0] == Rational(1, 8));
  CHECK(b.origin[1] == Rational(3));
  CHECK(b.sides[0] == Rational(1, 4));
  CHECK(b.sides[1] == Rational(1, 2));
}

TEST_CASE("overlap and bounds detection") {
  ItemTable table;
  Uid a = table.insert({"a", Rect2D{Rational(1, 2), Rational(1, 2)}});
  Uid b = table.insert({"b", Rect2D{Rational(1, 2), Rational(1, 2)}});
  SolutionState s;
  s.placements[a] =
      PlacementRecord{std::nullopt, {Rational(0), Rational(0)}, std::nullopt};
  s.placements[b] =
      PlacementRecord{std::nullopt, {Rational(1, 4), Rational(1, 4)}, std::nullopt};
  s.live = {a, b};
  ValidityReport rep = validate_packing(s, table, Problem::strip2d, 2);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.overlaps.size() == 1);
  CHECK(rep.overlaps[0].a == a);
  CHECK(rep.overlaps[0].b == b);

  // Strip: open above, closed sides.
  s.placements[b] =
      PlacementRecord{std::nullopt, {Rational(3, 4), Rational(0)}, std::nullopt};
  rep = validate_packing(s, table, Problem::strip2d, 2);
  CHECK(rep.overlaps.empty());
  REQUIRE(rep.out_of_bounds.size() == 1);
  CHECK(rep.out_of_bounds[0] == b);

  s.placements[b] =
      PlacementRecord{std::nullopt, {Rational(1, 2), Rational(7)}, std::nullopt};
  rep = validate_packing(s, table, Problem::strip2d, 2);
  CHECK(rep.ok());
}

TEST_CASE("bin problems only collide within one bin") {
  ItemTable table;
  Uid a = table.insert({"a", Rect2D{Rational(3, 4), Rational(3, 4)}});
  Uid b = table.insert({"b", Rect2D{Rational(3, 4), Rational(3, 4)}});
  SolutionState s;
  s.placements[a] = PlacementRecord{0, {Rational(0), Rational(0)}, std::nullopt};
  s.placements[b] = PlacementRecord{1, {Rational(0), Rational(0)}, std::nullopt};
  s.live = {a, b};
  CHECK(validate_packing(s, table, Problem::bin2d, 2).ok());
  s.placements[b].bin = 0;
  CHECK_FALSE(validate_packing(s, table, Problem::bin2d, 2).ok());
  // Bins are unit boxes: offsets past 1 are out of bounds.
  s.placements[b] = PlacementRecord{1, {Rational(1, 2), Rational(0)}, std::nullopt};
  ValidityReport rep = validate_packing(s, table, Problem::bin2d, 2);
  CHECK(rep.out_of_bounds == std::vector<Uid>{b});
}

TEST_CASE("vector packing checks per-axis loads") {
  ItemTable table;
  Uid a = table.insert({"a", VectorLoad{{Rational(3, 5), Rational(1, 5)}}});
  Uid b = table.insert({"b", VectorLoad{{Rational(1, 2), Rational(1, 5)}}});
  SolutionState s;
  s.placements[a] = PlacementRecord{0, {}, std::nullopt};
  s.placements[b] = PlacementRecord{0, {}, std::nullopt};
  s.live = {a, b};
  ValidityReport rep = validate_packing(s, table, Problem::vector_pack, 2);
  CHECK_FALSE(rep.ok());
  CHECK(rep.overloaded_bins == std::vector<std::int64_t>{0});
  s.placements[b].bin = 1;
  CHECK(validate_packing(s, table, Problem::vector_pack, 2).ok());
}

TEST_CASE("a clean 500-box grid stays clean") {
  // 8x8x8 grid of 1/8-cubes in one bin, sampled down to 500: disjoint by
  // construction, so the quadratic oracle must find nothing.
  ItemTable table;
  SolutionState s;
  int count = 0;
  for (int x = 0; x < 8 && count < 500; ++x) {
    for (int y = 0; y < 8 && count < 500; ++y) {
      for (int z = 0; z < 8 && count < 500; ++z) {
        ItemSpec item{"g" + std::to_string(count),
                      Hyperrect{{Rational(1, 8), Rational(1, 8), Rational(1, 8)}}};
        Uid uid = table.insert(item);
        s.placements[uid] = PlacementRecord{
            0,
            {Rational(x, 8), Rational(y, 8), Rational(z, 8)},
            std::nullopt};
        s.live.insert(uid);
        ++count;
      }
    }
  }
  ValidityReport rep = validate_packing(s, table, Problem::bin_d, 3);
  CHECK(rep.ok());
  // Nudge one box to collide.
  s.placements[table.live_uid("g7")].offset[2] = Rational(1, 16);
  CHECK_FALSE(validate_packing(s, table, Problem::bin_d, 3).ok());
}

}  // TEST_SUITE
