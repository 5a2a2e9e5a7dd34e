#include "doctest.h"
#include "packshift/shelf.hpp"

using namespace packshift;

namespace {

ItemSpec rect(const char* id, const Rational& w, const Rational& h) {
  return {id, Rect2D{w, h}};
}

ItemSpec cube(const char* id, int d, const Rational& s) {
  return {id, Hypercube{d, s}};
}

ItemSpec box(const char* id, std::vector<Rational> sides) {
  return {id, Hyperrect{std::move(sides)}};
}

}  // namespace

TEST_SUITE("shelf") {

TEST_CASE("class boundaries") {
  CHECK(shelf_class_of({Rational(1, 2), Rational(9, 10)}) == 0);
  CHECK(shelf_class_of({Rational(7, 10), Rational(1, 5)}) == 0);
  CHECK(shelf_class_of({Rational(1, 5), Rational(3, 5)}) == 1);
  CHECK(shelf_class_of({Rational(49, 100), Rational(1)}) == 1);
  CHECK(shelf_class_of({Rational(1, 5), Rational(1, 2)}) == 2);
  CHECK(shelf_class_of({Rational(1, 5), Rational(1, 4)}) == 3);

  CHECK(cube_class_of(Rational(1)) == 1);
  CHECK(cube_class_of(Rational(3, 5)) == 1);
  CHECK(cube_class_of(Rational(1, 2)) == 2);
  CHECK(cube_class_of(Rational(3, 10)) == 2);
  CHECK(cube_class_of(Rational(1, 4)) == 3);

  CHECK(height_class_of(Rational(1)) == 0);
  CHECK(height_class_of(Rational(3, 5)) == 0);
  CHECK(height_class_of(Rational(1, 2)) == 1);
  CHECK(height_class_of(Rational(3, 10)) == 1);
  CHECK(height_class_of(Rational(1, 4)) == 2);
  CHECK(height_class_of(Rational(1, 8)) == 3);

  // Sides at or below 2^-62 are rejected, not misclassified.
  CHECK_THROWS_AS(shelf_class_of({Rational(1, 4), Rational::pow2(-62)}), InputError);
  CHECK_THROWS_AS(cube_class_of(Rational::pow2(-62)), InputError);
  CHECK_THROWS_AS(height_class_of(Rational::pow2(-62)), InputError);
  CHECK(height_class_of(Rational::pow2(-61)) == 61);
}

TEST_CASE("rect shelves stack wide items and shelve narrow ones") {
  ShelfStripPacker p;
  p.flexify(SolutionState{});
  MonitorSink sink;

  // Class 0: full-height containers, items stacked bottom-up.
  auto r1 = p.place(0, rect("a", Rational(7, 10), Rational(1, 5)));
  CHECK(r1.offset == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(p.cost() == Rational(1));
  auto r2 = p.place(1, rect("b", Rational(3, 5), Rational(3, 10)));
  CHECK(r2.offset == std::vector<Rational>{Rational(0), Rational(1, 5)});
  CHECK(p.cost() == Rational(1));
  // 1/5 + 3/10 + 3/5 > 1: opens a second class-0 container at the top.
  auto r3 = p.place(2, rect("c", Rational(11, 20), Rational(3, 5)));
  CHECK(r3.offset == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(p.cost() == Rational(2));

  // Class 1 (h in (1/2, 1]): height-1 container, items left to right.
  auto r4 = p.place(3, rect("d", Rational(3, 10), Rational(3, 5)));
  CHECK(r4.offset == std::vector<Rational>{Rational(0), Rational(2)});
  auto r5 = p.place(4, rect("e", Rational(3, 10), Rational(7, 10)));
  CHECK(r5.offset == std::vector<Rational>{Rational(3, 10), Rational(2)});
  CHECK(p.cost() == Rational(3));
  // 3/10 + 3/10 + 9/20 > 1: new class-1 container.
  auto r6 = p.place(5, rect("f", Rational(9, 20), Rational(4, 5)));
  CHECK(r6.offset == std::vector<Rational>{Rational(0), Rational(3)});
  CHECK(p.cost() == Rational(4));

  // Class 2 (h in (1/4, 1/2]): container of height 1/2.
  auto r7 = p.place(6, rect("g", Rational(1, 5), Rational(3, 10)));
  CHECK(r7.offset == std::vector<Rational>{Rational(0), Rational(4)});
  CHECK(p.cost() == Rational(9, 2));

  p.check_invariants(sink, 7);
  CHECK(sink.ok());
  CHECK(p.cost() <= *p.volume_ratio() * p.placed_volume() + p.additive());
  CHECK_THROWS_AS(p.place(7, cube("x", 2, Rational(1, 3))), InputError);
}

TEST_CASE("flexify keeps the inherited height as the floor") {
  ShelfStripPacker p;
  SolutionState prev;
  prev.cost = Rational(5, 2);
  p.flexify(prev);
  auto r = p.place(0, rect("a", Rational(1, 2), Rational(1, 2)));
  CHECK(r.offset == std::vector<Rational>{Rational(0), Rational(5, 2)});
  CHECK(p.cost() == Rational(7, 2));
  CHECK(p.base() == Rational(5, 2));
}

TEST_CASE("hypercube strip d=2") {
  HypercubeStripPacker p(2);
  p.flexify(SolutionState{});
  MonitorSink sink;

  // Class 1 (side in (1/2, 1]): container height 1, one slot per container.
  auto r1 = p.place(0, cube("a", 2, Rational(3, 5)));
  CHECK(r1.offset == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(p.cost() == Rational(1));
  auto r2 = p.place(1, cube("b", 2, Rational(4, 5)));
  CHECK(r2.offset == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(p.cost() == Rational(2));

  // Class 2 (side in (1/4, 1/2]): container height 1/2, grid 2 -> 2 slots.
  auto r3 = p.place(2, cube("c", 2, Rational(2, 5)));
  CHECK(r3.offset == std::vector<Rational>{Rational(0), Rational(2)});
  auto r4 = p.place(3, cube("d", 2, Rational(3, 10)));
  CHECK(r4.offset == std::vector<Rational>{Rational(1, 2), Rational(2)});
  CHECK(p.cost() == Rational(5, 2));
  auto r5 = p.place(4, cube("e", 2, Rational(2, 5)));
  CHECK(r5.offset == std::vector<Rational>{Rational(0), Rational(5, 2)});
  CHECK(p.cost() == Rational(3));

  p.check_invariants(sink, 5);
  CHECK(sink.ok());
  CHECK(p.cost() <= *p.volume_ratio() * p.placed_volume() + p.additive());
  CHECK(*p.volume_ratio() == Rational(4));
  CHECK_THROWS_AS(p.place(5, cube("x", 3, Rational(1, 3))), InputError);
  CHECK_THROWS_AS(HypercubeStripPacker(1), InputError);
}

TEST_CASE("hypercube strip d=3 fills the slot grid lexicographically") {
  HypercubeStripPacker p(3);
  p.flexify(SolutionState{});
  MonitorSink sink;

  // Class 2, height 1/2, grid 2 -> 4 slots; the last axis index moves fastest.
  Rational s(3, 10);
  Rational half(1, 2);
  auto r1 = p.place(0, cube("a", 3, s));
  CHECK(r1.offset == std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
  auto r2 = p.place(1, cube("b", 3, s));
  CHECK(r2.offset == std::vector<Rational>{Rational(0), half, Rational(0)});
  auto r3 = p.place(2, cube("c", 3, s));
  CHECK(r3.offset == std::vector<Rational>{half, Rational(0), Rational(0)});
  auto r4 = p.place(3, cube("d", 3, s));
  CHECK(r4.offset == std::vector<Rational>{half, half, Rational(0)});
  CHECK(p.cost() == half);

  // Fifth item: the closed container passes the 2^-d coverage floor, a new
  // one opens above it.
  auto r5 = p.place(4, cube("e", 3, s));
  CHECK(r5.offset == std::vector<Rational>{Rational(0), Rational(0), half});
  CHECK(p.cost() == Rational(1));
  p.check_invariants(sink, 5);
  CHECK(sink.ok());
  CHECK(*p.volume_ratio() == Rational(8));
}

TEST_CASE("box strip groups by height class and delegates cross-sections") {
  HyperrectStripPacker p(2);
  p.flexify(SolutionState{});
  MonitorSink sink;

  // Both heights land in class 0 (h in (1/2, 1]), containers of height 1.
  auto r1 = p.place(0, box("a", {Rational(3, 10), Rational(3, 5)}));
  CHECK(r1.offset == std::vector<Rational>{Rational(0), Rational(0)});
  CHECK(p.cost() == Rational(1));
  // Cross-section width 4/5 is class 1 for the 1-D delegate: its own bin,
  // hence its own container.
  auto r2 = p.place(1, box("b", {Rational(4, 5), Rational(3, 5)}));
  CHECK(r2.offset == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(p.cost() == Rational(2));
  // Another narrow one shares the first delegate bin's other slot.
  auto r3 = p.place(2, box("c", {Rational(3, 10), Rational(7, 10)}));
  CHECK(r3.offset == std::vector<Rational>{Rational(1, 2), Rational(0)});
  CHECK(p.cost() == Rational(2));

  // Height 3/10 is class 1: container of height 1/2 on top.
  auto r4 = p.place(3, box("d", {Rational(3, 5), Rational(3, 10)}));
  CHECK(r4.offset == std::vector<Rational>{Rational(0), Rational(2)});
  CHECK(p.cost() == Rational(5, 2));

  p.check_invariants(sink, 4);
  CHECK(sink.ok());
  CHECK(*p.volume_ratio() == Rational(48, 5));
  CHECK_FALSE(HyperrectStripPacker(3).volume_ratio().has_value());
  CHECK_THROWS_AS(p.place(4, box("x", {Rational(1, 3)})), InputError);
  CHECK_THROWS_AS(HyperrectStripPacker(1), InputError);
}

}  // TEST_SUITE
