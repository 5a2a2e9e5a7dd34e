#include <gmpxx.h>

#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "packshift/rational.hpp"

using packshift::Rational;

namespace {

mpq_class to_mpq(const Rational& r) {
  mpq_class q(static_cast<long>(r.num()), static_cast<long>(r.den()));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).num() == 3);
  CHECK(Rational(6, 4).den() == 2);
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(2, -4).den() == 2);
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(-9, -3) == Rational(3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("field laws on small values") {
  std::vector<Rational> vals = {Rational(0),      Rational(1),       Rational(-1),
                                Rational(1, 2),   Rational(-2, 3),   Rational(7, 5),
                                Rational(13, 11), Rational(-19, 17)};
  for (const auto& a : vals) {
    for (const auto& b : vals) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + Rational(0) == a);
      CHECK(a * Rational(1) == a);
      CHECK(a - b == -(b - a));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      for (const auto& c : vals) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(2, 4) >= Rational(1, 2));
  CHECK(Rational(5, 7) > Rational(7, 10));
  CHECK(packshift::min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
  CHECK(packshift::max(Rational(1, 3), Rational(1, 4)) == Rational(1, 3));
  CHECK(packshift::abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6).floor() == 6);
  CHECK(Rational(6).ceil() == 6);
  CHECK(Rational(0).ceil() == 0);
  CHECK(Rational(81, 100).ceil() == 1);
}

TEST_CASE("powers of two") {
  CHECK(Rational::pow2(0) == Rational(1));
  CHECK(Rational::pow2(3) == Rational(8));
  CHECK(Rational::pow2(-2) == Rational(1, 4));
  CHECK(Rational::pow2(62) == Rational(std::int64_t(1) << 62));
  CHECK(Rational::pow2(-62) == Rational(1, std::int64_t(1) << 62));
  CHECK_THROWS_AS(Rational::pow2(63), packshift::RationalOverflow);
  CHECK_THROWS_AS(Rational::pow2(-63), packshift::RationalOverflow);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("7/20") == Rational(7, 20));
  CHECK(Rational::parse("0.35") == Rational(7, 20));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("+5/10") == Rational(1, 2));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("1") == Rational(1));
  CHECK_THROWS_AS(Rational::parse("1/0"), packshift::RationalParseError);
  CHECK_THROWS_AS(Rational::parse(""), packshift::RationalParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), packshift::RationalParseError);
  CHECK_THROWS_AS(Rational::parse("1e5"), packshift::RationalParseError);
  CHECK_THROWS_AS(Rational::parse("1/ 2"), packshift::RationalParseError);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), packshift::RationalParseError);
  CHECK_THROWS_AS(Rational::parse("/3"), packshift::RationalParseError);
}

TEST_CASE("str") {
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational::parse(Rational(355, 113).str()) == Rational(355, 113));
}

TEST_CASE("overflow throws instead of degrading") {
  Rational big(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big * Rational(2), packshift::RationalOverflow);
  CHECK_THROWS_AS(big + Rational(1), packshift::RationalOverflow);
  Rational tiny(1, std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(tiny * Rational(1, 3), packshift::RationalOverflow);
  // Reducible results inside the range stay fine.
  CHECK(Rational(std::int64_t(1) << 62, 3) * Rational(3, 2) ==
        Rational(std::int64_t(1) << 61));
}

TEST_CASE("random cross-check against gmp") {
  std::mt19937_64 rng(20260815);
  auto draw = [&]() {
    std::int64_t num = static_cast<std::int64_t>(rng() % 2001) - 1000;
    std::int64_t den = static_cast<std::int64_t>(rng() % 999) + 1;
    return Rational(num, den);
  };
  for (int i = 0; i < 2000; ++i) {
    Rational a = draw();
    Rational b = draw();
    mpq_class qa = to_mpq(a);
    mpq_class qb = to_mpq(b);
    CHECK(to_mpq(a + b) == qa + qb);
    CHECK(to_mpq(a - b) == qa - qb);
    CHECK(to_mpq(a * b) == qa * qb);
    if (!b.is_zero()) CHECK(to_mpq(a / b) == qa / qb);
    CHECK((a < b) == (qa < qb));
    CHECK((a == b) == (qa == qb));
  }
}

}  // TEST_SUITE
