#include <doctest.h>

#include <random>

#include "fnspect/interval_set.hpp"

using namespace fnspect;

namespace {
IntervalSet::Component closed(long alo, long ad, long bhi, long bd) {
  return {Rational(alo, ad), false, Rational(bhi, bd), false};
}
}  // namespace

TEST_CASE("measure sums component lengths") {
  CHECK(IntervalSet::normalized({closed(0, 1, 1, 1), closed(2, 1, 3, 1)}).measure() ==
        Rational(2));
  CHECK(IntervalSet::empty().measure() == Rational(0));
  CHECK(IntervalSet::normalized({closed(1, 3, 1, 2)}).measure() == Rational(1, 6));
}

TEST_CASE("openness flags do not affect the measure") {
  IntervalSet open_set = IntervalSet::normalized(
      {{Rational(0), true, Rational(1), true}});
  IntervalSet closed_set = IntervalSet::normalized({closed(0, 1, 1, 1)});
  CHECK(open_set.measure() == closed_set.measure());
}

TEST_CASE("normalization merges touching and overlapping components") {
  // ]0,1[ + {1} + ]1,2[ glues into ]0,2[.
  IntervalSet s = IntervalSet::normalized({
      {Rational(0), true, Rational(1), true},
      {Rational(1), false, Rational(1), false},
      {Rational(1), true, Rational(2), true},
  });
  REQUIRE(s.size() == 1);
  CHECK(s.components()[0].lo == Rational(0));
  CHECK(s.components()[0].lo_open);
  CHECK(s.components()[0].hi == Rational(2));
  CHECK(s.components()[0].hi_open);

  // ]0,1[ and ]1,2[ stay apart: the point 1 is missing.
  IntervalSet gap = IntervalSet::normalized({
      {Rational(0), true, Rational(1), true},
      {Rational(1), true, Rational(2), true},
  });
  CHECK(gap.size() == 2);

  // Overlap collapses.
  IntervalSet lap = IntervalSet::normalized({closed(0, 1, 3, 2), closed(1, 1, 2, 1)});
  REQUIRE(lap.size() == 1);
  CHECK(lap.components()[0].hi == Rational(2));
}

TEST_CASE("from_components validates") {
  CHECK_THROWS_AS(IntervalSet::from_components(
                      {closed(1, 1, 2, 1), closed(0, 1, 1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::from_components(
                      {closed(0, 1, 1, 1), closed(1, 2, 2, 1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::from_components(
                      {{Rational(1), false, Rational(0), false}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::from_components(
                      {{Rational(1), true, Rational(1), false}}),
                  std::invalid_argument);
  CHECK_NOTHROW(IntervalSet::from_components(
      {{Rational(0), true, Rational(1), true},
       {Rational(1), true, Rational(2), false}}));
}

TEST_CASE("membership respects openness") {
  IntervalSet s = IntervalSet::normalized({
      {Rational(0), true, Rational(1), false},
      {Rational(2), false, Rational(2), false},
  });
  CHECK_FALSE(s.contains(Rational(0)));
  CHECK(s.contains(Rational(1, 2)));
  CHECK(s.contains(Rational(1)));
  CHECK(s.contains(Rational(2)));
  CHECK_FALSE(s.contains(Rational(3, 2)));
  CHECK_FALSE(s.contains(Rational(3)));
}

TEST_CASE("measure is additive over disjoint unions") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> den(1, 40);
  std::uniform_int_distribution<long> num(0, 200);
  for (int iter = 0; iter < 200; ++iter) {
    // Components of A live in [0, 10], of B in [20, 30]: disjoint by design.
    std::vector<IntervalSet::Component> ca, cb;
    for (int i = 0; i < 4; ++i) {
      Rational alo(num(rng), den(rng) * 20);
      Rational ahi = alo + Rational(1 + num(rng) % 50, 100);
      ca.push_back({alo, false, ahi, true});
      Rational blo = Rational(20) + Rational(num(rng), den(rng) * 20);
      Rational bhi = blo + Rational(1 + num(rng) % 50, 100);
      cb.push_back({blo, true, bhi, false});
    }
    IntervalSet a = IntervalSet::normalized(ca);
    IntervalSet b = IntervalSet::normalized(cb);
    IntervalSet u = IntervalSet::set_union(a, b);
    CHECK(u.measure() == a.measure() + b.measure());
  }
}
