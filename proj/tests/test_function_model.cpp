#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fnspect/errors.hpp"
#include "fnspect/function_model.hpp"
#include "support/fixtures.hpp"
#include "support/model_gen.hpp"

using namespace fnspect;

TEST_CASE("evaluation semantics: modification, then breakpoint, then piece") {
  FunctionModel c3 = fixtures::constant(Rational(3), Rational(0), Rational(1));
  CHECK(c3.evaluate(Rational(1, 2)) == Rational(3));

  FunctionModel h = fixtures::heaviside();
  CHECK(h.evaluate(Rational(0)) == Rational(1));
  CHECK(h.evaluate(Rational(-1, 2)) == Rational(0));
  CHECK(h.evaluate(Rational(1, 2)) == Rational(1));

  FunctionModel d = fixtures::dirichlet();
  CHECK(d.evaluate(Rational(1, 2)) == Rational(1));
  CHECK(d.evaluate(Rational(0)) == Rational(1));  // modification wins at breakpoints

  FunctionModel dy = fixtures::dyadic_shift();
  CHECK(dy.evaluate(Rational(3, 8)) == Rational(1, 2));   // dyadic
  CHECK(dy.evaluate(Rational(1, 3)) == Rational(1, 3));   // not dyadic
  CHECK(dy.evaluate(Rational(0)) == Rational(1, 2));      // 0 is dyadic
}

TEST_CASE("piece_at locates pieces and breakpoints") {
  FunctionModel h = fixtures::heaviside();
  PieceLocation loc = h.piece_at(Rational(1, 2));
  REQUIRE(std::holds_alternative<PieceRef>(loc));
  const auto& ref = std::get<PieceRef>(loc);
  CHECK(ref.index == 1);
  CHECK((*ref.poly)(Rational(1, 2)) == Rational(1));
  CHECK(ref.span == Interval(Rational(0), Rational(1)));

  PieceLocation at0 = h.piece_at(Rational(0));
  REQUIRE(std::holds_alternative<BreakpointRef>(at0));
  CHECK(std::get<BreakpointRef>(at0).index == 1);

  PiecewiseFunction base;
  base.breakpoints = {Rational(0), Rational(1, 3), Rational(1)};
  base.pieces = {Polynomial(), Polynomial()};
  base.point_values = {Rational(0), Rational(0), Rational(0)};
  FunctionModel f(std::move(base), std::nullopt);
  PieceLocation at_third = f.piece_at(Rational(1, 3));
  REQUIRE(std::holds_alternative<BreakpointRef>(at_third));
  CHECK(std::get<BreakpointRef>(at_third).index == 1);
}

TEST_CASE("domain errors name the point") {
  FunctionModel h = fixtures::heaviside();
  CHECK_THROWS_AS(h.evaluate(Rational(2)), DomainError);
  CHECK_THROWS_AS(h.piece_at(Rational(-3, 2)), DomainError);
  try {
    h.evaluate(Rational(5, 2));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("5/2") != std::string::npos);
  }
}

TEST_CASE("construction validates the invariants") {
  auto make = [](std::vector<Rational> bps, std::size_t npieces,
                 std::size_t nvalues) {
    PiecewiseFunction base;
    base.breakpoints = std::move(bps);
    for (std::size_t i = 0; i < npieces; ++i) base.pieces.push_back(Polynomial());
    for (std::size_t i = 0; i < nvalues; ++i) base.point_values.push_back(Rational(0));
    return FunctionModel(std::move(base), std::nullopt);
  };
  CHECK_THROWS_AS(make({Rational(0), Rational(0)}, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make({Rational(1), Rational(0)}, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(make({Rational(0), Rational(1)}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make({Rational(0), Rational(1)}, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(make({Rational(0)}, 0, 1), std::invalid_argument);
  CHECK_NOTHROW(make({Rational(0), Rational(1)}, 1, 2));

  // Degree cap.
  PiecewiseFunction base;
  base.breakpoints = {Rational(0), Rational(1)};
  base.pieces = {Polynomial(std::vector<Rational>(14, Rational(1)))};
  base.point_values = {Rational(0), Rational(0)};
  CHECK_THROWS_AS(FunctionModel(std::move(base), std::nullopt),
                  std::invalid_argument);

  // Modification point outside the domain.
  PiecewiseFunction base2;
  base2.breakpoints = {Rational(0), Rational(1)};
  base2.pieces = {Polynomial()};
  base2.point_values = {Rational(0), Rational(0)};
  CHECK_THROWS_AS(
      FunctionModel(std::move(base2),
                    CountableModification::finite({{Rational(2), Rational(1)}})),
      std::invalid_argument);

  CHECK_THROWS_AS(CountableModification::finite(
                      {{Rational(1, 2), Rational(0)}, {Rational(1, 2), Rational(1)}}),
                  std::invalid_argument);
}

TEST_CASE("evaluate agrees with the governing piece away from special points") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 40; ++iter) {
    FunctionModel f = testgen::random_model(rng);
    for (int j = 0; j < 20; ++j) {
      Rational x = testgen::random_domain_point(rng, f);
      PieceLocation loc = f.piece_at(x);
      if (!std::holds_alternative<PieceRef>(loc)) continue;
      const auto& ref = std::get<PieceRef>(loc);
      CHECK(f.evaluate(x) == (*ref.poly)(x));
    }
  }
}

TEST_CASE("a no-op finite modification leaves evaluation unchanged") {
  std::mt19937_64 rng(2025);
  for (int iter = 0; iter < 20; ++iter) {
    FunctionModel f = testgen::random_model(rng, 4, 4);
    // Modify at random points, assigning exactly the value f already takes.
    std::vector<CountableModification::PointValue> points;
    std::set<Rational> seen;
    for (int j = 0; j < 10; ++j) {
      Rational x = testgen::random_domain_point(rng, f);
      if (!seen.insert(x).second) continue;
      points.push_back({x, f.evaluate(x)});
    }
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.x < b.x; });
    FunctionModel g(f.base(), CountableModification::finite(points));
    for (int j = 0; j < 30; ++j) {
      Rational x = testgen::random_domain_point(rng, f);
      CHECK(f.evaluate(x) == g.evaluate(x));
    }
    for (const auto& pv : points) CHECK(f.evaluate(pv.x) == g.evaluate(pv.x));
  }
}

TEST_CASE("negation flips every value") {
  std::mt19937_64 rng(2026);
  for (int iter = 0; iter < 10; ++iter) {
    FunctionModel f = testgen::random_model(rng);
    FunctionModel n = f.negated();
    for (int j = 0; j < 20; ++j) {
      Rational x = testgen::random_domain_point(rng, f);
      CHECK(n.evaluate(x) == -f.evaluate(x));
    }
  }
  FunctionModel d = fixtures::dirichlet();
  CHECK(d.negated().evaluate(Rational(1, 2)) == Rational(-1));
}
