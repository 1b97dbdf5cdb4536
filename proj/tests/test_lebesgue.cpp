#include <doctest.h>

#include <random>

#include "fnspect/darboux.hpp"
#include "fnspect/lebesgue.hpp"
#include "support/fixtures.hpp"
#include "support/model_gen.hpp"
#include "support/oracles.hpp"

using namespace fnspect;

TEST_CASE("dirichlet carries no mass") {
  Enclosure e = lebesgue_integral(fixtures::dirichlet(), Rational(1, 1000));
  CHECK(e.bounds() == Interval::point(Rational(0)));
  CHECK(e.converged());
}

TEST_CASE("square integrates to 1/3 at tight tolerance") {
  FunctionModel sq = fixtures::square(Rational(0), Rational(1));
  Rational tol(1, 1000000);
  Enclosure e = lebesgue_integral(sq, tol);
  CHECK(e.contains(Rational(1, 3)));
  CHECK(e.width() <= tol);
  CHECK(e.converged());
}

TEST_CASE("heaviside integrates to 1 at tight tolerance") {
  FunctionModel h = fixtures::heaviside();
  Rational tol(1, 1000000);
  Enclosure e = lebesgue_integral(h, tol);
  CHECK(e.contains(Rational(1)));
  CHECK(e.width() <= tol);
}

TEST_CASE("ramp integrates to 1/2, dense dyadic modification notwithstanding") {
  Rational tol(1, 10000);
  Enclosure plain = lebesgue_integral(fixtures::ramp(), tol);
  CHECK(plain.contains(Rational(1, 2)));
  CHECK(plain.width() <= tol);

  Enclosure shifted = lebesgue_integral(fixtures::dyadic_shift(), tol);
  CHECK(shifted.contains(Rational(1, 2)));
  CHECK(shifted.width() <= tol);
}

TEST_CASE("constant-almost-everywhere models are exact") {
  FunctionModel c = fixtures::constant(Rational(-7, 3), Rational(-1), Rational(2));
  Enclosure e = lebesgue_integral(c, Rational(1, 1000));
  CHECK(e.bounds() == Interval::point(Rational(-7)));
  CHECK(e.width().is_zero());
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(lebesgue_integral(fixtures::ramp(), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(lebesgue_integral(fixtures::ramp(), Rational(-1, 3)),
                  std::invalid_argument);
}

TEST_CASE("level-sum enclosures contain the antiderivative oracle") {
  std::mt19937_64 rng(6001);
  for (int iter = 0; iter < 15; ++iter) {
    FunctionModel f = testgen::random_model(rng, 5, 5);
    Rational oracle = oracles::piecewise_integral(f);
    Enclosure e = lebesgue_integral(f, Rational(1, 16));
    CHECK(e.contains(oracle));
  }
}

TEST_CASE("countable invariance: modified and base enclosures intersect") {
  std::mt19937_64 rng(6002);
  for (int iter = 0; iter < 10; ++iter) {
    FunctionModel f = testgen::random_model(rng, 4, 5);
    FunctionModel g = testgen::with_random_finite_modification(rng, f, 100);
    Rational oracle = oracles::piecewise_integral(f);
    Enclosure ef = lebesgue_integral(f, Rational(1, 16));
    Enclosure eg = lebesgue_integral(g, Rational(1, 16));
    CHECK(ef.contains(oracle));
    CHECK(eg.contains(oracle));
    CHECK(ef.bounds().intersects(eg.bounds()));
  }
}

TEST_CASE("lebesgue sits between the darboux integrals") {
  std::mt19937_64 rng(6003);
  for (int iter = 0; iter < 8; ++iter) {
    FunctionModel f = testgen::random_model(rng, 4, 4);
    Enclosure leb = lebesgue_integral(f, Rational(1, 32));
    DarbouxResult dr = darboux_integrals(f, Rational(1, 32), 12);
    CHECK(dr.lower_integral.bounds().lo() <= leb.bounds().hi());
    CHECK(leb.bounds().lo() <= dr.upper_integral.bounds().hi());
  }
}
