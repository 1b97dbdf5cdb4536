#include <doctest.h>

#include <random>

#include "fnspect/envelopes.hpp"
#include "fnspect/errors.hpp"
#include "support/fixtures.hpp"
#include "support/model_gen.hpp"
#include "support/oracles.hpp"

using namespace fnspect;

TEST_CASE("two-sided limits at the canonical fixtures") {
  FunctionModel h = fixtures::heaviside();
  auto [hsup, hinf] = two_sided_limits(h, Rational(0));
  CHECK(hsup == Rational(1));
  CHECK(hinf == Rational(0));

  FunctionModel sq = fixtures::square(Rational(-1), Rational(1));
  auto [ssup, sinf] = two_sided_limits(sq, Rational(0));
  CHECK(ssup == Rational(0));
  CHECK(sinf == Rational(0));

  FunctionModel d = fixtures::dirichlet();
  auto [dsup, dinf] = two_sided_limits(d, Rational(1, 2));
  CHECK(dsup == Rational(1));
  CHECK(dinf == Rational(0));
}

TEST_CASE("one-sided limits, including UNDEFINED at domain endpoints") {
  FunctionModel h = fixtures::heaviside();
  auto left = one_sided_limits(h, Rational(0), Side::Left);
  REQUIRE(left.has_value());
  CHECK(left->first == Rational(0));
  CHECK(left->second == Rational(0));
  auto right = one_sided_limits(h, Rational(0), Side::Right);
  REQUIRE(right.has_value());
  CHECK(right->first == Rational(1));
  CHECK(right->second == Rational(1));

  CHECK_FALSE(one_sided_limits(h, Rational(-1), Side::Left).has_value());
  CHECK_FALSE(one_sided_limits(h, Rational(1), Side::Right).has_value());
  CHECK(one_sided_limits(h, Rational(-1), Side::Right).has_value());

  FunctionModel sq = fixtures::square(Rational(-1), Rational(1));
  auto sql = one_sided_limits(sq, Rational(0), Side::Left);
  REQUIRE(sql.has_value());
  CHECK(sql->first == Rational(0));
  CHECK(sql->second == Rational(0));

  FunctionModel d = fixtures::dirichlet();
  auto dl = one_sided_limits(d, Rational(1, 2), Side::Left);
  REQUIRE(dl.has_value());
  CHECK(dl->first == Rational(1));
  CHECK(dl->second == Rational(0));
}

TEST_CASE("pointwise classification at the fixtures") {
  FunctionModel h = fixtures::heaviside();
  PointClass hc = classify_point(h, Rational(0));
  CHECK(hc.is_usc);
  CHECK_FALSE(hc.is_lsc);
  CHECK_FALSE(hc.is_left_cont);
  CHECK(hc.is_right_cont);
  CHECK_FALSE(hc.is_cont);

  PointClass sc = classify_point(fixtures::square(Rational(-1), Rational(1)),
                                 Rational(0));
  CHECK(sc.is_usc);
  CHECK(sc.is_lsc);
  CHECK(sc.is_left_cont);
  CHECK(sc.is_right_cont);
  CHECK(sc.is_cont);

  PointClass dc = classify_point(fixtures::dirichlet(), Rational(1, 2));
  CHECK(dc.is_usc);
  CHECK_FALSE(dc.is_lsc);
  CHECK_FALSE(dc.is_left_cont);
  CHECK_FALSE(dc.is_right_cont);
  CHECK_FALSE(dc.is_cont);

  // Domain endpoints: the empty side is vacuously continuous.
  PointClass he = classify_point(h, Rational(-1));
  CHECK(he.is_left_cont);
  CHECK(he.is_right_cont);
  CHECK(he.is_cont);
}

TEST_CASE("envelope tables tabulate oscillations") {
  FunctionModel h = fixtures::heaviside();
  auto rows = envelope_table(h, {Rational(-1, 2), Rational(0), Rational(1, 2)});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].second.oscillation == Rational(0));
  CHECK(rows[1].second.oscillation == Rational(1));
  CHECK(rows[2].second.oscillation == Rational(0));

  auto sq_rows = envelope_table(fixtures::square(Rational(0), Rational(1)),
                                {Rational(0), Rational(1, 2), Rational(1)});
  for (const auto& [x, ev] : sq_rows) CHECK(ev.oscillation == Rational(0));

  FunctionModel d = fixtures::dirichlet();
  auto d_rows = envelope_table(
      d, {Rational(0), Rational(1, 5), Rational(1, 2), Rational(2, 3), Rational(1)});
  for (const auto& [x, ev] : d_rows) CHECK(ev.oscillation == Rational(1));

  CHECK_THROWS_AS(envelope_table(h, {Rational(0), Rational(7)}), DomainError);
  try {
    envelope_table(h, {Rational(0), Rational(7)});
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
}

TEST_CASE("exceptional points at the fixtures") {
  ExceptionReport h_cont =
      exceptional_points(fixtures::heaviside(), PointProperty::Cont);
  REQUIRE(h_cont.point_failures.size() == 1);
  CHECK(h_cont.point_failures[0] == Rational(0));
  CHECK_FALSE(h_cont.dense.has_value());

  FunctionModel c5 = fixtures::constant(Rational(5), Rational(0), Rational(1));
  for (PointProperty prop :
       {PointProperty::Usc, PointProperty::Lsc, PointProperty::LeftCont,
        PointProperty::RightCont, PointProperty::Cont}) {
    CHECK(exceptional_points(c5, prop).empty());
  }

  ExceptionReport d_lsc =
      exceptional_points(fixtures::dirichlet(), PointProperty::Lsc);
  CHECK(d_lsc.point_failures.empty());
  REQUIRE(d_lsc.dense.has_value());
  CHECK(d_lsc.dense->tag == DenseTag::Rationals);
  // Every modified (rational) point fails lsc; unmodified points do not.
  CHECK(d_lsc.dense->on_modified.measure() == Rational(1));
  CHECK(d_lsc.dense->on_unmodified.is_empty());

  ExceptionReport d_usc =
      exceptional_points(fixtures::dirichlet(), PointProperty::Usc);
  REQUIRE(d_usc.dense.has_value());
  CHECK(d_usc.dense->on_modified.is_empty());
  CHECK(d_usc.dense->on_unmodified.measure() == Rational(1));
}

TEST_CASE("envelope properties hold on the randomized corpus") {
  std::mt19937_64 rng(3001);
  for (int iter = 0; iter < 60; ++iter) {
    FunctionModel f = testgen::random_model(rng);
    FunctionModel neg = f.negated();
    std::vector<Rational> points = f.base().breakpoints;
    for (int j = 0; j < 8; ++j) points.push_back(testgen::random_domain_point(rng, f));

    for (const auto& x : points) {
      EnvelopeValues ev = envelope_values(f, x);
      // Sandwich.
      CHECK(ev.two_sided_inf <= ev.value);
      CHECK(ev.value <= ev.two_sided_sup);
      CHECK(ev.oscillation == ev.two_sided_sup - ev.two_sided_inf);
      CHECK(ev.oscillation >= Rational(0));

      // Duality against the negated model.
      auto [nsup, ninf] = two_sided_limits(neg, x);
      CHECK(ev.two_sided_sup == -ninf);
      CHECK(ev.two_sided_inf == -nsup);

      // Interior decomposition.
      if (f.domain_lo() < x && x < f.domain_hi()) {
        REQUIRE(ev.left_sup.has_value());
        REQUIRE(ev.right_sup.has_value());
        CHECK(ev.two_sided_sup == max(*ev.left_sup, max(ev.value, *ev.right_sup)));
        CHECK(ev.two_sided_inf == min(*ev.left_inf, min(ev.value, *ev.right_inf)));
      }

      // Classification coherence.
      PointClass pc = classify_point(f, x);
      CHECK(pc.is_cont == (pc.is_usc && pc.is_lsc));
      CHECK(pc.is_cont ==
            (ev.oscillation.is_zero() && ev.two_sided_sup == ev.value));
      if (pc.is_cont && f.domain_lo() < x && x < f.domain_hi()) {
        CHECK(pc.is_left_cont);
        CHECK(pc.is_right_cont);
      }
    }
  }
}

TEST_CASE("shrinking-window sampling converges to the exact envelopes") {
  std::mt19937_64 rng(3002);
  const Rational bound(1, 1 << 10);
  for (int iter = 0; iter < 8; ++iter) {
    FunctionModel f = testgen::random_model(rng, 5, 6);
    for (const auto& bp : f.base().breakpoints) {
      auto [exact_sup, exact_inf] = two_sided_limits(f, bp);
      auto [est_sup, est_inf] =
          oracles::sampled_two_sided(f, bp, Rational(1, 1 << 20), 1000);
      // A fixed-eps window sup may overshoot the limit f* (and the sampled
      // max may undershoot it); only the distance is bounded.
      CHECK((exact_sup - est_sup).abs() <= bound);
      CHECK((exact_inf - est_inf).abs() <= bound);
    }
  }
}
