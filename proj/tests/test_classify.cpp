#include <catch_amalgamated.hpp>

#include <cmath>

#include "gft/classify.hpp"
#include "gft/sampling.hpp"

using namespace gft;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("ClassParams validation") {
  CHECK_NOTHROW(ClassParams::make(1, 1.0, 1.0, 0.0, 0.0));
  CHECK_THROWS_AS(ClassParams::make(0, 1.0, 1.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(ClassParams::make(1, 0.0, 1.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(ClassParams::make(1, 0.4, 0.5, 0.0, 0.0), Error);
  CHECK_THROWS_AS(ClassParams::make(1, 1.0, 1.0, 0.0, 1.0), Error);
  CHECK_THROWS_AS(ClassParams::make(1, 1.0, 1.0, -0.1, 0.0), Error);
  CHECK_THROWS_AS(ClassParams::make(1, 1.0, 0.5, 0.0, 0.5), Error);
  CHECK_THROWS_AS(ClassParams::make(1, 1.0, 1.0, 1.0, 0.0), Error);
  CHECK_NOTHROW(ClassParams::make(1, 1.0, 1.0, 1.0, 0.0, DeltaRange::closed));
  try {
    ClassParams::make(1, 1.0, 0.5, 0.0, 0.6);
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::domain);
    CHECK(e.field() == "gamma");
  }
}

TEST_CASE("coefficient_functional examples") {
  const ClassParams p = ClassParams::make(1, 1.0, 1.0, 1.0, 0.0, DeltaRange::closed);
  CHECK(coefficient_functional(GapSeries::identity(1), p) == 0.0);
  CHECK(coefficient_functional(GapSeries::monomial(1, 2, 0.25), p) == 0.5);
  CHECK_THROWS_AS(coefficient_functional(GapSeries::identity(2), p), Error);
}

TEST_CASE("extremal attains equality") {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    const ClassParams p = random_class_params(rng);
    CHECK_THAT(coefficient_functional(extremal(p), p), WithinAbs(1.0 - p.gamma(), 1e-12));
    const Membership m = is_member(extremal(p), p);
    CHECK(m.member);
    CHECK_THAT(m.margin, WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("is_member examples") {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const ClassParams p = random_class_params(rng);
    const Membership id = is_member(GapSeries::identity(p.k()), p);
    CHECK(id.member);
    CHECK(id.margin == 1.0 - p.gamma());

    const GapSeries inflated = GapSeries::monomial(p.k(), p.k() + 1, 1.01 * extremal_coefficient(p));
    const Membership over = is_member(inflated, p);
    CHECK_FALSE(over.member);
    CHECK_THAT(over.functional, WithinRel(1.01 * (1.0 - p.gamma()), 1e-12));
  }
}

TEST_CASE("extremal examples") {
  const ClassParams silverman = ClassParams::make(1, 1.0, 1.0, 1.0, 0.0, DeltaRange::closed);
  CHECK(extremal(silverman) == GapSeries::monomial(1, 2, 0.5));

  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const double t = rng.uniform(0.05, 1.0);
    const int k = rng.integer(1, 8);
    const double delta = rng.uniform(), gamma = rng.uniform(0.0, 0.99);
    const ClassParams p = ClassParams::make(k, t, t, delta, gamma);
    CHECK_THAT(extremal_coefficient(p), WithinRel((1.0 - gamma) / (1.0 + delta * k), 1e-15));
  }

  const ClassParams near_one = ClassParams::make(2, 0.9, 0.6, 0.3, 0.999 - 0.3);
  const ClassParams half = ClassParams::make(2, 0.9, 0.6, 0.3, 0.0);
  CHECK_THAT(extremal_coefficient(near_one) / extremal_coefficient(half), WithinRel(1.0 - (0.999 - 0.3), 1e-12));
}

TEST_CASE("max_coefficient examples") {
  const ClassParams plain = ClassParams::make(1, 1.0, 1.0, 0.0, 0.0);
  CHECK(max_coefficient(plain, 5) == 1.0);
  const ClassParams full = ClassParams::make(1, 1.0, 1.0, 1.0, 0.0, DeltaRange::closed);
  CHECK_THAT(max_coefficient(full, 5), WithinRel(0.2, 1e-15));
  CHECK_THROWS_AS(max_coefficient(full, 1), Error);

  Rng rng(44);
  for (int i = 0; i < 200; ++i) {
    const ClassParams p = random_class_params(rng);
    CHECK(max_coefficient(p, p.k() + 1) == extremal_coefficient(p));
    const int nu = p.k() + 1 + rng.integer(0, 50);
    const Membership m = is_member(GapSeries::monomial(p.k(), nu, max_coefficient(p, nu)), p);
    CHECK(m.member);
    CHECK_THAT(m.margin, WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("reduction identities") {
  Rng rng(45);
  for (int i = 0; i < 100; ++i) {
    const int k = rng.integer(1, 5);
    const double delta = rng.uniform();
    const ClassParams p = ClassParams::make(k, 1.0, 1.0, delta, 0.0, DeltaRange::closed);
    const GapSeries f = random_member(p, rng);
    double expected = 0.0;
    for (const auto& [nu, a] : f.coefficients()) expected += (1.0 + delta * nu - delta) * a;
    CHECK(coefficient_functional(f, p) == expected);

    const ClassParams s = ClassParams::make(1, 1.0, 1.0, 1.0, 0.0, DeltaRange::closed);
    const GapSeries g = random_member(s, rng);
    double weighted = 0.0;
    for (const auto& [nu, a] : g.coefficients()) weighted += nu * a;
    CHECK(coefficient_functional(g, s) == weighted);
  }
}

TEST_CASE("random members are members") {
  Rng rng(46);
  for (int i = 0; i < 1000; ++i) {
    const ClassParams p = random_class_params(rng);
    CHECK(is_member(random_member(p, rng), p).member);
  }
}
