#include <doctest.h>

#include "test_util.hpp"

using namespace pseudoflat;
using testutil::BF;
using testutil::F;
using testutil::P;
using testutil::S;
using testutil::X;

TEST_SUITE("bundle") {
  TEST_CASE("hom application") {
    BundleForm t = S("e2", 2, 2);  // n = 2, rank 2
    CHECK(BundleHom::identity(2, 2).apply(t) == t);
    CHECK(BundleHom::zero(2, 2, 2).apply(t).is_zero());
    BundleHom shift = BundleHom::constant(2, {{Rational(0), Rational(1)},
                                              {Rational(0), Rational(0)}});
    CHECK(shift.apply(t) == S("e1", 2, 2));
  }

  TEST_CASE("hom shape errors") {
    BundleForm t = S("e1", 2, 2);
    CHECK_THROWS_AS(BundleHom::identity(3, 2).apply(t), std::invalid_argument);
    CHECK_THROWS_AS(BundleHom::identity(2, 2) * BundleHom::identity(3, 2),
                    std::invalid_argument);
  }

  TEST_CASE("hom composition matches matrix product") {
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
      BundleHom a = rng.hom(2, 3, 2, 2), b = rng.hom(3, 2, 2, 2);
      BundleForm s = rng.bundle_form(2, 1, 2, 2);
      CHECK(a.apply(b.apply(s)) == (a * b).apply(s));
    }
  }

  TEST_CASE("twisted wedge on the worked examples") {
    BundleForm t = BF("[dy]", 3, 1, 1);
    CHECK(wedge_alpha(F("dx", 3), BundleHom::identity(1, 3), t) == BF("[dx^dy]", 3, 1, 2));
    CHECK(wedge_alpha(F("dx", 3), BundleHom::zero(1, 1, 3), t).is_zero());
    BundleForm s = S("e1 + y*e2", 3, 2);
    CHECK(wedge_alpha(F("x", 3), BundleHom::identity(2, 3), s) == s.scaled(P("x", 3)));
  }

  TEST_CASE("plain module product") {
    BundleForm t = BF("[dx]", 2, 1, 1);
    CHECK(scalar_wedge(F("1", 2), t) == t);
    CHECK(scalar_wedge(F("dx", 2), t).is_zero());
    CHECK(scalar_wedge(F("dx", 2), BF("[dy]", 2, 1, 1)) == BF("[dx^dy]", 2, 1, 2));
    Rng rng(29);
    for (int trial = 0; trial < 50; ++trial) {
      ScalarForm beta = rng.scalar_form(3, 1, 2);
      BundleForm u = rng.bundle_form(2, 1, 3, 2);
      CHECK(scalar_wedge(beta, u) == wedge_alpha(beta, BundleHom::identity(2, 3), u));
    }
  }

  TEST_CASE("evaluation of bundle forms") {
    const VectorField xy[] = {X("d/dx", 2), X("d/dy", 2)};
    CHECK(BF("[dx^dy, 0]", 2, 2, 2).evaluate(xy) == S("e1", 2, 2));
    const VectorField xs[] = {X("d/dx", 2)};
    CHECK(BF("[dy]", 2, 1, 1).evaluate(xs).is_zero());
    const VectorField none[] = {X("d/dx", 2)};
    CHECK_THROWS_AS(BF("[dx^dy]", 2, 1, 2).evaluate(none), std::invalid_argument);
  }

  TEST_CASE("evaluation commutes with homs") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
      std::size_t r1 = static_cast<std::size_t>(rng.uniform_int(1, 3));
      std::size_t r2 = static_cast<std::size_t>(rng.uniform_int(1, 3));
      BundleHom alpha = rng.hom(r2, r1, 3, 2);
      BundleForm u = rng.bundle_form(r1, 2, 3, 2);
      std::vector<VectorField> fields = {rng.vector_field(3, 2), rng.vector_field(3, 2)};
      CHECK(alpha.apply(u).evaluate(fields) == alpha.apply(u.evaluate(fields)));
    }
  }

  TEST_CASE("hom action is linear over functions") {
    Rng rng(37);
    for (int t = 0; t < 100; ++t) {
      BundleHom alpha = rng.hom(2, 2, 2, 2);
      BundleForm u = rng.bundle_form(2, 1, 2, 2);
      Polynomial f = rng.polynomial(2, 2);
      CHECK(alpha.apply(u.scaled(f)) == alpha.apply(u).scaled(f));
      CHECK(alpha.apply(u + u) == alpha.apply(u) + alpha.apply(u));
    }
  }

  TEST_CASE("bundle form components must agree in shape") {
    CHECK_THROWS_AS(BundleForm({ScalarForm(2, 1), ScalarForm(2, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(BundleForm({ScalarForm(2, 1), ScalarForm(3, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(scalar_wedge(F("dx", 2), BF("[dy]", 3, 1, 1)), std::invalid_argument);
  }
}
