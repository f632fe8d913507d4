#include <doctest.h>

#include "test_util.hpp"

using namespace pseudoflat;
using testutil::BF;
using testutil::F;
using testutil::P;
using testutil::S;
using testutil::X;

namespace {

ODerivOperator ordinary(std::size_t rank, std::size_t dim,
                        std::vector<std::vector<ScalarForm>> a) {
  return ODerivOperator(BundleHom::identity(rank, dim), std::move(a));
}

ODerivOperator ordinary_flat(std::size_t rank, std::size_t dim) {
  return ordinary(rank, dim,
                  std::vector<std::vector<ScalarForm>>(
                      rank, std::vector<ScalarForm>(rank, ScalarForm(dim, 1))));
}

// rank 1 on the (x, y) chart with connection form x dy
ODerivOperator xdy_rank1() {
  return ordinary(1, 2, {{F("x*dy", 2)}});
}

// Independent expansion of d_nabla(omega ⊗ s) used as an oracle against the
// member implementation: d omega ⊗ P(s) + (-1)^k omega ∧ nabla(s).
BundleForm d_nabla_oracle(const ODerivOperator& op, const ScalarForm& omega,
                          const BundleForm& s) {
  BundleForm head = wedge_alpha(omega.d(), op.principal(), s);
  BundleForm tail = scalar_wedge(omega, op.nabla(s));
  return omega.degree() % 2 == 0 ? head + tail : head - tail;
}

}  // namespace

TEST_SUITE("operator") {
  TEST_CASE("construction validates shapes and degrees") {
    CHECK_THROWS_AS(ODerivOperator(BundleHom::identity(2, 2),
                                   {{ScalarForm(2, 1)}, {ScalarForm(2, 1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ODerivOperator(BundleHom::identity(1, 2), {{F("x", 2)}}),
                    std::invalid_argument);  // degree-0 entry in A
    CHECK_THROWS_AS(ODerivOperator(BundleHom::identity(1, 2), {{F("dx^dy", 2)}}),
                    std::invalid_argument);
    CHECK_NOTHROW(ODerivOperator(BundleHom::identity(1, 2), {{F("dx + x*dy", 2)}}));
  }

  TEST_CASE("nabla on the worked examples") {
    ODerivOperator flat1 = ordinary_flat(1, 1);
    CHECK(flat1.nabla(S("x^2*e1", 1, 1)) == BF("[2*x*dx]", 1, 1, 1));
    CHECK(flat1.nabla(S("0", 1, 1)).is_zero());

    ODerivOperator prop5 = prop5_counterexample();
    CHECK(prop5.nabla(S("e1", 3, 2)) == BF("[dx, dz]", 3, 2, 1));
    CHECK(prop5.nabla(S("e2", 3, 2)) == BF("[dy, dx]", 3, 2, 1));
  }

  TEST_CASE("zero principal homomorphism makes nabla linear over functions") {
    ODerivOperator prop5 = prop5_counterexample();
    Rng rng(43);
    for (int t = 0; t < 50; ++t) {
      Polynomial f = rng.polynomial(3, 2);
      BundleForm s = rng.section(2, 3, 2);
      CHECK(prop5.nabla(s.scaled(f)) == prop5.nabla(s).scaled(f));
    }
  }

  TEST_CASE("d_nabla reduces to nabla in degree zero") {
    Rng rng(47);
    for (int t = 0; t < 50; ++t) {
      ODerivOperator op = rng.pseudoconnection(3, 2, 2);
      BundleForm s = rng.section(2, 3, 2);
      CHECK(op.d_nabla(s) == op.nabla(s));
    }
  }

  TEST_CASE("ordinary flat connection differentiates componentwise") {
    ODerivOperator flat = ordinary_flat(2, 3);
    Rng rng(53);
    for (int t = 0; t < 50; ++t) {
      BundleForm u = rng.bundle_form(2, static_cast<std::size_t>(rng.uniform_int(0, 2)), 3, 2);
      BundleForm expected({u.component(0).d(), u.component(1).d()});
      CHECK(flat.d_nabla(u) == expected);
    }
  }

  TEST_CASE("d_nabla matches the generator expansion") {
    Rng rng(59);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 3));
      ODerivOperator op = rng.deriv_operator(n, static_cast<std::size_t>(rng.uniform_int(1, 3)),
                                             static_cast<std::size_t>(rng.uniform_int(1, 3)), 2);
      std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, 2));
      ScalarForm omega = rng.scalar_form(n, k, 2);
      BundleForm s = rng.section(op.source_rank(), n, 2);
      CHECK(op.d_nabla(scalar_wedge(omega, s)) == d_nabla_oracle(op, omega, s));
    }
  }

  TEST_CASE("graded product rule for d_nabla") {
    Rng rng(61);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = 3;
      ODerivOperator op = rng.deriv_operator(n, 2, 2, 2);
      std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, 2));
      std::size_t l = static_cast<std::size_t>(rng.uniform_int(0, 2));
      ScalarForm omega = rng.scalar_form(n, k, 2);
      BundleForm u = rng.bundle_form(2, l, n, 2);
      BundleForm rhs = wedge_alpha(omega.d(), op.principal(), u);
      BundleForm tail = scalar_wedge(omega, op.d_nabla(u));
      rhs = k % 2 == 0 ? rhs + tail : rhs - tail;
      CHECK(op.d_nabla(scalar_wedge(omega, u)) == rhs);
    }
  }

  TEST_CASE("E map on the worked examples") {
    CHECK(ordinary_flat(2, 3).map_E(S("e1", 3, 2)).is_zero());
    // rank 1, A = x dy: E(e1) = d(x dy) - x dy ∧ x dy = dx^dy
    CHECK(xdy_rank1().map_E(S("e1", 2, 1)) == BF("[dx^dy]", 2, 1, 2));
    // zero principal part with constant A: E(e_i)_j = -sum_m A_mi ∧ A_jm
    ODerivOperator prop5 = prop5_counterexample();
    for (std::size_t i = 0; i < 2; ++i) {
      BundleForm expected(2, 2, 3);
      std::vector<ScalarForm> comps(2, ScalarForm(3, 2));
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t m = 0; m < 2; ++m)
          comps[j] -= wedge(prop5.connection_form(m, i), prop5.connection_form(j, m));
      CHECK(prop5.map_E(BundleForm::basis_section(2, 3, i)) == BundleForm(comps));
    }
    CHECK(prop5.map_E(S("e1", 3, 2)) == BF("[dy^dz, 0]", 3, 2, 2));
    CHECK(prop5.map_E(S("e2", 3, 2)) == BF("[0, -dy^dz]", 3, 2, 2));
  }

  TEST_CASE("L map vanishes for ordinary and tensorial operators") {
    CHECK(xdy_rank1().map_L(S("e1", 2, 1)).is_zero());
    CHECK(prop5_counterexample().map_L(S("x*e1 + e2", 3, 2)).is_zero());
    Rng rng(67);
    for (int t = 0; t < 100; ++t) {
      ODerivOperator op = rng.pseudoconnection(3, 2, 2);
      Polynomial f = rng.polynomial(3, 2);
      BundleForm s = rng.section(2, 3, 2);
      CHECK(op.map_L(s.scaled(f)) == op.map_L(s).scaled(f));
    }
  }

  TEST_CASE("F map on the worked examples") {
    CHECK(prop5_counterexample().map_F(S("e1", 3, 2)).is_zero());
    CHECK(prop5_counterexample().map_F(S("e2", 3, 2)).is_zero());
    CHECK(xdy_rank1().map_F(S("e1", 2, 1)) == BF("[dx^dy]", 2, 1, 2));
    Rng rng(71);
    for (int t = 0; t < 100; ++t) {
      ODerivOperator op = rng.pseudoconnection(3, 2, 2);
      Polynomial f = rng.polynomial(3, 2);
      BundleForm s = rng.section(2, 3, 2);
      CHECK(op.map_F(s.scaled(f)) == op.map_F(s).scaled(f));
    }
  }

  TEST_CASE("maps E, L, F, G satisfy the decomposition relations") {
    Rng rng(73);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 3));
      std::size_t r = static_cast<std::size_t>(rng.uniform_int(1, 3));
      ODerivOperator op = rng.pseudoconnection(n, r, 2);
      BundleForm s = rng.section(r, n, 2);
      CHECK(op.map_F(s) == op.principal().apply(op.map_E(s)) - op.d_nabla(op.map_L(s)));
      CHECK(op.map_G(s) == op.d_nabla(op.map_E(s)));
      Polynomial f = rng.polynomial(n, 2);
      ScalarForm df = ScalarForm::from_polynomial(f).d();
      CHECK(op.map_E(s.scaled(f)) == scalar_wedge(df, op.map_L(s)) + op.map_E(s).scaled(f));
      CHECK(op.map_G(s.scaled(f)) == scalar_wedge(df, op.map_F(s)) + op.map_G(s).scaled(f));
    }
  }

  TEST_CASE("G map reproduces the alternating triple-product closed form") {
    // For P = 0 and A = dx Φ1 + dy Φ2 + dz Φ3 with Φ1 = id and constant
    // matrices, expanding d_nabla twice over generators gives
    //   G(s) = -(dx^dy^dz) ⊗ (sum over permutations of sgn · Φ_p Φ_l Φ_m)(s),
    // and the permutation sum collapses to Φ3 Φ2 - Φ2 Φ3.
    Rng rng(79);
    const ScalarForm vol = F("dx^dy^dz", 3);
    for (int t = 0; t < 50; ++t) {
      BundleHom phi2 = rng.constant_hom(2);
      BundleHom phi3 = rng.constant_hom(2);
      ODerivOperator op = triple_form_operator(phi2, phi3);
      const BundleHom id = BundleHom::identity(2, 3);
      const BundleHom* phi[4] = {nullptr, &id, &phi2, &phi3};
      struct Perm { int m, l, p, sign; };
      const Perm perms[6] = {{1, 2, 3, +1}, {1, 3, 2, -1}, {2, 1, 3, -1},
                             {2, 3, 1, +1}, {3, 1, 2, +1}, {3, 2, 1, -1}};
      BundleHom sum = BundleHom::zero(2, 2, 3);
      for (const Perm& q : perms) {
        BundleHom prod = *phi[q.p] * *phi[q.l] * *phi[q.m];
        sum = q.sign > 0 ? sum + prod : sum - prod;
      }
      BundleForm s = rng.section(2, 3, 2);
      BundleForm expected = scalar_wedge(vol, sum.apply(s)).scaled(Rational(-1));
      CHECK(op.map_G(s) == expected);
      BundleHom commutator = phi3 * phi2 - phi2 * phi3;
      CHECK(op.map_G(s) == scalar_wedge(vol, commutator.apply(s)).scaled(Rational(-1)));
    }
  }

  TEST_CASE("G map on the fixed nilpotent pair") {
    ODerivOperator prop5 = prop5_counterexample();
    CHECK(prop5.map_G(S("e1", 3, 2)) == BF("[dx^dy^dz, 0]", 3, 2, 3));
    CHECK(prop5.map_G(S("e2", 3, 2)) == BF("[0, -dx^dy^dz]", 3, 2, 3));
    CHECK(ordinary_flat(2, 3).map_G(S("e1", 3, 2)).is_zero());
    // 3-forms vanish identically on a 2-dimensional chart
    CHECK(xdy_rank1().map_G(S("e1", 2, 1)).is_zero());
  }

  TEST_CASE("double and triple derivative identities") {
    ODerivOperator flat = ordinary_flat(2, 3);
    ODerivOperator prop5 = prop5_counterexample();
    Rng rng(83);
    for (int t = 0; t < 100; ++t) {
      std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, 2));
      ScalarForm omega = rng.scalar_form(3, k, 2);
      BundleForm s = rng.section(2, 3, 2);
      CHECK(d2_identity_check(flat, omega, s));
      CHECK(d3_identity_check(flat, omega, s));
      CHECK(d2_identity_check(prop5, omega, s));
      CHECK(d3_identity_check(prop5, omega, s));
      ODerivOperator op = rng.pseudoconnection(3, static_cast<std::size_t>(rng.uniform_int(1, 3)), 2);
      ScalarForm omega2 = rng.scalar_form(3, static_cast<std::size_t>(rng.uniform_int(0, 2)), 2);
      BundleForm s2 = rng.section(op.source_rank(), 3, 2);
      CHECK(d2_identity_check(op, omega2, s2));
      CHECK(d3_identity_check(op, omega2, s2));
    }
  }

  TEST_CASE("ordinary connections have F = E and L = 0") {
    Rng rng(107);
    for (int t = 0; t < 50; ++t) {
      std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 3));
      std::size_t r = static_cast<std::size_t>(rng.uniform_int(1, 3));
      ODerivOperator op = ordinary(r, n, rng.one_form_matrix(r, r, n, 2));
      BundleForm s = rng.section(r, n, 2);
      CHECK(op.map_L(s).is_zero());
      CHECK(op.map_F(s) == op.map_E(s));
    }
  }

  TEST_CASE("strong flatness implies weak flatness") {
    Rng rng(109);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 3));
      std::size_t r = static_cast<std::size_t>(rng.uniform_int(1, 3));
      FlatnessReport fl = rng.pseudoconnection(n, r, 2).classify_flatness();
      if (fl.strongly_flat) CHECK(fl.weakly_flat);
    }
    // and on a family where strong flatness is common
    for (int t = 0; t < 20; ++t) {
      BundleHom phi = rng.constant_hom(2);
      FlatnessReport fl = triple_form_operator(phi, phi * phi).classify_flatness();
      CHECK(fl.strongly_flat);
      CHECK(fl.weakly_flat);
    }
  }

  TEST_CASE("flatness classification of the built-in operators") {
    FlatnessReport flat = ordinary_flat(2, 3).classify_flatness();
    CHECK(flat.strongly_flat);
    CHECK(flat.weakly_flat);

    FlatnessReport prop5 = prop5_counterexample().classify_flatness();
    for (const auto& f : prop5.F_frame) CHECK(f.is_zero());
    for (const auto& l : prop5.L_frame) CHECK(l.is_zero());
    CHECK_FALSE(prop5.weakly_flat);
    CHECK_FALSE(prop5.strongly_flat);

    FlatnessReport xdy = xdy_rank1().classify_flatness();
    CHECK_FALSE(xdy.weakly_flat);
    CHECK_FALSE(xdy.strongly_flat);
  }

  TEST_CASE("direct chain checks agree with the classifier") {
    ChainCheckReport flat = chain_check_direct(ordinary_flat(2, 3), 2, 50, 1);
    CHECK(flat.d2_zero);
    CHECK(flat.d3_zero);

    ChainCheckReport prop5 = chain_check_direct(prop5_counterexample(), 2, 100, 2);
    CHECK_FALSE(prop5.d2_zero);
    REQUIRE(prop5.d2_witness.has_value());
    CHECK(prop5.d2_witness->output.degree() == prop5.d2_witness->input.degree() + 2);
    // not weakly flat, so the triple composition has a degree-0 witness
    CHECK_FALSE(prop5.d3_zero);
    REQUIRE(prop5.d3_witness.has_value());
    CHECK(prop5.d3_witness->input.degree() == 0);
  }

  TEST_CASE("weakly flat without being strongly flat") {
    // P = 0 with A = dx N + dy N' on a 2-variable chart: L and F vanish with
    // the principal part, G lands in the zero module of 3-forms, but
    // E(e1) = dx^dy ⊗ e1 obstructs the chain property.
    ScalarForm zero1(2, 1);
    std::vector<std::vector<ScalarForm>> a = {{zero1, F("dx", 2)}, {F("dy", 2), zero1}};
    ODerivOperator op(BundleHom::zero(2, 2, 2), a);
    CHECK(op.map_E(S("e1", 2, 2)) == BF("[dx^dy, 0]", 2, 2, 2));
    FlatnessReport fl = op.classify_flatness();
    CHECK(fl.weakly_flat);
    CHECK_FALSE(fl.strongly_flat);
    ChainCheckReport chain = chain_check_direct(op, 2, 50, 4);
    CHECK_FALSE(chain.d2_zero);
    CHECK(chain.d3_zero);
    REQUIRE(chain.d2_witness.has_value());
    CHECK(chain.d2_witness->input.degree() == 0);
  }

  TEST_CASE("triple compositions vanish for degree reasons on small charts") {
    // On a 2-dimensional chart every 3-form is zero, so d∘d∘d ≡ 0 even for
    // the curved rank-1 operator; the classifier still reports the nonzero
    // curvature. The flat/chain equivalence therefore needs dim >= 3.
    ODerivOperator op = xdy_rank1();
    CHECK_FALSE(op.classify_flatness().weakly_flat);
    ChainCheckReport chain = chain_check_direct(op, 2, 100, 3);
    CHECK(chain.d3_zero);
    CHECK_FALSE(chain.d2_zero);
  }

  TEST_CASE("covariant derivative along fields") {
    ODerivOperator flat1 = ordinary_flat(1, 2);
    CHECK(flat1.nabla_X(X("d/dx", 2), S("x*e1", 2, 1)) == S("e1", 2, 1));
    CHECK(flat1.nabla_X(X("d/dx", 2), S("0", 2, 1)).is_zero());

    ODerivOperator prop5 = prop5_counterexample();
    CHECK(prop5.nabla_X(X("d/dy", 3), S("e1", 3, 2)).is_zero());   // Φ2 e1 = 0
    CHECK(prop5.nabla_X(X("d/dy", 3), S("e2", 3, 2)) == S("e1", 3, 2));
    CHECK(prop5.nabla_X(X("d/dz", 3), S("e1", 3, 2)) == S("e2", 3, 2));
  }

  TEST_CASE("curvature evaluation on the worked example") {
    ODerivOperator op = xdy_rank1();
    VectorField dx = X("d/dx", 2), dy = X("d/dy", 2);
    BundleForm e1 = S("e1", 2, 1);
    CHECK(op.curvature_direct(dx, dy, e1) == e1);
    CHECK(op.curvature_formula(dx, dy, e1) == e1);
    CHECK(op.curvature_direct(dx, dx, e1).is_zero());
    CHECK(ordinary_flat(2, 3)
              .curvature_direct(X("d/dx", 3), X("d/dy", 3), S("e1", 3, 2))
              .is_zero());
    ODerivOperator zero_p = prop5_counterexample();
    Rng rng(89);
    for (int t = 0; t < 20; ++t) {
      VectorField u = rng.vector_field(3, 2), v = rng.vector_field(3, 2);
      BundleForm s = rng.section(2, 3, 2);
      CHECK(zero_p.curvature_direct(u, v, s).is_zero());
      CHECK(zero_p.curvature_formula(u, v, s).is_zero());
    }
  }

  TEST_CASE("both curvature paths agree on random instances") {
    Rng rng(97);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 3));
      std::size_t r = static_cast<std::size_t>(rng.uniform_int(1, 3));
      ODerivOperator op = rng.pseudoconnection(n, r, 2);
      VectorField u = rng.vector_field(n, 2), v = rng.vector_field(n, 2);
      BundleForm s = rng.section(r, n, 2);
      CHECK(op.curvature_direct(u, v, s) == op.curvature_formula(u, v, s));
    }
  }

  TEST_CASE("with identity principal part the formula is the classical one") {
    Rng rng(101);
    for (int t = 0; t < 100; ++t) {
      std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 3));
      std::size_t r = static_cast<std::size_t>(rng.uniform_int(1, 2));
      ODerivOperator op = ordinary(r, n, rng.one_form_matrix(r, r, n, 2));
      VectorField u = rng.vector_field(n, 2), v = rng.vector_field(n, 2);
      BundleForm s = rng.section(r, n, 2);
      BundleForm classical = op.nabla_X(u, op.nabla_X(v, s)) - op.nabla_X(v, op.nabla_X(u, s)) -
                             op.nabla_X(lie_bracket(u, v), s);
      CHECK(op.curvature_formula(u, v, s) == classical);
      CHECK(op.curvature_direct(u, v, s) == classical);
    }
  }

  TEST_CASE("non-square operators reject pseudoconnection-only maps") {
    Rng rng(103);
    ODerivOperator op = rng.deriv_operator(2, 2, 3, 2);
    BundleForm s = rng.section(2, 2, 2);
    CHECK_THROWS_AS(op.map_L(s), std::invalid_argument);
    CHECK_THROWS_AS(op.map_F(s), std::invalid_argument);
    CHECK_THROWS_AS(op.classify_flatness(), std::invalid_argument);
    CHECK_NOTHROW(op.nabla(s));
    CHECK_NOTHROW(op.d_nabla(rng.bundle_form(2, 1, 2, 2)));
  }

  TEST_CASE("rank mismatches are structural errors") {
    ODerivOperator prop5 = prop5_counterexample();
    CHECK_THROWS_AS(prop5.nabla(S("e1", 3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(prop5.nabla(BF("[dx, dx]", 3, 2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(prop5.nabla_X(X("d/dx", 2), S("e1", 3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(wedge_alpha(F("dx", 3), BundleHom::identity(3, 3), S("e1", 3, 2)),
                    std::invalid_argument);
  }
}
