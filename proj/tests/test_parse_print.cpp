#include <doctest.h>

#include "pseudoflat/scenes.hpp"
#include "test_util.hpp"

using namespace pseudoflat;
using testutil::F;
using testutil::P;
using testutil::S;
using testutil::X;

namespace {

const std::vector<std::string> xy = {"x", "y"};
const std::vector<std::string> xyz = {"x", "y", "z"};

int error_line(const ParseError& e) { return e.pos.line; }
int error_col(const ParseError& e) { return e.pos.col; }

}  // namespace

TEST_SUITE("parse_print") {
  TEST_CASE("polynomial expressions") {
    Polynomial p = parse_polynomial("3/2*x^2*y - z + 1", xyz);
    Polynomial expected(3);
    expected.add_term({2, 1, 0}, Rational(3, 2));
    expected.add_term({0, 0, 1}, Rational(-1));
    expected.add_term({0, 0, 0}, Rational(1));
    CHECK(p == expected);
    CHECK(parse_polynomial("(x + y)*(x - y)", xy) == parse_polynomial("x^2 - y^2", xy));
    CHECK(parse_polynomial("x/2", xy) == parse_polynomial("1/2*x", xy));
    CHECK(parse_polynomial("0", xy).is_zero());
  }

  TEST_CASE("form expressions") {
    CHECK(parse_form("x^2*dx^dy + dz^dx", xyz).degree() == 2);
    CHECK(parse_form("x^2*dx^dy + dz^dx", xyz) ==
          parse_form("x^2*dx^dy - dx^dz", xyz));
    CHECK(parse_form("dx^dx", xy, 2).is_zero());
    CHECK(parse_form("(x + 1)*dx", xy) == parse_form("x*dx + dx", xy));
    CHECK(parse_form("-dx", xy) == -ScalarForm::basis(2, 0));
    CHECK(parse_form("0", xy, 2) == ScalarForm(2, 2));
    CHECK(parse_form("x*y^2", xy).degree() == 0);
  }

  TEST_CASE("expression diagnostics carry positions") {
    try {
      parse_form("x + ", xy);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(error_line(e) == 1);
      CHECK(error_col(e) == 5);
    }
    CHECK_THROWS_AS(parse_form("w + 1", xy), ParseError);       // undeclared variable
    CHECK_THROWS_AS(parse_form("1 + dx", xy), ParseError);      // mixed degrees
    CHECK_THROWS_AS(parse_form("dx^2 + dx", xy), ParseError);   // 2-form plus 1-form
    CHECK_THROWS_AS(parse_form("x/(y)", xy), ParseError);       // non-constant divisor
    CHECK_THROWS_AS(parse_polynomial("dx", xy), ParseError);    // wrong degree
  }

  TEST_CASE("field expressions") {
    CHECK(parse_field("d/dx", xy) == VectorField::coordinate(2, 0));
    CHECK(parse_field("x*d/dy + y^2*d/dx", xy) ==
          VectorField({parse_polynomial("y^2", xy), parse_polynomial("x", xy)}));
    CHECK(parse_field("-d/dx", xy) == -VectorField::coordinate(2, 0));
    CHECK(parse_field("d/dx/2", xy) == VectorField::coordinate(2, 0).scaled(P("1/2", 2)));
    CHECK_THROWS_AS(parse_field("x + y", xy), ParseError);
    CHECK_THROWS_AS(parse_field("d/dw", xy), ParseError);
  }

  TEST_CASE("section expressions") {
    CHECK(parse_section("x*e1 + e2", xy, 2) ==
          BundleForm({ScalarForm::from_polynomial(P("x", 2)),
                      ScalarForm::from_polynomial(P("1", 2))}));
    CHECK(parse_section("[x, 1]", xy, 2) == parse_section("x*e1 + e2", xy, 2));
    CHECK(parse_section("0", xy, 2).is_zero());
    CHECK_THROWS_AS(parse_section("e3", xy, 2), ParseError);
    CHECK_THROWS_AS(parse_section("x + 1", xy, 2), ParseError);
  }

  TEST_CASE("empty scene fails at one-one") {
    try {
      parse_scene("");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(error_line(e) == 1);
      CHECK(error_col(e) == 1);
    }
    CHECK_THROWS_AS(parse_scene("  \n# only comments\n"), ParseError);
  }

  TEST_CASE("single-entry scene accepts mixed-term connection forms") {
    Scene scene = parse_scene("vars x y\nrank 1\nP = [[1]]\nA = [[dx + x*dy]]\n");
    CHECK(scene.dim() == 2);
    CHECK(scene.source_rank == 1);
    CHECK(scene.connection_forms[0][0] == parse_form("dx + x*dy", xy));
  }

  TEST_CASE("scene diagnostics") {
    CHECK_THROWS_AS(parse_scene("vars x y\nrank 1\nP = [[1]]\nA = [[x]]\n"), ParseError);
    CHECK_THROWS_AS(parse_scene("vars x y\nrank 2\nP = [[1]]\nA = [[0,0],[0,0]]\n"), ParseError);
    CHECK_THROWS_AS(parse_scene("vars x y\nrank 1\nP = [[w]]\nA = [[0]]\n"), ParseError);
    CHECK_THROWS_AS(parse_scene("vars x x\nrank 1\nP = [[1]]\nA = [[0]]\n"), ParseError);
    CHECK_THROWS_AS(parse_scene("vars d x\nrank 1\nP = [[1]]\nA = [[0]]\n"), ParseError);
    CHECK_THROWS_AS(parse_scene("vars x dx\nrank 1\nP = [[1]]\nA = [[0]]\n"), ParseError);
    CHECK_THROWS_AS(parse_scene("vars x\nrank 0\nP = [[1]]\nA = [[0]]\n"), ParseError);
    CHECK_THROWS_AS(parse_scene("bogus x\n"), ParseError);
    CHECK_THROWS_AS(parse_scene("vars x\nrank 1\nP = [[1]]\nA = [[0]]\nsection x = e1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_scene("vars x\nrank 1\nP = [[1]]\nA = [[0]]\nfield dx = d/dx\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_scene("vars x\nrank 1\nP = [[1]]\nA = [[0]]\nsection e1 = e1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_scene("vars x\nrank 1\nP = [[1]]\n"), ParseError);  // missing A
    try {
      parse_scene("vars x y\nrank 1\nP = [[1]]\nA = [[w*dx]]\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(error_line(e) == 4);
    }
  }

  TEST_CASE("the built-in scenes parse to the documented operators") {
    Scene prop5 = parse_scene(find_builtin_scene("prop5_counterexample")->text);
    CHECK(prop5.dim() == 3);
    CHECK(prop5.source_rank == 2);
    CHECK(prop5.principal.is_zero());
    CHECK(prop5.connection_forms[0][0] == F("dx", 3));
    CHECK(prop5.connection_forms[0][1] == F("dy", 3));
    CHECK(prop5.connection_forms[1][0] == F("dz", 3));
    CHECK(prop5.connection_forms[1][1] == F("dx", 3));
    CHECK(prop5.sections.count("s1") == 1);
    CHECK(prop5.fields.count("X") == 1);

    Scene flat = parse_scene(find_builtin_scene("ordinary_flat")->text);
    CHECK(flat.principal == BundleHom::identity(2, 3));

    Scene xdy = parse_scene(find_builtin_scene("ordinary_xdy")->text);
    CHECK(xdy.dim() == 3);
    CHECK(xdy.connection_forms[0][0] == F("x*dy", 3));
  }

  TEST_CASE("scenes can declare non-square operators") {
    Scene scene = parse_scene("vars x\nrank 2 1\nP = [[1],[x]]\nA = [[dx],[0]]\n");
    CHECK(scene.target_rank == 2);
    CHECK(scene.source_rank == 1);
    CHECK_FALSE(scene.is_square());
    CHECK_NOTHROW(scene.make_operator());
  }

  TEST_CASE("named sections and fields resolve in later expressions") {
    Scene scene = parse_scene(
        "vars x y\nrank 2\nP = [[1,0],[0,1]]\nA = [[0,0],[0,0]]\n"
        "section base = e1 + y*e2\nsection doubled = 2*base\nfield V = x*d/dx\nfield W = 2*V\n");
    CHECK(scene.sections.at("doubled") == S("2*e1 + 2*y*e2", 2, 2));
    CHECK(scene.fields.at("W") == X("2*x*d/dx", 2));
  }

  TEST_CASE("printing round-trips through the parser") {
    Rng rng(113);
    for (int t = 0; t < 200; ++t) {
      std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 3));
      auto names = default_var_names(n);
      Polynomial p = rng.polynomial(n, 3, 4);
      CHECK(parse_polynomial(to_string(p, names), names) == p);

      std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n)));
      ScalarForm f = rng.scalar_form(n, k, 2, 3);
      CHECK(parse_form(to_string(f, names), names, k) == f);

      std::size_t rank = static_cast<std::size_t>(rng.uniform_int(1, 3));
      BundleForm b = rng.bundle_form(rank, k, n, 2);
      CHECK(parse_bundle_form(to_string(b, names), names, rank, k) == b);

      VectorField v = rng.vector_field(n, 2);
      CHECK(parse_field(to_string(v, names), names) == v);
    }
  }

  TEST_CASE("zero forms print as a bare zero") {
    CHECK(to_string(ScalarForm(3, 2), xyz) == "0");
    CHECK(to_string(BundleForm(2, 2, 3), xyz) == "[0, 0]");
    CHECK(to_string(F("dx^dy", 3), xyz) == "dx^dy");
    CHECK(to_string(BundleForm::generator(F("dx^dy", 3), 2, 0), xyz) == "[dx^dy, 0]");
  }
}
