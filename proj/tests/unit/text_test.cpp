#include <doctest.h>

#include "ffh/error.hpp"
#include "helpers.hpp"
#include "random_gen.hpp"

using namespace ffh;
using ffh::test::P;

TEST_CASE("parsing polynomials") {
  const Field F2 = Field::make(2);
  const MultiPoly f = P("(t^2+1)*x0^3 + t*x1*x2^2", F2);
  CHECK(f.nvars() == 3);
  CHECK(f.degree() == 3);
  CHECK(f.is_homogeneous());
  CHECK(max_norm(f) == 4);

  const MultiPoly x0 = P("x0", F2);
  CHECK(x0 == MultiPoly::variable(F2, 1, 0));
  CHECK(P("x0", F2, 3).nvars() == 3);
  CHECK(P("-x1 + 2*x1", Field::make(3)) == P("x1", Field::make(3)));
  CHECK(P("(x0 + x1)^2", F2) == P("x0^2 + x1^2", F2));
  CHECK(P("u*x0", Field::make(2, 2)).degree() == 1);
}

TEST_CASE("parse errors") {
  const Field F2 = Field::make(2);
  CHECK_THROWS_WITH_AS(P("x0 + y", F2), "unknown variable 'y' at position 5", ParseError);
  CHECK_THROWS_WITH_AS(P("3*x0", F2), doctest::Contains("not in field"), ParseError);
  CHECK_THROWS_AS(P("x0 +", F2), ParseError);
  CHECK_THROWS_AS(P("(x0", F2), ParseError);
  CHECK_THROWS_AS(P("u*x0", F2), ParseError);
  CHECK_THROWS_AS(P("x1", F2, 1), ParseError);
}

TEST_CASE("printing round trips") {
  const Field F2 = Field::make(2);
  CHECK(to_string(P("(t^2+1)*x0^3 + t*x1*x2^2", F2)) == "(t^2+1)*x0^3 + t*x1*x2^2");
  CHECK(to_string(P("0", F2)) == "0");
  app::Rng rng(59);
  for (const Field& F : {Field::make(2), Field::make(3), Field::make(2, 2), Field::make(3, 2)}) {
    for (int i = 0; i < 40; ++i) {
      const MultiPoly f = rng.poly(F, 4, 3, 3, 30);
      const std::string s = to_string(f);
      CHECK(to_string(P(s.c_str(), F, 4)) == s);
      CHECK(P(s.c_str(), F, 4) == f);
    }
  }
}

TEST_CASE("parsing matrices") {
  const Field F3 = Field::make(3);
  const PolyMatrix A = parse_matrix("t, 1; 2, t^2 + t", F3);
  CHECK(A.rows() == 2);
  CHECK(A.cols() == 2);
  CHECK(A(1, 1) == parse_ring_element("t^2+t", F3));
  CHECK_THROWS_AS(parse_matrix("t, 1; 2", F3), ParseError);
}
