#include <doctest.h>

#include <cmath>

#include "ffh/determinant_method.hpp"
#include "ffh/error.hpp"
#include "ffh/monomial.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "random_gen.hpp"

using namespace ffh;
using ffh::test::P;
using ffh::test::R;

TEST_CASE("characteristic regimes") {
  CHECK(classify_regime(2, 3, 0.1).tag == Regime::Small);
  CHECK(classify_regime(7, 2, 0.1).tag == Regime::Large);
  CHECK(classify_regime(1000003, 2, 0.1).tag == Regime::VeryLarge);
  CHECK(to_string(Regime::VeryLarge) == "very-large");
  CHECK_THROWS_AS(classify_regime(4, 2, 0.1), PreconditionError);
}

TEST_CASE("beta") {
  CHECK(beta(2, 2, Regime::Small) == 4);
  CHECK(beta(3, 2, Regime::Large) == 2);
  CHECK(beta(5, 2, Regime::VeryLarge) == 0);
  CHECK(beta(2, 1, Regime::Small) == 0);
  // 2^(3*9) = 2^27 <= 3^14 < 2^30
  CHECK(beta(2, 3, Regime::Small) == 7);
}

TEST_CASE("bad primes") {
  const Field F3 = Field::make(3);
  const MultiPoly f = P("x0^2 + x1^2 + t*x2^2", F3);
  const auto bad = bad_primes(f, 2);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].value() == R("t", F3));
  CHECK(bad_primes(f, 0).empty());
  CHECK(bad_primes(P("x0*x2 - x1^2", F3), 2).empty());
  CHECK(b_truncated(f, 3, Regime::Large) == Rational(0));
  CHECK(b_truncated(bad, 2, 0) == Rational(1, 3));
  CHECK(b_truncated({}, 5, 2) == Rational(0));

  const Field F2 = Field::make(2);
  CHECK(b_truncated({PrimeElement(R("t^3+t+1", F2))}, 3, 2) == Rational(3, 8));
  CHECK_THROWS_AS(bad_primes(P("t*x0^2 + t*x1^2 + t*x2^2", F3), 1), PreconditionError);
}

TEST_CASE("vanishing matrices") {
  const Field F2 = Field::make(2);
  const RingElement z(F2), one = R("1", F2);
  const std::vector<ProjectivePoint> p1{ProjectivePoint::canonicalize({z, one}), ProjectivePoint::canonicalize({one, z}),
                                        ProjectivePoint::canonicalize({one, one})};
  const PolyMatrix A = vanishing_matrix(p1, 1);
  CHECK(A.rows() == 3);
  CHECK(A.cols() == 2);
  CHECK(A.max_degree() == 0);
  const PolyMatrix B = vanishing_matrix({ProjectivePoint::canonicalize({one, z, z})}, 3);
  CHECK(B.rows() == 1);
  CHECK(B.cols() == 10);
  int nonzero = 0;
  for (int j = 0; j < B.cols(); ++j) nonzero += B(0, j).is_zero() ? 0 : 1;
  CHECK(nonzero == 1);

  app::Rng rng(47);
  for (int i = 0; i < 20; ++i) {
    const int ell = 1 + static_cast<int>(rng.below(3)), D = 1 + static_cast<int>(rng.below(3));
    std::vector<ProjectivePoint> pts;
    for (int k = 0; k < 3; ++k) pts.push_back(ProjectivePoint::canonicalize({one, rng.element(F2, ell), rng.element(F2, ell)}));
    CHECK(vanishing_matrix(pts, D).max_degree() <= D * (ell - 1));
  }
}

TEST_CASE("valuation of the determinantal divisor") {
  const Field F2 = Field::make(2);
  const RingElement z(F2), one = R("1", F2), t = R("t", F2);
  const PrimeElement p(t);
  const ValuationReport a = valuation_check({ProjectivePoint::canonicalize({one, z}), ProjectivePoint::canonicalize({one, t})}, p, 1);
  CHECK(a.s == 2);
  CHECK(a.residue_classes == 1);
  CHECK(a.oracle == 1);
  REQUIRE(a.actual.has_value());
  CHECK(*a.actual == 1);
  CHECK(a.holds);

  const ValuationReport b = valuation_check({ProjectivePoint::canonicalize({one, z}), ProjectivePoint::canonicalize({z, one})}, p, 1);
  CHECK(b.oracle == 0);
  CHECK(b.holds);

  app::Rng rng(53);
  for (int i = 0; i < 40; ++i) {
    std::vector<ProjectivePoint> pts;
    for (int k = 0; k < 3; ++k) pts.push_back(ProjectivePoint::canonicalize({one, rng.element(F2, 3), rng.element(F2, 3)}));
    const ValuationReport r = valuation_check(pts, p, 1);
    CHECK(r.residue_classes == oracle::residue_classes(pts, p));
    CHECK(r.holds);
  }
}

TEST_CASE("bound shapes") {
  BoundParams P2;
  P2.q = 2;
  P2.d = 2;
  P2.n = 1;
  P2.ell = 1;
  P2.eps = 0;
  P2.beta = 4;
  CHECK(bound_value(P2, BoundKind::Thm1) == doctest::Approx(512));
  CHECK(bound_value(P2, BoundKind::Thm2) == doctest::Approx(768));
  CHECK(parse_bound_kind("main-thm") == BoundKind::MainThm);
  CHECK_THROWS_AS(parse_bound_kind("thm9"), ParseError);

  // Monotone in ell and C.
  BoundParams Q = P2;
  Q.ell = 3;
  CHECK(bound_value(Q, BoundKind::MainThm) > bound_value(P2, BoundKind::MainThm));
  BoundParams Q2 = Q;
  Q2.C = 2;
  CHECK(bound_value(Q2, BoundKind::Thm3General) == doctest::Approx(2 * bound_value(Q, BoundKind::Thm3General)));
}

TEST_CASE("auxiliary polynomial on the conic") {
  const Field F2 = Field::make(2);
  const MultiPoly f = P("x0*x2 - x1^2", F2);
  const AuxResult a = auxiliary_poly(f, 1);
  CHECK(a.M == 2);
  CHECK(a.points.size() == 3);
  CHECK(a.vanishing_verified);
  CHECK(a.not_divisible_verified);
  CHECK(a.bezout_holds);
  for (const auto& p : a.points) CHECK(evaluate(a.g, p.coords()).is_zero());
  CHECK_FALSE(divide_exact(a.g, f).has_value());
  REQUIRE(a.ranks.size() == 2);
  CHECK(a.ranks[0].rank == a.ranks[0].target);
  CHECK(a.ranks[1].rank < a.ranks[1].target);
}

TEST_CASE("auxiliary polynomial without points") {
  const Field F2 = Field::make(2);
  const AuxResult a = auxiliary_poly(P("x0^2 + x0*x1 + x1^2", F2), 1);
  CHECK(a.points.empty());
  CHECK(a.M == 1);
  CHECK(a.g.degree() == 1);
}

TEST_CASE("auxiliary polynomial preconditions") {
  const Field F2 = Field::make(2);
  CHECK_THROWS_WITH_AS(auxiliary_poly(P("x0^2 + x1^2", F2, 3), 1), doctest::Contains("x0 + x1"), PreconditionError);
  CHECK_THROWS_AS(auxiliary_poly(P("x0^2 + x1", F2), 1), PreconditionError);
  CHECK_THROWS_AS(auxiliary_poly(P("t*x0*x2 + t*x1^2", F2), 1), PreconditionError);
}

TEST_CASE("large coefficient vanishing polynomials") {
  const Field F2 = Field::make(2);
  const MultiPoly f = P("x1*x2 - 1", F2);
  const LargeCoeffResult r = large_coeff_vanishing_poly(f, 1, 2);
  CHECK(r.theta == 6);
  CHECK(r.points == 1);
  CHECK(r.inequality_holds);
  REQUIRE(r.g.has_value());
  CHECK(r.g->degree() <= 2);
  CHECK(evaluate(*r.g, {RingElement(F2), R("1", F2), R("1", F2)}).is_zero());
  CHECK_FALSE(divide_exact(*r.g, f).has_value());

  const Field F3 = Field::make(3);
  const LargeCoeffResult s = large_coeff_vanishing_poly(P("x1*x2 - 1", F3), 2, 2);
  REQUIRE(s.g.has_value());
  CHECK(s.points == 2);
  for (const auto& p : enumerate_affine(P("x1*x2 - 1", F3), 2, {true, 1}).points) {
    CHECK(evaluate(*s.g, {RingElement(F3), p.x[0], p.x[1]}).is_zero());
  }
}

TEST_CASE("hyperplane sections") {
  const Field F3 = Field::make(3);
  const MultiPoly f = P("x0^2 + x1^2 + t*x2^2 + (t+1)*x3^2", F3);
  const GoodHyperplane h = good_hyperplane(f, 1);
  const RingElement z(F3), one = R("1", F3);
  CHECK(h.a == std::vector<RingElement>{z, z, z, one});
  CHECK(h.slice == P("x0^2 + x1^2 + t*x2^2", F3));
  CHECK(hyperplane_slice(f, {z, z, z, one}) == h.slice);

  const Field F2 = Field::make(2);
  CHECK_THROWS_WITH_AS(good_hyperplane(P("x0*x1", F2, 4), 0), doctest::Contains("exhausted"), BudgetError);
  CHECK_THROWS_AS(good_hyperplane(P("x0*x1 + x2^2", F2), 0), PreconditionError);
}

TEST_CASE("projection of the twisted cubic") {
  const Field F5 = Field::make(5);
  std::vector<AffinePoint> samples;
  for (const auto& l : elements_below(F5, 2)) samples.push_back({{l, l * l, l * l * l}});
  const RingElement one = R("1", F5);
  const ProjectionReport r = project_curve(samples, {one, one, one}, 3);
  CHECK(r.heights_ok);
  CHECK(r.kernel_dim_d == 1);
  CHECK(r.kernel_dim_below == 0);
  CHECK(r.plane.size() == samples.size());

  const RingElement z(F5);
  const ProjectionReport e = project_curve({{{R("2", F5), R("t", F5), R("t+1", F5)}}}, {one, z, z}, 1);
  CHECK(e.dropped == 0);
  CHECK(e.plane[0].x == std::vector<RingElement>{-R("t", F5), -R("t+1", F5)});
  CHECK(e.heights_ok);
  CHECK_THROWS_AS(project_curve(samples, {one, R("2", F5), z}, 3), PreconditionError);
}
