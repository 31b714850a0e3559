#include <doctest.h>

#include "ffh/error.hpp"
#include "ffh/factor.hpp"
#include "ffh/monomial.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "random_gen.hpp"

using namespace ffh;
using ffh::test::P;
using ffh::test::R;

namespace {

ResiduePoly residue(const char* text, const Field& F, int nvars = 0) {
  return reduce_mod_prime(P(text, F, nvars), PrimeElement(R("t", F)));
}

}  // namespace

TEST_CASE("norms of polynomials") {
  const Field F2 = Field::make(2);
  CHECK(max_norm(P("t^2*x1 + 1", F2)) == 4);
  CHECK(max_norm(P("x1 + x2 + 1", F2)) == 1);
  CHECK(max_norm(P("(t+1)*x1^2 + t^3", F2)) == 8);
  CHECK(log_norm(P("(t+1)*x1^2 + t^3", F2)) == 3);
}

TEST_CASE("content and primitive part") {
  const Field F2 = Field::make(2);
  const ContentSplit a = content_primitive(P("t*x1 + t^2", F2));
  CHECK(a.content == R("t", F2));
  CHECK(a.primitive == P("x1 + t", F2));
  const ContentSplit b = content_primitive(P("x1 + t", F2));
  CHECK(b.content.is_one());
  const ContentSplit c = content_primitive(P("(t^2+t)*x1*x2", F2));
  CHECK(c.content == R("t^2+t", F2));
  CHECK(c.primitive == P("x1*x2", F2));
  CHECK(is_primitive(P("x1 + t", F2)));
  CHECK_FALSE(is_primitive(P("t*x1 + t^2", F2)));
}

TEST_CASE("graded parts and homogenization") {
  const Field F2 = Field::make(2);
  const MultiPoly f = P("x1*x2 + 1", F2);
  CHECK(graded_part(f, 2) == P("x1*x2", F2));
  CHECK(graded_part(f, 0) == P("1", F2, 3));
  CHECK(graded_part(P("x1^2 + x2^2", F2), 2) == P("x1^2 + x2^2", F2));

  const MultiPoly g = P("x1^2 + t", F2);
  const MultiPoly h = homogenize(g, 0);
  CHECK(h == P("t*x0^2 + x1^2", F2));
  CHECK(dehomogenize(h, 0) == g);
  CHECK(homogenize(P("t+1", F2, 2), 0) == P("t+1", F2, 2));
  CHECK(homogenize(f, 0) == P("x0^2 + x1*x2", F2));
}

TEST_CASE("shifting a form") {
  const Field F2 = Field::make(2);
  const MultiPoly f = P("x1^2", F2);
  CHECK(shift_homogeneous(f, {RingElement(F2), RingElement(F2)}) == f);
  CHECK(shift_homogeneous(f, {RingElement(F2), R("t", F2)}) == P("x1^2 + t^2*x0^2", F2));

  app::Rng rng(3);
  const Field F3 = Field::make(3);
  for (int i = 0; i < 50; ++i) {
    const MultiPoly g = rng.form(F3, 3, 1 + static_cast<int>(rng.below(3)), 2, 60);
    const std::vector<RingElement> alpha{RingElement(F3), rng.element(F3, 2), rng.element(F3, 2)};
    const std::vector<RingElement> back{RingElement(F3), -alpha[1], -alpha[2]};
    CHECK(shift_homogeneous(shift_homogeneous(g, alpha), back) == g);
  }
}

TEST_CASE("evaluation") {
  const Field F3 = Field::make(3);
  const MultiPoly f = P("x1*x2 - 1", F3);
  const RingElement t = R("t", F3);
  CHECK(evaluate(f, {RingElement(F3), t, t}) == R("t^2 - 1", F3));
  CHECK(evaluate(f, {RingElement(F3), RingElement(F3), RingElement(F3)}) == R("2", F3));

  app::Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const int d = 1 + static_cast<int>(rng.below(3));
    const MultiPoly g = rng.form(F3, 3, d, 2, 70);
    const RingElement lambda = rng.element(F3, 3);
    std::vector<RingElement> x{rng.element(F3, 2), rng.element(F3, 2), rng.element(F3, 2)};
    std::vector<RingElement> lx;
    for (const auto& c : x) lx.push_back(lambda * c);
    CHECK(evaluate(g, lx) == lambda.pow(static_cast<std::uint64_t>(d)) * evaluate(g, x));
  }
}

TEST_CASE("reduction modulo a prime") {
  const Field F2 = Field::make(2);
  CHECK(to_string(residue("x0^2 + t*x0 + 1", F2)) == "x0^2 + 1");
  const MultiPoly f = P("x0^2 + (t+1)*x1", F2), g = P("t*x0 + x1^2 + 1", F2);
  const PrimeElement p(R("t^2+t+1", F2));
  CHECK(reduce_mod_prime(f * g, p) == reduce_mod_prime(f, p) * reduce_mod_prime(g, p));
  CHECK_FALSE(reduce_mod_prime(P("t*x0 + 1", F2), PrimeElement(R("t+1", F2))).is_zero());
  CHECK(reduce_mod_prime(P("t*x0 + t^2", F2), PrimeElement(R("t", F2))).is_zero());
}

TEST_CASE("factorization over the residue field") {
  const Field F2 = Field::make(2);
  const Factorization a = factor_bruteforce(residue("x0^2 + 1", F2));
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].multiplicity == 2);
  CHECK(to_string(a.factors[0].poly) == "x0 + 1");

  const Field F3 = Field::make(3);
  CHECK(is_irreducible(residue("x0^2 + x1^2 + 1", F3)));
  const Factorization b = factor_bruteforce(residue("x0*x1", F2));
  CHECK(b.factors.size() == 2);
  CHECK(b.product() == residue("x0*x1", F2));
}

TEST_CASE("absolute irreducibility") {
  const Field F2 = Field::make(2), F3 = Field::make(3);
  CHECK_FALSE(is_absolutely_irreducible(residue("x0^2 + x1^2", F3)));
  CHECK(is_irreducible(residue("x0^2 + x1^2", F3)));
  CHECK(is_absolutely_irreducible(residue("x0^2 + x1^2 + x2^2", F3)));
  CHECK_FALSE(is_absolutely_irreducible(residue("x0^2", F2)));
  CHECK(oracle::absolutely_irreducible_exhaustive(residue("x0^2 + x1^2 + x2^2", F3)));
  CHECK_FALSE(oracle::absolutely_irreducible_exhaustive(residue("x0^2 + x1^2", F3)));
}

TEST_CASE("irreducibility over F_q(t)") {
  const Field F3 = Field::make(3);
  const IrreducibilityVerdict v = irreducibility_over_fqt(P("x0^2 + x1^2 + t*x2^2", F3), 4);
  CHECK(v.irreducible);
  CHECK(v.certificate.has_value());
  const Field F2 = Field::make(2);
  const IrreducibilityVerdict w = irreducibility_over_fqt(P("x0^2 + x1^2", F2), 4);
  CHECK_FALSE(w.irreducible);
  REQUIRE(w.factor.has_value());
  CHECK(*w.factor == P("x0 + x1", F2));
  CHECK(absolute_irreducibility_certificate(P("x0*x2 + x1^2", F2), 3).has_value());
}

TEST_CASE("leading transform") {
  const Field F2 = Field::make(2);
  const MultiPoly f = P("x0^3", F2, 3);
  const LeadingTransform a = leading_transform(f);
  CHECK(a.alpha[1].is_zero());
  CHECK(a.alpha[2].is_zero());
  CHECK(a.transformed == f);

  const MultiPoly g = P("t*x0^2 + t*x0*x1 + t*x1^2", F2);
  const LeadingTransform b = leading_transform(g);
  CHECK(b.alpha[1].is_zero());
  CHECK(b.lead_degree == 1);
  CHECK(b.lead_degree >= log_norm(g));

  app::Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    const int d = 1 + static_cast<int>(rng.below(3));
    const MultiPoly h = rng.form(F2, 3, d, 3, 60);
    if (h.is_zero()) continue;
    const LeadingTransform lt = leading_transform(h);
    CHECK(evaluate(h, {R("1", F2), lt.alpha[1], lt.alpha[2]}).degree() >= log_norm(h));
    for (const auto& a_i : lt.alpha) CHECK(norm_and_degree(a_i).norm <= static_cast<std::uint64_t>(d));
    CHECK(norm_within_factor(2, log_norm(lt.transformed), log_norm(h), d));
  }
}

TEST_CASE("twisted homogenization") {
  const Field F2 = Field::make(2);
  const MultiPoly f = P("x1*x2 + 1", F2);
  CHECK(twist(f, R("t", F2)) == P("t^2*x1*x2 + x0^2", F2));
  CHECK(twist(f, R("1", F2)) == homogenize(f, 0));
  const RingElement H = R("t^2+1", F2);
  app::Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const std::vector<RingElement> x{RingElement(F2), rng.element(F2, 3), rng.element(F2, 3)};
    CHECK(evaluate(twist(f, H), {H, x[1], x[2]}) == H.pow(2) * evaluate(f, x));
  }
}

TEST_CASE("monomial bases") {
  CHECK(monomial_basis(2, 3).size() == 6);
  CHECK(monomial_basis(0, 3).size() == 1);
  CHECK(monomial_basis(1, 4).size() == 4);
  CHECK(monomials_up_to(2, 3).size() == 10);
  CHECK(binomial(5, 2) == 10);
}
