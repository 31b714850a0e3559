#include <doctest.h>

#include "ffh/error.hpp"
#include "ffh/polymatrix.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "random_gen.hpp"

using namespace ffh;
using ffh::test::Mat;
using ffh::test::R;

TEST_CASE("determinant") {
  const Field F3 = Field::make(3);
  CHECK(determinant(Mat("t,1;1,t", F3)) == R("t^2 - 1", F3));
  CHECK(determinant(PolyMatrix::identity(F3, 4)).is_one());
  CHECK(determinant(Mat("t,t+1;2*t,2*t+2", F3)).is_zero());
  CHECK_THROWS_AS(determinant(Mat("1,t", F3)), PreconditionError);
}

TEST_CASE("Hermite form") {
  const Field F2 = Field::make(2);
  const PolyMatrix A = Mat("t^2,t", F2);
  const HermiteResult h = hermite_form(A);
  CHECK(h.H == Mat("t,0", F2));
  CHECK(A * h.U == h.H);
  const PolyMatrix D = Mat("t,0;0,t+1", F2);
  CHECK(hermite_form(D).H == D);

  app::Rng rng(19);
  for (int i = 0; i < 30; ++i) {
    const PolyMatrix B = rng.matrix(F2, 3, 3, 3);
    const HermiteResult r = hermite_form(B);
    CHECK(B * r.U == r.H);
    CHECK(determinant(r.U).degree() == 0);
  }
}

TEST_CASE("determinantal divisors") {
  const Field F2 = Field::make(2);
  const PolyMatrix A = Mat("t,0;0,t+1", F2);
  CHECK(determinantal_divisor(A, 1).is_one());
  CHECK(determinantal_divisor(A, 2) == R("t^2+t", F2));
  CHECK(determinantal_divisor(PolyMatrix::identity(F2, 3), 2).is_one());
  const PolyMatrix B = Mat("t,t;t,t", F2);
  CHECK(determinantal_divisor(B, 2).is_zero());
  CHECK(determinantal_divisor(B, 1) == R("t", F2));

  app::Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    const PolyMatrix C = rng.matrix(F2, 2, 4, 2);
    for (int s = 1; s <= 2; ++s) CHECK(determinantal_divisor(C, s) == determinantal_divisor_by_minors(C, s));
  }
}

TEST_CASE("Smith invariants divide each other") {
  const Field F3 = Field::make(3);
  app::Rng rng(29);
  for (int i = 0; i < 15; ++i) {
    const PolyMatrix A = rng.matrix(F3, 3, 3, 2);
    const auto inv = smith_invariants(A);
    for (std::size_t k = 1; k < inv.size(); ++k) {
      if (!inv[k].is_zero()) CHECK((inv[k] % inv[k - 1]).is_zero());
    }
  }
}

TEST_CASE("kernel bases") {
  const Field F2 = Field::make(2);
  const auto a = kernel_basis(Mat("1,t", F2));
  REQUIRE(a.size() == 1);
  CHECK(a[0] == PolyVector{R("t", F2), R("1", F2)});
  CHECK(kernel_basis(PolyMatrix::identity(F2, 3)).empty());
  const auto b = kernel_basis(Mat("t^2,t", F2));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == PolyVector{R("1", F2), R("t", F2)});
}

TEST_CASE("minimal kernel vectors") {
  const Field F2 = Field::make(2);
  const PolyVector x = minimal_kernel_vector(Mat("t^2,t", F2));
  CHECK(x == PolyVector{R("1", F2), R("t", F2)});
  CHECK(max_degree(minimal_kernel_vector(Mat("1,1", F2))) == 0);
  CHECK(max_degree(minimal_kernel_vector(Mat("t,t^2+1,t^2+t+1", F2))) == oracle::min_kernel_degree(Mat("t,t^2+1,t^2+t+1", F2), 4));

  app::Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    const PolyMatrix A = rng.matrix(F2, 2, 4, 3);
    const PolyVector v = minimal_kernel_vector(A);
    CHECK(is_zero_vector(A * v));
    CHECK(max_degree(v) == oracle::min_kernel_degree(A, 8));
  }
}

TEST_CASE("Thue-Siegel solver") {
  const Field F2 = Field::make(2);
  const ThueSiegelResult a = thue_siegel_solve(Mat("1,t", F2));
  CHECK(a.x == PolyVector{R("t", F2), R("1", F2)});
  CHECK(a.certificate.bound == Rational(1));
  CHECK(a.certificate.within_bound);

  const ThueSiegelResult b = thue_siegel_solve(Mat("1,1", F2));
  CHECK(max_degree(b.x) == 0);
  CHECK(b.certificate.bound == Rational(0));

  const ThueSiegelResult c = thue_siegel_solve(Mat("t,t", F2));
  CHECK(c.certificate.deg_D == 1);
  CHECK(c.certificate.bound == Rational(0));
  CHECK(c.x == PolyVector{R("1", F2), R("1", F2)});

  CHECK_THROWS_AS(thue_siegel_solve(Mat("t,t;1,1", F2)), PreconditionError);
}

TEST_CASE("rank agrees with elimination over fractions") {
  app::Rng rng(37);
  for (const Field& F : {Field::make(2), Field::make(3)}) {
    for (int i = 0; i < 30; ++i) {
      PolyMatrix A = rng.matrix(F, 3, 4, 2);
      if (i % 3 == 0) {
        for (int j = 0; j < 4; ++j) A(2, j) = A(0, j) * R("t+1", F) + A(1, j);
      }
      CHECK(rank(A) == oracle::fraction_rank(A));
      CHECK(rank(A, oracle::fraction_rank(A)) == oracle::fraction_rank(A));
    }
  }
}
