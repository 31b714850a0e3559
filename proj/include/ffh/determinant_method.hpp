#pragma once

// The determinant method over F_q[t]: characteristic regimes, the quantities
// beta and b(f), vanishing matrices and their p-adic divisibility, the
// auxiliary polynomial search, bound shapes, good hyperplanes, the
// large-coefficient construction and projection of space curves.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffh/height.hpp"
#include "ffh/multipoly.hpp"
#include "ffh/polymatrix.hpp"

namespace ffh {

enum class Regime { Small, Large, VeryLarge };
std::string to_string(Regime r);

struct CharRegime {
  Regime tag = Regime::Small;
  std::uint64_t c = 0;
  int d = 0;
  double eps = 0;
};

// small iff c <= d(d-1); very-large iff c^(1-eps) > 27 d^4; large otherwise.
// PreconditionError unless c is prime and d >= 1.
CharRegime classify_regime(std::uint64_t c, int d, double eps);

// [a, b, c]: a in small, b in large and c in very-large characteristic.
struct RegimeTriple {
  Rational a, b, c;
};
Rational select(const RegimeTriple& t, Regime r);

// floor((14/3) log_q d), or 0 in very-large characteristic. Exact: the largest
// k with q^(3k) <= d^14.
int beta(std::uint64_t q, int d, Regime r);

// Primes of degree <= cap modulo which f is not absolutely irreducible, in
// prime order. f must be primitive and certified absolutely irreducible by a
// prime of degree <= limits().prime_degree_cap; BudgetError when a residue
// field extended to degree d exceeds the field budget.
std::vector<PrimeElement> bad_primes(const MultiPoly& f, int cap);

// sum of deg p / q^(deg p) over the given bad primes with beta < deg p <= cap
// (every listed prime with deg p <= cap when beta is 0 in very-large
// characteristic). This is log_q of b(f) truncated at cap.
Rational b_truncated(const std::vector<PrimeElement>& bad, int cap, int beta);
Rational b_truncated(const MultiPoly& f, int cap, Regime r);

// Rows indexed by points, columns by monomial_basis(D, nvars); entry b(x).
PolyMatrix vanishing_matrix(const std::vector<ProjectivePoint>& points, int D);

struct ValuationReport {
  int s = 0;
  int residue_classes = 0;     // distinct projective points modulo p
  int oracle = 0;              // s - residue_classes
  std::optional<int> actual;   // v_p of the s x s determinantal divisor; empty when it is zero
  bool holds = false;
};
// Raises ConsistencyError when the valuation falls below the oracle.
// PreconditionError when s exceeds the number of degree-D monomials.
ValuationReport valuation_check(const std::vector<ProjectivePoint>& points, const PrimeElement& p, int D);

struct BoundParams {
  std::uint64_t q = 2;
  int d = 1;
  int n = 1;           // dimension of the hypersurface; ambient dimension for thm3
  int ell = 1;
  double eps = 0;
  double C = 1;        // stands in for the implicit constant
  Regime regime = Regime::Small;
  double thm3_exponent = 1;  // the unspecified d-exponent of the dimension growth bound
  int beta = 0;
  double b_f = 1;      // b(f), truncated
  double norm_f = 1;   // ||f||
};

enum class BoundKind { Thm1, Thm2, Thm3General, Thm3Strong, MainThm };
std::string to_string(BoundKind k);
// ParseError on an unknown name.
BoundKind parse_bound_kind(const std::string& s);

// Evaluates a bound shape with C in place of the implicit constant. Real
// exponents make the value irrational in general, hence a double.
double bound_value(const BoundParams& params, BoundKind which);

struct MRecord {
  int M = 0;
  int rank = 0;
  int target = 0;  // |B(M)| - |B(M - d)|
};

struct AuxOptions {
  int cap_M = 40;
  EnumerationOptions enumeration;
  std::optional<BoundParams> bound;  // when set, the main-thm comparison is filled in
};

struct AuxResult {
  MultiPoly g;
  int M = 0;
  int t_degree = 0;                  // max coefficient degree of the transformed witness
  std::vector<ProjectivePoint> points;
  std::vector<RingElement> alpha;    // leading transform
  std::vector<MRecord> ranks;        // one per M tried; earlier ones certify minimality
  bool vanishing_verified = false;
  bool not_divisible_verified = false;
  // N(f; ell) <= d * deg g, meaningful for plane curves.
  bool bezout_holds = false;
  std::optional<double> bound;       // main-thm value
  std::optional<double> ratio;       // M / bound
};

// The least M for which a degree-M form vanishing on all points of f of height
// < ell and not divisible by f exists, together with such a form of minimal
// coefficient degree. PreconditionError when f is not homogeneous, primitive
// and irreducible (naming a factor when one is found); ConsistencyError when no
// witness exists up to cap_M.
AuxResult auxiliary_poly(const MultiPoly& f, int ell, const AuxOptions& opt = {});

struct LargeCoeffResult {
  std::optional<MultiPoly> g;  // degree <= d, vanishing on the points, coprime to f
  std::uint64_t theta = 0;     // number of monomials of degree <= d
  int rank = 0;
  std::uint64_t points = 0;
  int log_norm_f = 0;
  std::uint64_t coefficient_bound = 0;  // ell d theta
  bool inequality_holds = false;        // log_q ||f|| <= ell d theta
};

// Vanishing polynomials of degree <= d built from Cramer subdeterminants of
// the evaluation matrix at the affine points of f of height < ell. When every
// such polynomial is a multiple of f, the inequality log_q ||f|| <= ell d theta
// is certified instead (ConsistencyError if it fails).
LargeCoeffResult large_coeff_vanishing_poly(const MultiPoly& f, int ell, int d);

struct GoodHyperplane {
  std::vector<RingElement> a;
  MultiPoly slice;  // primitive, one variable fewer
  PrimeElement certificate;
  std::uint64_t candidates_tried = 0;
};

// f restricted to sum a_i x_i = 0: with j the last index where a_j != 0,
// x_i -> a_j x_i for i != j, x_j -> -sum_{i != j} a_i x_i, x_j dropped.
MultiPoly hyperplane_slice(const MultiPoly& f, const std::vector<RingElement>& a);

// First a (projectively normalised, deg a_i <= cap, ordered by height, then
// support size, then reversed coordinates) whose slice keeps degree d and is
// certified absolutely irreducible. BudgetError "search exhausted" otherwise.
GoodHyperplane good_hyperplane(const MultiPoly& f, int cap);

struct ProjectionReport {
  std::vector<AffinePoint> plane;  // projected samples, dependent coordinate dropped
  int dropped = 0;
  bool heights_ok = false;         // h(pi(x)) <= h(x) + 2 h(p) for every sample
  int kernel_dim_d = 0;            // plane curves of degree <= d through the samples
  int kernel_dim_below = 0;        // ... of degree <= d - 1
};

// pi(x) = (p.x) p - (p.p) x. PreconditionError when p.p = 0 or p is not primitive.
ProjectionReport project_curve(const std::vector<AffinePoint>& samples, const std::vector<RingElement>& p, int d);

}  // namespace ffh
