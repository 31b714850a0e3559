#pragma once

// Slow, independent reference computations. Each one reaches its answer by a
// different route from the library code it is compared against.

#include <cstdint>
#include <set>
#include <vector>

#include "ffh/height.hpp"
#include "ffh/multipoly.hpp"
#include "ffh/polymatrix.hpp"

namespace ffh::oracle {

// (1/n) sum_{k | n} mu(k) q^(n/k), with mu by trial factorisation.
std::uint64_t mobius_prime_count(std::uint64_t q, int n);

// Number of monic irreducibles of degree n by sieving out all products of
// lower-degree monic polynomials.
std::uint64_t sieve_prime_count(const Field& f, int n);

// Laplace expansion along the first row.
RingElement cofactor_determinant(const PolyMatrix& A);

// Rank over F_q(t) by Gaussian elimination over F_q(t) with fractions kept
// as (numerator, denominator) pairs.
int fraction_rank(const PolyMatrix& A);

// Smallest k such that A x = 0 has a nonzero solution with every deg x_i <= k,
// found by solving the linearised system over F_q for k = 0, 1, ..., max_k.
// -1 when none exists up to max_k.
int min_kernel_degree(const PolyMatrix& A, int max_k);

// Points by trying every tuple and evaluating f term by term.
std::uint64_t brute_affine_count(const MultiPoly& f, int ell);
std::set<std::vector<RingElement>> brute_projective_points(const MultiPoly& f, int ell);

// Affine points of the cone of a homogeneous f over all nvars coordinates,
// excluding the origin.
std::uint64_t brute_cone_count(const MultiPoly& f, int ell);

// Number of distinct points of P^(n-1)(F_q[t]/p) among the reductions.
int residue_classes(const std::vector<ProjectivePoint>& points, const PrimeElement& p);

// Irreducible over F_Q and over every extension of degree 2..deg g, by the
// exhaustive divisor search.
bool absolutely_irreducible_exhaustive(const ResiduePoly& g);

}  // namespace ffh::oracle
