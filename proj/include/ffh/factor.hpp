#pragma once

// Factorization and (absolute) irreducibility by direct search.
//
// Over a finite field F_Q, a nonzero polynomial g is factored by searching
// monic divisors of increasing total degree. Linear divisors are found by
// solving the root conditions on their coefficients (exact and complete);
// higher-degree divisors by exhaustive enumeration under the configured
// candidate budget. The Exhaustive strategy enumerates linear divisors too and
// exists so the two routes can be compared.

#include <optional>
#include <vector>

#include "ffh/multipoly.hpp"

namespace ffh {

enum class FactorStrategy { Auto, Exhaustive };

struct Factor {
  ResiduePoly poly;  // monic, irreducible over the coefficient field
  int multiplicity = 1;
};

struct Factorization {
  FieldElement unit;
  std::vector<Factor> factors;  // sorted by degree, then candidate order

  ResiduePoly product() const;
};

// Complete factorization over the coefficient field of g.
Factorization factor_bruteforce(const ResiduePoly& g, FactorStrategy strategy = FactorStrategy::Auto);

// Least (in candidate order) monic homogeneous divisor of total degree k of a
// homogeneous g, or nullopt. Candidate order: leading monomial position in
// the grlex basis, then the remaining coefficient indices lexicographically.
std::optional<ResiduePoly> find_divisor(const ResiduePoly& g, int k,
                                        FactorStrategy strategy = FactorStrategy::Auto);

bool is_irreducible(const ResiduePoly& g, FactorStrategy strategy = FactorStrategy::Auto);

// True iff g is irreducible over F_Q and over F_{Q^r} for every r dividing
// deg g. Constants are not absolutely irreducible; repeated factors make g
// not absolutely irreducible.
bool is_absolutely_irreducible(const ResiduePoly& g, FactorStrategy strategy = FactorStrategy::Auto);

// Largest r such that the field of g extended to degree r stays within the
// configured field budget.
int max_extension_degree(const Field& f);

// --- Over F_q[t] ------------------------------------------------------------

struct IrreducibilityVerdict {
  bool irreducible = false;
  std::optional<MultiPoly> factor;         // nontrivial divisor when reducible
  std::optional<PrimeElement> certificate;  // prime with irreducible reduction
};

// Decides irreducibility of a nonzero f over F_q(t) (and, for primitive f,
// over F_q[t]). A nonconstant content is reported as the factor. Irreducible
// verdicts are certified by a prime of degree <= prime_cap (among the first 32
// primes) modulo which f keeps its degree and stays irreducible; otherwise divisors with coefficient
// t-degree <= deg_t f are searched exhaustively.
IrreducibilityVerdict irreducibility_over_fqt(const MultiPoly& f, int prime_cap);

// A prime of degree <= cap modulo which f keeps its total degree and becomes
// absolutely irreducible; its existence proves f absolutely irreducible. Primes
// whose residue field (extended to degree deg f) exceeds the field budget are
// skipped, and at most 32 primes are tried.
std::optional<PrimeElement> absolute_irreducibility_certificate(const MultiPoly& f, int cap);

}  // namespace ffh
