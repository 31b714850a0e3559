#pragma once

// The ring F_q[t]: dense univariate polynomials with degree/norm semantics,
// Euclidean gcd, primes (monic irreducibles) and their counts.

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ffh/finite_field.hpp"

namespace ffh {

// Degree of the zero polynomial. Compares below every integer, so the zero
// element lies in F_q[t]_{<k} for every k >= 0.
inline constexpr int kNegInf = std::numeric_limits<int>::min();

using Rational = boost::rational<std::int64_t>;

class RingElement {
 public:
  RingElement() = default;
  explicit RingElement(Field f) : field_(f) {}
  // Coefficients low-to-high; trailing zeros are dropped.
  RingElement(Field f, std::vector<std::uint32_t> coeffs);

  static RingElement constant(Field f, std::uint32_t c);
  static RingElement monomial(Field f, int k, std::uint32_t c = 1);
  static RingElement t(Field f) { return monomial(f, 1); }

  const Field& field() const { return field_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::uint32_t coeff(int i) const;
  std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
  RingElement scale(std::uint32_t c) const;
  RingElement shift(int k) const;  // multiply by t^k
  RingElement pow(std::uint64_t k) const;
  RingElement monic() const;
  // Exact quotient; throws ConsistencyError when the division leaves a remainder.
  RingElement exact_div(const RingElement& d) const;

  // Value at x of the target field of `emb`, coefficients mapped through `emb`.
  std::uint32_t evaluate(const FieldEmbedding& emb, std::uint32_t x) const;

  std::string to_string() const;

  bool operator==(const RingElement& o) const { return c_ == o.c_; }
  // Total order: degree first, then coefficients from the top down.
  std::strong_ordering operator<=>(const RingElement& o) const;

 private:
  void trim();
  Field field_;
  std::vector<std::uint32_t> c_;
};

std::pair<RingElement, RingElement> divmod(const RingElement& a, const RingElement& b);
inline RingElement operator/(const RingElement& a, const RingElement& b) { return divmod(a, b).first; }
inline RingElement operator%(const RingElement& a, const RingElement& b) { return divmod(a, b).second; }

// Monic gcd. gcd(0, 0) is a PreconditionError.
RingElement gcd(const RingElement& a, const RingElement& b);

struct ExtendedGcd {
  RingElement g, s, t;  // g = s*a + t*b, g monic
};
ExtendedGcd xgcd(const RingElement& a, const RingElement& b);

struct DegreeNorm {
  int degree;          // kNegInf for zero
  std::uint64_t norm;  // q^degree, 0 for zero
};
DegreeNorm norm_and_degree(const RingElement& a);

// Checked integer power; BudgetError on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, int exp);

// Exact multiplicity of `prime` in a nonzero `a`.
int valuation(const RingElement& a, const RingElement& prime);

// Monic irreducible polynomial.
class PrimeElement {
 public:
  // Throws PreconditionError unless `p` is monic irreducible.
  explicit PrimeElement(RingElement p);
  const RingElement& value() const { return p_; }
  int degree() const { return p_.degree(); }
  bool operator==(const PrimeElement& o) const { return p_ == o.p_; }
  auto operator<=>(const PrimeElement& o) const { return p_ <=> o.p_; }

 private:
  struct Trusted {};
  PrimeElement(RingElement p, Trusted) : p_(std::move(p)) {}
  friend std::vector<PrimeElement> primes_of_degree(const Field&, int);
  RingElement p_;
};

// Rabin's test; throws PreconditionError on zero input. Non-monic input is
// never prime.
bool is_prime(const RingElement& a);

// All monic irreducibles of degree n in the element order of elements_below.
std::vector<PrimeElement> primes_of_degree(const Field& f, int n);

struct PrimeCount {
  std::uint64_t exact = 0;   // by enumeration
  std::uint64_t mobius = 0;  // (1/n) sum_{d|n} mu(d) q^{n/d}
  Rational main_term;        // q^n / n
};
// Throws ConsistencyError when enumeration and the Moebius sum disagree.
PrimeCount prime_count(const Field& f, int n);

// Random-access view of F_q[t]_{<k}: index i <-> polynomial whose base-q
// digits are the coefficient indices. Index order is by degree, then by
// coefficients from the top down.
class ElementsBelow {
 public:
  ElementsBelow(Field f, int k);
  std::uint64_t size() const { return size_; }
  RingElement operator[](std::uint64_t i) const;

  class iterator {
   public:
    using value_type = RingElement;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const ElementsBelow* r, std::uint64_t i) : r_(r), i_(i) {}
    RingElement operator*() const { return (*r_)[i_]; }
    iterator& operator++() { ++i_; return *this; }
    iterator operator++(int) { auto c = *this; ++i_; return c; }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const ElementsBelow* r_ = nullptr;
    std::uint64_t i_ = 0;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  Field field_;
  int k_;
  std::uint64_t size_;
};

ElementsBelow elements_below(const Field& f, int k);

// The residue field F_q[t]/(p) as a flat finite field, with the reduction
// map alpha -> alpha(theta).
struct ResidueMap {
  Field residue;
  FieldEmbedding coefficients;  // F_q -> residue field
  std::uint32_t theta = 0;      // image of t

  std::uint32_t operator()(const RingElement& a) const { return a.evaluate(coefficients, theta); }
};
ResidueMap residue_map(const PrimeElement& p);

}  // namespace ffh
