#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ffh {

inline constexpr int kMaxVars = 12;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] > o.e[i]) return false;
    }
    return true;
  }
  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  static Monomial variable(int i, int power = 1);

  auto operator<=>(const Monomial&) const = default;
};

// Graded lexicographic order with x0 > x1 > ...; "greater" comes first so the
// first term of a map keyed with this comparator is the leading term.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

// All degree-D monomials in `nvars` variables, leading (grlex-greatest) first.
// Their number is binom(D + nvars - 1, nvars - 1).
std::vector<Monomial> monomial_basis(int degree, int nvars);
// All monomials of degree <= d, grlex-greatest first.
std::vector<Monomial> monomials_up_to(int degree, int nvars);

std::uint64_t binomial(int n, int k);

std::string format_monomial(const Monomial& m, int nvars);

}  // namespace ffh
