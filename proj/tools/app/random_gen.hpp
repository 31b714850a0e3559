#pragma once

// Seeded generators for property suites. Only mt19937_64's raw output is used,
// so sequences are identical on every platform for a given seed.

#include <cstdint>
#include <random>
#include <vector>

#include "ffh/multipoly.hpp"
#include "ffh/polymatrix.hpp"

namespace ffh::app {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n ? gen_() % n : 0; }
  bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

  // Uniform element of F_q[t]_{<k}.
  RingElement element(const Field& F, int k) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(std::max(k, 0)));
    for (auto& x : c) x = static_cast<std::uint32_t>(below(F.order()));
    return RingElement(F, std::move(c));
  }

  RingElement nonzero_element(const Field& F, int k) {
    for (;;) {
      RingElement r = element(F, k);
      if (!r.is_zero()) return r;
    }
  }

  RingElement monic(const Field& F, int degree) {
    return element(F, degree) + RingElement::monomial(F, degree);
  }

  // Homogeneous form of degree d in variables [first, nvars), each monomial
  // present with the given percentage, coefficients in F_q[t]_{<k}.
  MultiPoly form(const Field& F, int nvars, int d, int k, int density, int first = 0);

  // Polynomial of total degree <= d in variables [first, nvars).
  MultiPoly poly(const Field& F, int nvars, int d, int k, int density, int first = 0);

  PolyMatrix matrix(const Field& F, int rows, int cols, int k) {
    PolyMatrix A(F, rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) A(i, j) = element(F, k);
    }
    return A;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ffh::app
