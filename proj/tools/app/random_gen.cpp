#include "random_gen.hpp"

#include "ffh/monomial.hpp"

namespace ffh::app {

namespace {

Monomial place(const Monomial& m, int first) {
  Monomial out;
  for (int i = 0; i + first < kMaxVars; ++i) out.e[static_cast<std::size_t>(i + first)] = m.e[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace

MultiPoly Rng::form(const Field& F, int nvars, int d, int k, int density, int first) {
  MultiPoly f(F, nvars);
  for (const auto& m : monomial_basis(d, nvars - first)) {
    if (chance(density)) f.add_term(place(m, first), element(F, k));
  }
  return f;
}

MultiPoly Rng::poly(const Field& F, int nvars, int d, int k, int density, int first) {
  MultiPoly f(F, nvars);
  for (const auto& m : monomials_up_to(d, nvars - first)) {
    if (chance(density)) f.add_term(place(m, first), element(F, k));
  }
  return f;
}

}  // namespace ffh::app
