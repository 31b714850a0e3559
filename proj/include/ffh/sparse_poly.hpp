#pragma once

#include <map>
#include <optional>
#include <utility>

#include "ffh/error.hpp"
#include "ffh/finite_field.hpp"
#include "ffh/fqt.hpp"
#include "ffh/monomial.hpp"

namespace ffh {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<RingElement> {
  static RingElement zero(const Field& f) { return RingElement(f); }
  static RingElement one(const Field& f) { return RingElement::constant(f, 1); }
};

template <>
struct CoeffTraits<FieldElement> {
  static FieldElement zero(const Field& f) { return f.zero(); }
  static FieldElement one(const Field& f) { return f.one(); }
};

// Sparse multivariate polynomial with coefficients C (RingElement or
// FieldElement) keyed by monomial in descending grlex order. No zero
// coefficient is ever stored.
template <class C>
class SparsePoly {
 public:
  using Terms = std::map<Monomial, C, GrlexGreater>;

  SparsePoly() = default;
  SparsePoly(Field f, int nvars) : field_(f), nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw PreconditionError("variable count out of range");
  }

  static SparsePoly constant(Field f, int nvars, const C& c) {
    SparsePoly p(f, nvars);
    p.add_term(Monomial{}, c);
    return p;
  }
  static SparsePoly variable(Field f, int nvars, int i) {
    if (i < 0 || i >= nvars) throw PreconditionError("variable index out of range");
    SparsePoly p(f, nvars);
    p.add_term(Monomial::variable(i), CoeffTraits<C>::one(f));
    return p;
  }

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int degree() const { return terms_.empty() ? kNegInf : terms_.begin()->first.degree(); }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [m, c] : terms_) {
      if (m.degree() != d) return false;
    }
    return true;
  }
  // Highest exponent of variable i that occurs.
  int degree_in(int i) const {
    int d = terms_.empty() ? kNegInf : 0;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m.e[static_cast<std::size_t>(i)]);
    return d;
  }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const C& leading_coeff() const { return terms_.begin()->second; }

  C coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CoeffTraits<C>::zero(field_) : it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (c.is_zero()) return;
    for (int i = nvars_; i < kMaxVars; ++i) {
      if (m.e[static_cast<std::size_t>(i)] != 0) throw PreconditionError("monomial uses an undeclared variable");
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SparsePoly operator+(const SparsePoly& o) const {
    check(o);
    SparsePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  SparsePoly operator-(const SparsePoly& o) const {
    check(o);
    SparsePoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  SparsePoly operator-() const {
    SparsePoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  SparsePoly operator*(const SparsePoly& o) const {
    check(o);
    SparsePoly r(field_, nvars_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scale(const C& s) const {
    SparsePoly r(field_, nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }
  SparsePoly times_monomial(const Monomial& mono) const {
    SparsePoly r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c);
    return r;
  }
  SparsePoly pow(int k) const {
    SparsePoly result = constant(field_, nvars_, CoeffTraits<C>::one(field_));
    SparsePoly base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  bool operator==(const SparsePoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [m, c] : terms_) {
      if (!(m == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  // Same polynomial viewed with a different variable count (must still fit).
  SparsePoly with_nvars(int n) const {
    SparsePoly r(field_, n);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

 private:
  void check(const SparsePoly& o) const {
    if (!(field_ == o.field_)) throw PreconditionError("polynomials over different fields");
    if (nvars_ != o.nvars_) throw PreconditionError("polynomials in different variable counts");
  }

  Field field_;
  int nvars_ = 0;
  Terms terms_;
};

}  // namespace ffh
