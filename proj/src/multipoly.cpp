#include "ffh/multipoly.hpp"

#include <algorithm>

#include "ffh/error.hpp"
#include "ffh/limits.hpp"

namespace ffh {

int log_norm(const MultiPoly& f) {
  if (f.is_zero()) throw PreconditionError("norm of the zero polynomial");
  int d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, c.degree());
  return d;
}

std::uint64_t max_norm(const MultiPoly& f) { return checked_pow(f.field().order(), log_norm(f)); }

ContentSplit content_primitive(const MultiPoly& f) {
  if (f.is_zero()) throw PreconditionError("content of the zero polynomial");
  RingElement g;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    g = first ? c.monic() : gcd(g, c);
    first = false;
    if (g.is_one()) break;
  }
  ContentSplit out{g, MultiPoly(f.field(), f.nvars())};
  for (const auto& [m, c] : f.terms()) out.primitive.add_term(m, c.exact_div(g));
  return out;
}

bool is_primitive(const MultiPoly& f) { return content_primitive(f).content.is_one(); }

MultiPoly graded_part(const MultiPoly& f, int i) {
  if (i < 0 || (!f.is_zero() && i > f.degree())) throw PreconditionError("graded part index out of range");
  MultiPoly out(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == i) out.add_term(m, c);
  }
  return out;
}

MultiPoly homogenize(const MultiPoly& f, int var) {
  if (var < 0 || var >= f.nvars()) throw PreconditionError("homogenizing variable out of range");
  if (f.degree_in(var) > 0) throw PreconditionError("homogenizing variable already occurs");
  const int d = f.is_zero() ? 0 : f.degree();
  MultiPoly out(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m * Monomial::variable(var, d - m.degree()), c);
  return out;
}

MultiPoly dehomogenize(const MultiPoly& F, int var) {
  if (!F.is_homogeneous()) throw PreconditionError("dehomogenize needs a homogeneous polynomial");
  if (var < 0 || var >= F.nvars()) throw PreconditionError("variable out of range");
  MultiPoly out(F.field(), F.nvars());
  for (const auto& [m, c] : F.terms()) {
    Monomial k = m;
    k.e[static_cast<std::size_t>(var)] = 0;
    out.add_term(k, c);
  }
  return out;
}

MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images) {
  if (static_cast<int>(images.size()) != f.nvars()) throw PreconditionError("substitution dimension mismatch");
  if (images.empty()) return f;
  const Field& fld = f.field();
  const int nv = images[0].nvars();
  for (const auto& im : images) {
    if (im.nvars() != nv) throw PreconditionError("substitution images in different variable counts");
  }
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int top = std::max(0, f.degree_in(static_cast<int>(i)));
    powers[i].push_back(MultiPoly::constant(fld, nv, RingElement::constant(fld, 1)));
    for (int k = 1; k <= top; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  MultiPoly out(fld, nv);
  for (const auto& [m, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(fld, nv, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (m.e[i]) term = term * powers[i][m.e[i]];
    }
    out += term;
  }
  return out;
}

MultiPoly shift_homogeneous(const MultiPoly& F, const std::vector<RingElement>& alpha, int var) {
  if (static_cast<int>(alpha.size()) != F.nvars()) throw PreconditionError("shift dimension mismatch");
  const Field& fld = F.field();
  std::vector<MultiPoly> images;
  for (int i = 0; i < F.nvars(); ++i) {
    MultiPoly im = MultiPoly::variable(fld, F.nvars(), i);
    if (i != var && !alpha[static_cast<std::size_t>(i)].is_zero()) {
      im.add_term(Monomial::variable(var), alpha[static_cast<std::size_t>(i)]);
    }
    images.push_back(std::move(im));
  }
  return substitute(F, images);
}

MultiPoly translate(const MultiPoly& f, const std::vector<RingElement>& alpha) {
  if (static_cast<int>(alpha.size()) != f.nvars()) throw PreconditionError("translation dimension mismatch");
  std::vector<MultiPoly> images;
  for (int i = 0; i < f.nvars(); ++i) {
    MultiPoly im = MultiPoly::variable(f.field(), f.nvars(), i);
    im.add_term(Monomial{}, alpha[static_cast<std::size_t>(i)]);
    images.push_back(std::move(im));
  }
  return substitute(f, images);
}

namespace {

template <class C>
C evaluate_impl(const SparsePoly<C>& f, const std::vector<C>& point) {
  if (static_cast<int>(point.size()) != f.nvars()) throw PreconditionError("evaluation dimension mismatch");
  const Field& fld = f.field();
  std::vector<std::vector<C>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    const int top = std::max(0, f.degree_in(static_cast<int>(i)));
    powers[i].push_back(CoeffTraits<C>::one(fld));
    for (int k = 1; k <= top; ++k) powers[i].push_back(powers[i].back() * point[i]);
  }
  C acc = CoeffTraits<C>::zero(fld);
  for (const auto& [m, c] : f.terms()) {
    C term = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m.e[i]) term = term * powers[i][m.e[i]];
    }
    acc = acc + term;
  }
  return acc;
}

std::optional<RingElement> coeff_div(const RingElement& a, const RingElement& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::optional<FieldElement> coeff_div(const FieldElement& a, const FieldElement& b) { return a / b; }

template <class C>
std::optional<SparsePoly<C>> divide_impl(const SparsePoly<C>& g, const SparsePoly<C>& f) {
  if (f.is_zero()) throw PreconditionError("division by the zero polynomial");
  SparsePoly<C> quotient(g.field(), g.nvars());
  SparsePoly<C> r = g;
  const Monomial& lm = f.leading_monomial();
  const C& lc = f.leading_coeff();
  while (!r.is_zero()) {
    const Monomial& m = r.leading_monomial();
    if (!lm.divides(m)) return std::nullopt;
    auto c = coeff_div(r.leading_coeff(), lc);
    if (!c) return std::nullopt;
    const Monomial step = m / lm;
    quotient.add_term(step, *c);
    SparsePoly<C> sub(g.field(), g.nvars());
    sub.add_term(step, *c);
    r -= sub * f;
  }
  return quotient;
}

}  // namespace

RingElement evaluate(const MultiPoly& f, const std::vector<RingElement>& point) {
  return evaluate_impl(f, point);
}

FieldElement evaluate(const ResiduePoly& f, const std::vector<FieldElement>& point) {
  return evaluate_impl(f, point);
}

ResiduePoly reduce_mod_prime(const MultiPoly& f, const ResidueMap& rm) {
  ResiduePoly out(rm.residue, f.nvars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, rm.residue.element(rm(c)));
  return out;
}

ResiduePoly reduce_mod_prime(const MultiPoly& f, const PrimeElement& p) {
  return reduce_mod_prime(f, residue_map(p));
}

ResiduePoly embed(const ResiduePoly& g, const FieldEmbedding& emb) {
  if (!(g.field() == emb.source)) throw PreconditionError("embedding source does not match polynomial field");
  ResiduePoly out(emb.target, g.nvars());
  for (const auto& [m, c] : g.terms()) out.add_term(m, emb(c));
  return out;
}

ResiduePoly make_monic(const ResiduePoly& g) {
  if (g.is_zero()) return g;
  return g.scale(g.leading_coeff().inverse());
}

int floor_log(std::uint64_t q, std::uint64_t d) {
  if (q < 2 || d < 1) throw PreconditionError("floor_log needs q >= 2 and d >= 1");
  int k = 0;
  std::uint64_t p = q;
  while (p <= d) {
    ++k;
    if (p > d / q + 1) break;
    p *= q;
  }
  return k;
}

bool norm_within_factor(std::uint64_t q, int a, int b, int d) {
  if (a <= b) return true;
  const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 100;
  unsigned __int128 lhs = 1, rhs = 1;
  for (int i = 0; i < a - b && lhs <= cap; ++i) lhs *= q;
  for (int i = 0; i < d && rhs <= cap; ++i) rhs *= static_cast<unsigned>(d);
  if (lhs > cap) return false;
  return lhs <= rhs;
}

LeadingTransform leading_transform(const MultiPoly& f, int var) {
  if (f.is_zero() || !f.is_homogeneous()) throw PreconditionError("leading_transform needs a nonzero form");
  const Field& fld = f.field();
  const int nv = f.nvars();
  const int d = f.degree();
  const std::uint64_t q = fld.order();
  const int target = log_norm(f);
  const int k = d >= 1 ? floor_log(q, static_cast<std::uint64_t>(d)) : 0;
  const ElementsBelow box(fld, k + 1);
  const std::uint64_t radix = box.size();
  std::uint64_t total = 1;
  for (int i = 0; i < nv - 1; ++i) {
    if (total > limits().enumeration_candidates / radix) throw BudgetError("leading_transform search box too large");
    total *= radix;
  }

  std::vector<RingElement> point(static_cast<std::size_t>(nv), RingElement(fld));
  LeadingTransform out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < nv; ++i) {
      if (i == var) {
        point[static_cast<std::size_t>(i)] = RingElement::constant(fld, 1);
        continue;
      }
      point[static_cast<std::size_t>(i)] = box[rest % radix];
      rest /= radix;
    }
    const RingElement value = evaluate(f, point);
    if (value.is_zero() || value.degree() < target) continue;
    out.alpha = point;
    out.alpha[static_cast<std::size_t>(var)] = RingElement(fld);
    out.transformed = shift_homogeneous(f, out.alpha, var);
    out.lead_degree = value.degree();
    out.candidates_tried = idx + 1;
    if (!(out.transformed.coeff(Monomial::variable(var, d)) == value)) {
      throw ConsistencyError("leading coefficient of the shifted form differs from f(1, alpha)");
    }
    if (!norm_within_factor(q, log_norm(out.transformed), target, d)) {
      throw ConsistencyError("shifted form violates ||f'|| <= ||f|| d^d");
    }
    return out;
  }
  throw ConsistencyError("no alpha with |alpha_i| <= d and |f(1, alpha)| >= ||f||");
}

MultiPoly twist(const MultiPoly& f, const RingElement& H) {
  if (!H.is_monic()) throw PreconditionError("twist needs a monic H");
  if (f.is_zero()) throw PreconditionError("twist of the zero polynomial");
  if (f.degree_in(0) > 0) throw PreconditionError("twist needs f free of x0");
  const int d = f.degree();
  std::vector<RingElement> hp{RingElement::constant(f.field(), 1)};
  for (int i = 1; i <= d; ++i) hp.push_back(hp.back() * H);
  MultiPoly out(f.field(), f.nvars());
  for (const auto& [m, c] : f.terms()) {
    const int i = m.degree();
    out.add_term(m * Monomial::variable(0, d - i), c * hp[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& g, const MultiPoly& f) { return divide_impl(g, f); }

std::optional<ResiduePoly> divide_exact(const ResiduePoly& g, const ResiduePoly& f) {
  return divide_impl(g, f);
}

std::vector<int> support_variables(const MultiPoly& f) {
  std::vector<int> out;
  for (int i = 0; i < f.nvars(); ++i) {
    if (f.degree_in(i) > 0) out.push_back(i);
  }
  return out;
}

}  // namespace ffh
