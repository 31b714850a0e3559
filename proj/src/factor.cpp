#include "ffh/factor.hpp"

#include <algorithm>
#include <map>

#include "ffh/error.hpp"
#include "ffh/limits.hpp"

namespace ffh {

namespace {

std::vector<int> support(const ResiduePoly& g) {
  std::vector<int> out;
  for (int i = 0; i < g.nvars(); ++i) {
    if (g.degree_in(i) > 0) out.push_back(i);
  }
  return out;
}

// Monomials of total degree k in the given variables, grlex-greatest first.
std::vector<Monomial> basis_over(const std::vector<int>& vars, int k) {
  std::vector<Monomial> out;
  if (vars.empty()) {
    if (k == 0) out.emplace_back();
    return out;
  }
  for (const Monomial& m : monomial_basis(k, static_cast<int>(vars.size()))) {
    Monomial r;
    for (std::size_t i = 0; i < vars.size(); ++i) r.e[static_cast<std::size_t>(vars[i])] = m.e[i];
    out.push_back(r);
  }
  return out;
}

void charge(std::uint64_t& used, std::uint64_t amount) {
  used += amount;
  if (used > limits().factor_candidates) {
    throw BudgetError("factor search exceeds the candidate budget of " +
                      std::to_string(limits().factor_candidates));
  }
}

std::uint64_t count_candidates(std::uint64_t Q, std::size_t B) {
  // sum_{j<B} Q^(B-1-j), saturating
  std::uint64_t total = 0, p = 1;
  for (std::size_t j = 0; j < B; ++j) {
    total += p;
    if (total > limits().factor_candidates) return total;
    if (j + 1 < B) {
      if (p > limits().factor_candidates / Q + 1) return limits().factor_candidates + 1;
      p *= Q;
    }
  }
  return total;
}

std::optional<ResiduePoly> exhaustive_divisor(const ResiduePoly& g, int k) {
  const Field& F = g.field();
  const std::uint64_t Q = F.order();
  const auto basis = basis_over(support(g), k);
  const std::size_t B = basis.size();
  const std::uint64_t total = count_candidates(Q, B);
  if (total > limits().factor_candidates) {
    throw BudgetError("exhaustive divisor search of degree " + std::to_string(k) + " over " + F.name() +
                      " exceeds the candidate budget");
  }
  const Monomial& lm_g = g.leading_monomial();
  for (std::size_t j = 0; j < B; ++j) {
    if (!basis[j].divides(lm_g)) continue;
    const std::size_t free = B - 1 - j;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= Q;
    std::vector<std::uint32_t> digits(free, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = free; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(rest % Q);
        rest /= Q;
      }
      ResiduePoly cand(F, g.nvars());
      cand.add_term(basis[j], F.one());
      for (std::size_t i = 0; i < free; ++i) cand.add_term(basis[j + 1 + i], F.element(digits[i]));
      if (divide_exact(g, cand)) return cand;
    }
  }
  return std::nullopt;
}

// Substitution over a finite field, images in their own variable space.
ResiduePoly substitute_residue(const ResiduePoly& f, const std::vector<ResiduePoly>& images) {
  const Field& F = f.field();
  const int nv = images.front().nvars();
  std::vector<std::vector<ResiduePoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int top = std::max(0, f.degree_in(static_cast<int>(i)));
    powers[i].push_back(ResiduePoly::constant(F, nv, F.one()));
    for (int e = 1; e <= top; ++e) powers[i].push_back(powers[i].back() * images[i]);
  }
  ResiduePoly out(F, nv);
  for (const auto& [m, c] : f.terms()) {
    ResiduePoly term = ResiduePoly::constant(F, nv, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (m.e[i]) term = term * powers[i][m.e[i]];
    }
    out += term;
  }
  return out;
}

ResiduePoly assign(const ResiduePoly& eq, int var, const FieldElement& value) {
  ResiduePoly out(eq.field(), eq.nvars());
  for (const auto& [m, c] : eq.terms()) {
    Monomial k = m;
    const int e = k.e[static_cast<std::size_t>(var)];
    k.e[static_cast<std::size_t>(var)] = 0;
    out.add_term(k, e ? c * value.pow(static_cast<std::uint64_t>(e)) : c);
  }
  return out;
}

// Roots in F of an equation involving only `var`.
std::vector<std::uint32_t> univariate_roots(const ResiduePoly& eq, int var) {
  const Field& F = eq.field();
  std::vector<std::uint32_t> dense(static_cast<std::size_t>(eq.degree_in(var)) + 1, 0);
  for (const auto& [m, c] : eq.terms()) dense[m.e[static_cast<std::size_t>(var)]] = c.index();
  std::vector<std::uint32_t> roots;
  for (std::uint32_t x = 0; x < F.order(); ++x) {
    std::uint32_t acc = 0;
    for (std::size_t i = dense.size(); i-- > 0;) acc = F.add(F.mul(acc, x), dense[i]);
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

struct LinearSolver {
  const Field& F;
  std::vector<int> cvars;  // variable slots of the unknown coefficients
  std::vector<std::vector<std::uint32_t>> solutions;
  std::uint64_t used = 0;

  void solve(std::vector<ResiduePoly> eqs, std::vector<std::optional<std::uint32_t>>& value) {
    std::vector<ResiduePoly> live;
    for (auto& e : eqs) {
      if (e.is_zero()) continue;
      if (e.degree() == 0) return;  // nonzero constant: inconsistent
      live.push_back(std::move(e));
    }
    std::size_t open = 0;
    for (const auto& v : value) open += v ? 0 : 1;
    if (open == 0) {
      std::vector<std::uint32_t> s;
      for (const auto& v : value) s.push_back(*v);
      solutions.push_back(std::move(s));
      return;
    }
    // Prefer an equation in a single unknown.
    for (const auto& e : live) {
      int only = -1;
      bool single = true;
      for (std::size_t i = 0; i < cvars.size() && single; ++i) {
        if (e.degree_in(cvars[i]) > 0) {
          if (only >= 0) single = false;
          only = static_cast<int>(i);
        }
      }
      if (!single || only < 0) continue;
      const int slot = cvars[static_cast<std::size_t>(only)];
      for (std::uint32_t r : univariate_roots(e, slot)) {
        charge(used, 1);
        std::vector<ResiduePoly> next;
        for (const auto& x : live) next.push_back(assign(x, slot, F.element(r)));
        value[static_cast<std::size_t>(only)] = r;
        solve(std::move(next), value);
        value[static_cast<std::size_t>(only)].reset();
      }
      return;
    }
    // No univariate condition: branch over the field on the first open unknown.
    std::size_t pick = 0;
    while (value[pick]) ++pick;
    for (std::size_t i = 0; i < cvars.size(); ++i) {
      if (value[i]) continue;
      bool appears = false;
      for (const auto& e : live) appears = appears || e.degree_in(cvars[i]) > 0;
      if (appears) {
        pick = i;
        break;
      }
    }
    const int slot = cvars[pick];
    charge(used, F.order());
    for (std::uint32_t r = 0; r < F.order(); ++r) {
      std::vector<ResiduePoly> next;
      for (const auto& x : live) next.push_back(assign(x, slot, F.element(r)));
      value[pick] = r;
      solve(std::move(next), value);
    }
    value[pick].reset();
  }
};

std::optional<ResiduePoly> linear_divisor(const ResiduePoly& g) {
  const Field& F = g.field();
  const int nv = g.nvars();
  const auto vars = support(g);
  if (vars.size() == 1) {
    ResiduePoly x = ResiduePoly::variable(F, nv, vars[0]);
    return x;  // a homogeneous polynomial in one variable is c * x^d
  }
  for (std::size_t pos = 0; pos < vars.size(); ++pos) {
    const int j = vars[pos];
    const std::size_t nc = vars.size() - pos - 1;
    if (nv + static_cast<int>(nc) > kMaxVars) return exhaustive_divisor(g, 1);
    const int NV = nv + static_cast<int>(nc);
    std::vector<ResiduePoly> images;
    for (int i = 0; i < nv; ++i) images.push_back(ResiduePoly::variable(F, NV, i));
    ResiduePoly lin(F, NV);
    LinearSolver solver{F, {}, {}, 0};
    for (std::size_t t = 0; t < nc; ++t) {
      const int xi = vars[pos + 1 + t];
      const int ci = nv + static_cast<int>(t);
      solver.cvars.push_back(ci);
      lin.add_term(Monomial::variable(xi) * Monomial::variable(ci), -F.one());
    }
    images[static_cast<std::size_t>(j)] = lin;
    const ResiduePoly sub = substitute_residue(g.with_nvars(nv), images);
    // Group by the x-part of each monomial; each group must vanish.
    std::map<Monomial, ResiduePoly, GrlexGreater> groups;
    for (const auto& [m, c] : sub.terms()) {
      Monomial xm, cm;
      for (int i = 0; i < nv; ++i) xm.e[static_cast<std::size_t>(i)] = m.e[static_cast<std::size_t>(i)];
      for (int i = nv; i < NV; ++i) cm.e[static_cast<std::size_t>(i)] = m.e[static_cast<std::size_t>(i)];
      auto it = groups.try_emplace(xm, F, NV).first;
      it->second.add_term(cm, c);
    }
    std::vector<ResiduePoly> eqs;
    for (auto& [xm, e] : groups) eqs.push_back(std::move(e));
    std::vector<std::optional<std::uint32_t>> value(nc);
    solver.solve(std::move(eqs), value);
    if (solver.solutions.empty()) continue;
    std::sort(solver.solutions.begin(), solver.solutions.end());
    const auto& best = solver.solutions.front();
    ResiduePoly L = ResiduePoly::variable(F, nv, j);
    for (std::size_t t = 0; t < nc; ++t) L.add_term(Monomial::variable(vars[pos + 1 + t]), F.element(best[t]));
    if (!divide_exact(g, L)) throw ConsistencyError("root conditions produced a non-divisor " + std::to_string(j));
    return L;
  }
  return std::nullopt;
}

// Candidate order used for sorting factors: degree, leading position in the
// grlex basis, then coefficient indices.
bool candidate_less(const ResiduePoly& a, const ResiduePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto basis = monomials_up_to(std::max(a.degree(), 0), a.nvars());
  std::size_t la = basis.size(), lb = basis.size();
  std::vector<std::uint32_t> va, vb;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    va.push_back(a.coeff(basis[i]).index());
    vb.push_back(b.coeff(basis[i]).index());
    if (la == basis.size() && va.back()) la = i;
    if (lb == basis.size() && vb.back()) lb = i;
  }
  if (la != lb) return la < lb;
  return va < vb;
}

void factor_homogeneous(ResiduePoly h, int min_k, FactorStrategy s, std::vector<ResiduePoly>& out) {
  while (h.degree() > 0) {
    const int d = h.degree();
    if (d == 1) {
      out.push_back(make_monic(h));
      return;
    }
    std::optional<ResiduePoly> f;
    for (int k = min_k; k <= d / 2 && !f; ++k) {
      f = find_divisor(h, k, s);
      if (f) min_k = k;
    }
    if (!f) {
      out.push_back(make_monic(h));
      return;
    }
    out.push_back(*f);
    h = *divide_exact(h, *f);
  }
}

std::vector<ResiduePoly> irreducible_factors(const ResiduePoly& g, FactorStrategy s) {
  std::vector<ResiduePoly> out;
  if (g.is_homogeneous()) {
    factor_homogeneous(g, 1, s, out);
    return out;
  }
  const int nv = g.nvars();
  if (nv >= kMaxVars) throw PreconditionError("no free variable slot to homogenize");
  ResiduePoly H(g.field(), nv + 1);
  const int d = g.degree();
  for (const auto& [m, c] : g.terms()) H.add_term(m * Monomial::variable(nv, d - m.degree()), c);
  std::vector<ResiduePoly> hf;
  factor_homogeneous(H, 1, s, hf);
  for (const auto& f : hf) {
    ResiduePoly a(g.field(), nv);
    for (const auto& [m, c] : f.terms()) {
      Monomial k = m;
      k.e[static_cast<std::size_t>(nv)] = 0;
      a.add_term(k, c);
    }
    if (a.degree() > 0) out.push_back(make_monic(a));
  }
  return out;
}

}  // namespace

ResiduePoly Factorization::product() const {
  const Field& F = unit.field();
  int nv = factors.empty() ? 0 : factors.front().poly.nvars();
  ResiduePoly p = ResiduePoly::constant(F, nv, unit);
  for (const auto& f : factors) p *= f.poly.pow(f.multiplicity);
  return p;
}

std::optional<ResiduePoly> find_divisor(const ResiduePoly& g, int k, FactorStrategy strategy) {
  if (g.is_zero() || !g.is_homogeneous()) throw PreconditionError("find_divisor needs a nonzero form");
  if (k < 1 || k > g.degree()) return std::nullopt;
  if (k == 1 && strategy == FactorStrategy::Auto) return linear_divisor(g);
  return exhaustive_divisor(g, k);
}

Factorization factor_bruteforce(const ResiduePoly& g, FactorStrategy strategy) {
  if (g.is_zero()) throw PreconditionError("factorization of the zero polynomial");
  Factorization out;
  out.unit = g.leading_coeff();
  auto fs = irreducible_factors(g, strategy);
  std::sort(fs.begin(), fs.end(), candidate_less);
  for (auto& f : fs) {
    if (!out.factors.empty() && out.factors.back().poly == f) {
      ++out.factors.back().multiplicity;
    } else {
      out.factors.push_back({std::move(f), 1});
    }
  }
  return out;
}

bool is_irreducible(const ResiduePoly& g, FactorStrategy strategy) {
  if (g.is_zero() || g.degree() < 1) return false;
  if (g.degree() == 1) return true;
  if (g.is_homogeneous()) {
    for (int k = 1; k <= g.degree() / 2; ++k) {
      if (find_divisor(g, k, strategy)) return false;
    }
    return true;
  }
  return irreducible_factors(g, strategy).size() == 1;
}

bool is_absolutely_irreducible(const ResiduePoly& g, FactorStrategy strategy) {
  if (g.is_zero()) throw PreconditionError("absolute irreducibility of the zero polynomial");
  const int d = g.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  ResiduePoly H = g;
  if (!g.is_homogeneous()) {
    const int nv = g.nvars();
    if (nv >= kMaxVars) throw PreconditionError("no free variable slot to homogenize");
    H = ResiduePoly(g.field(), nv + 1);
    for (const auto& [m, c] : g.terms()) H.add_term(m * Monomial::variable(nv, d - m.degree()), c);
  }
  if (support(H).size() < 3) return false;  // binary forms of degree >= 2 split
  if (!is_irreducible(H, strategy)) return false;
  for (int r = 2; r <= d; ++r) {
    if (d % r) continue;
    const FieldEmbedding emb = extend_field(H.field(), r);
    if (!is_irreducible(embed(H, emb), strategy)) return false;
  }
  return true;
}

int max_extension_degree(const Field& f) {
  int r = 0;
  std::uint64_t size = 1;
  while (size <= limits().max_field_order / f.order()) {
    size *= f.order();
    ++r;
  }
  return r;
}

namespace {

std::vector<RingElement> monic_up_to(const Field& F, int T) {
  std::vector<RingElement> out;
  for (int e = 0; e <= T; ++e) {
    const ElementsBelow low(F, e);
    for (std::uint64_t i = 0; i < low.size(); ++i) out.push_back(low[i] + RingElement::monomial(F, e));
  }
  return out;
}

std::optional<MultiPoly> exhaustive_fqt_divisor(const MultiPoly& H, int k) {
  const Field& F = H.field();
  std::vector<int> vars;
  for (int i = 0; i < H.nvars(); ++i) {
    if (H.degree_in(i) > 0) vars.push_back(i);
  }
  int T = 0;
  for (const auto& [m, c] : H.terms()) T = std::max(T, c.degree());
  const auto basis = basis_over(vars, k);
  const ElementsBelow coeffs(F, T + 1);
  const auto leads = monic_up_to(F, T);
  const std::uint64_t radix = coeffs.size();
  std::uint64_t used = 0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (!basis[j].divides(H.leading_monomial())) continue;
    const std::size_t free = basis.size() - 1 - j;
    std::uint64_t count = leads.size();
    for (std::size_t i = 0; i < free; ++i) {
      if (count > limits().factor_candidates / radix) throw BudgetError("divisor search over F_q[t] exceeds the candidate budget");
      count *= radix;
    }
    charge(used, count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      MultiPoly cand(F, H.nvars());
      for (std::size_t i = free; i-- > 0;) {
        cand.add_term(basis[j + 1 + i], coeffs[rest % radix]);
        rest /= radix;
      }
      cand.add_term(basis[j], leads[rest]);
      if (divide_exact(H, cand)) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace

namespace {
// Primes tried, smallest degree first, before a certificate search gives up.
// Reductions of forms with a certificate usually succeed within the first few;
// for forms such as sums of p-th powers every reduction is reducible.
constexpr int kCertificatePrimes = 32;
}  // namespace

IrreducibilityVerdict irreducibility_over_fqt(const MultiPoly& f, int prime_cap) {
  if (f.is_zero()) throw PreconditionError("irreducibility of the zero polynomial");
  IrreducibilityVerdict v;
  const auto split = content_primitive(f);
  const Field& F = f.field();
  if (f.degree() < 1) return v;
  if (!split.content.is_constant()) {
    v.factor = MultiPoly::constant(F, f.nvars(), split.content);
    return v;
  }
  MultiPoly H = split.primitive;
  const bool affine = !H.is_homogeneous();
  const int nv = f.nvars();
  if (affine) {
    if (nv >= kMaxVars) throw PreconditionError("no free variable slot to homogenize");
    H = homogenize(H.with_nvars(nv + 1), nv);
  }
  const int d = H.degree();
  if (d == 1) {
    v.irreducible = true;
    return v;
  }
  int tested = 0;
  for (int e = 1; e <= prime_cap && tested < kCertificatePrimes; ++e) {
    if (checked_pow(F.order(), e) > limits().max_field_order) break;
    for (const auto& p : primes_of_degree(F, e)) {
      if (tested++ == kCertificatePrimes) break;
      const ResiduePoly r = reduce_mod_prime(H, p);
      if (r.degree() != d) continue;
      try {
        if (is_irreducible(r)) {
          v.irreducible = true;
          v.certificate = p;
          return v;
        }
      } catch (const BudgetError&) {
        continue;
      }
    }
  }
  for (int k = 1; k <= d / 2; ++k) {
    if (auto g = exhaustive_fqt_divisor(H, k)) {
      v.factor = affine ? dehomogenize(*g, nv).with_nvars(nv) : *g;
      return v;
    }
  }
  v.irreducible = true;
  return v;
}

std::optional<PrimeElement> absolute_irreducibility_certificate(const MultiPoly& f, int cap) {
  if (f.is_zero()) throw PreconditionError("absolute irreducibility of the zero polynomial");
  const Field& F = f.field();
  const int d = f.degree();
  if (d < 1) return std::nullopt;
  int tested = 0;
  for (int e = 1; e <= cap && tested < kCertificatePrimes; ++e) {
    const std::uint64_t residue = checked_pow(F.order(), e);
    if (residue > limits().max_field_order) break;
    // The test extends the residue field to degree d.
    std::uint64_t top = 1;
    bool fits = true;
    for (int i = 0; i < d && fits; ++i) {
      fits = top <= limits().max_field_order / residue;
      top *= residue;
    }
    if (!fits) break;
    for (const auto& p : primes_of_degree(F, e)) {
      if (tested++ == kCertificatePrimes) break;
      const ResiduePoly r = reduce_mod_prime(f, p);
      if (r.degree() != d) continue;
      try {
        if (is_absolutely_irreducible(r)) return p;
      } catch (const BudgetError&) {
        continue;
      }
    }
  }
  return std::nullopt;
}

}  // namespace ffh
