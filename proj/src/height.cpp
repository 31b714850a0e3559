#include "ffh/height.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <thread>

#include "ffh/error.hpp"
#include "ffh/limits.hpp"

namespace ffh {

int height(const std::vector<RingElement>& x) {
  int h = kNegInf;
  for (const auto& c : x) h = std::max(h, c.degree());
  return h;
}

ProjectivePoint ProjectivePoint::canonicalize(std::vector<RingElement> raw) {
  RingElement g;
  bool any = false;
  for (const auto& c : raw) {
    if (c.is_zero()) continue;
    g = any ? gcd(g, c) : c.monic();
    any = true;
  }
  if (!any) throw PreconditionError("the zero vector is not a projective point");
  std::uint32_t scale = 0;
  ProjectivePoint p;
  for (auto& c : raw) {
    RingElement v = c.is_zero() ? c : c.exact_div(g);
    if (!v.is_zero() && scale == 0) scale = v.field().inv(v.leading());
    p.x_.push_back(std::move(v));
  }
  for (auto& c : p.x_) c = c.scale(scale);
  return p;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = saturating_mul(r, q);
  return r;
}

unsigned worker_count(const EnumerationOptions& opt, std::uint64_t total) {
  unsigned t = opt.threads ? opt.threads : limits().threads;
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  // Small searches are not worth the thread start-up.
  if (total < 4096) t = 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(1, total / 1024)));
}

// Zeros of a polynomial system over a product of candidate lists, each
// coordinate ranging over indices into a shared table of F_q[t]_{<ell}.
class SystemEvaluator {
 public:
  SystemEvaluator(const std::vector<MultiPoly>& system, const ElementsBelow& elems) {
    if (system.empty()) throw PreconditionError("empty polynomial system");
    nvars_ = system.front().nvars();
    std::vector<int> top(static_cast<std::size_t>(nvars_), 0);
    for (const auto& f : system) {
      std::vector<Term> terms;
      for (const auto& [m, c] : f.terms()) terms.push_back({c, m});
      system_.push_back(std::move(terms));
      for (int i = 0; i < nvars_; ++i) top[static_cast<std::size_t>(i)] = std::max(top[static_cast<std::size_t>(i)], f.degree_in(i));
    }
    const int maxdeg = *std::max_element(top.begin(), top.end());
    powers_.resize(elems.size());
    for (std::uint64_t k = 0; k < elems.size(); ++k) {
      const RingElement x = elems[k];
      auto& row = powers_[k];
      row.push_back(RingElement::constant(x.field(), 1));
      for (int e = 1; e <= maxdeg; ++e) row.push_back(row.back() * x);
    }
  }

  bool vanishes(const std::vector<std::uint32_t>& idx) const {
    for (const auto& terms : system_) {
      if (terms.empty()) continue;
      RingElement acc(terms.front().c.field());
      for (const auto& t : terms) {
        RingElement v = t.c;
        for (int i = 0; i < nvars_; ++i) {
          const int e = t.m.e[static_cast<std::size_t>(i)];
          if (e) v = v * powers_[idx[static_cast<std::size_t>(i)]][static_cast<std::size_t>(e)];
          if (v.is_zero()) break;
        }
        acc += v;
      }
      if (!acc.is_zero()) return false;
    }
    return true;
  }

 private:
  struct Term {
    RingElement c;
    Monomial m;
  };
  int nvars_ = 0;
  std::vector<std::vector<Term>> system_;
  std::vector<std::vector<RingElement>> powers_;
};

// Runs `visit(idx)` over the product of candidate lists, split into contiguous
// index blocks across threads; hits are merged in block order.
std::vector<std::vector<std::uint32_t>> product_search(
    const std::vector<const std::vector<std::uint32_t>*>& lists, const SystemEvaluator& ev,
    const std::function<bool(const std::vector<std::uint32_t>&)>& filter, const EnumerationOptions& opt,
    bool collect, std::uint64_t& count) {
  std::uint64_t total = 1;
  for (const auto* l : lists) total = saturating_mul(total, l->size());
  if (total > limits().enumeration_candidates) {
    throw BudgetError("enumeration of " + std::to_string(total) + " candidates exceeds the budget of " +
                      std::to_string(limits().enumeration_candidates));
  }
  const std::size_t n = lists.size();
  const unsigned workers = worker_count(opt, total);
  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::vector<std::vector<std::uint32_t>>> hits(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    if (lo >= hi) return;
    std::vector<std::size_t> pos(n);
    std::uint64_t rest = lo;
    for (std::size_t i = n; i-- > 0;) {
      pos[i] = static_cast<std::size_t>(rest % lists[i]->size());
      rest /= lists[i]->size();
    }
    std::vector<std::uint32_t> idx(n);
    for (std::uint64_t k = lo; k < hi; ++k) {
      for (std::size_t i = 0; i < n; ++i) idx[i] = (*lists[i])[pos[i]];
      if ((!filter || filter(idx)) && ev.vanishes(idx)) {
        ++counts[w];
        if (collect) hits[w].push_back(idx);
      }
      for (std::size_t i = n; i-- > 0;) {
        if (++pos[i] < lists[i]->size()) break;
        pos[i] = 0;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::vector<std::uint32_t>> out;
  count = 0;
  for (unsigned w = 0; w < workers; ++w) {
    count += counts[w];
    for (auto& h : hits[w]) out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::uint32_t> iota_list(std::uint64_t n) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
  return v;
}

void check_table(const Field& F, int ell) {
  if (ell < 0) throw PreconditionError("height bound must be >= 0");
  if (saturating_pow(F.order(), ell) > std::numeric_limits<std::uint32_t>::max()) {
    throw BudgetError("F_q[t]_{<ell} is too large to tabulate");
  }
}

void check_affine(const MultiPoly& f) {
  if (f.nvars() < 2) throw PreconditionError("affine polynomials need at least one of x1..xn");
  if (f.degree_in(0) > 0) throw PreconditionError("affine polynomials must not involve x0");
}

AffineCount affine_system(const std::vector<MultiPoly>& system, int ell, const EnumerationOptions& opt) {
  const Field& F = system.front().field();
  check_table(F, ell);
  const int n = system.front().nvars() - 1;
  const ElementsBelow elems(F, ell);
  if (saturating_pow(elems.size(), n) > limits().enumeration_candidates) {
    throw BudgetError("affine enumeration of q^(ell n) candidates exceeds the budget");
  }
  const SystemEvaluator ev(system, elems);
  const auto all = iota_list(elems.size());
  const std::vector<std::uint32_t> zero{0};
  // Slot 0 is the homogenizing variable and stays at zero.
  std::vector<const std::vector<std::uint32_t>*> lists(static_cast<std::size_t>(n) + 1, &all);
  lists[0] = &zero;
  AffineCount out;
  const auto hits = product_search(lists, ev, nullptr, opt, opt.collect_points, out.count);
  for (const auto& h : hits) {
    AffinePoint p;
    for (std::size_t i = 1; i < h.size(); ++i) p.x.push_back(elems[h[i]]);
    out.points.push_back(std::move(p));
  }
  return out;
}

}  // namespace

AffineCount enumerate_affine(const MultiPoly& f, int ell, const EnumerationOptions& opt) {
  check_affine(f);
  return affine_system({f}, ell, opt);
}

std::uint64_t projective_candidates(const Field& f, int n, int ell) {
  if (ell < 1) return 0;
  const std::uint64_t q = f.order();
  const std::uint64_t monic = (saturating_pow(q, ell) - 1) / (q - 1);
  std::uint64_t total = 0;
  for (int i = 0; i < n; ++i) total += saturating_mul(monic, saturating_pow(q, ell * (n - 1 - i)));
  return total;
}

ProjectiveCount enumerate_projective(const MultiPoly& f, int ell, const EnumerationOptions& opt) {
  if (!f.is_homogeneous()) throw PreconditionError("projective enumeration needs a homogeneous polynomial");
  const int n = f.nvars();
  if (n < 1) throw PreconditionError("projective enumeration needs at least one variable");
  const Field& F = f.field();
  ProjectiveCount out;
  if (ell < 1) return out;
  check_table(F, ell);
  if (projective_candidates(F, n, ell) > limits().enumeration_candidates) {
    throw BudgetError("projective enumeration exceeds the candidate budget");
  }
  const ElementsBelow elems(F, ell);
  const SystemEvaluator ev({f}, elems);
  const auto all = iota_list(elems.size());
  const std::vector<std::uint32_t> zero{0};
  std::vector<std::uint32_t> monic;
  for (std::uint64_t i = 0; i < elems.size(); ++i) {
    if (elems[i].is_monic()) monic.push_back(static_cast<std::uint32_t>(i));
  }
  std::vector<int> degree(elems.size());
  for (std::uint64_t i = 0; i < elems.size(); ++i) degree[i] = elems[i].degree();
  auto coprime = [&](const std::vector<std::uint32_t>& idx) {
    RingElement g;
    bool any = false;
    for (auto i : idx) {
      if (i == 0) continue;
      if (degree[i] == 0) return true;
      g = any ? gcd(g, elems[i]) : elems[i];
      any = true;
      if (g.degree() == 0) return true;
    }
    return any && g.degree() == 0;
  };
  for (int lead = 0; lead < n; ++lead) {
    std::vector<const std::vector<std::uint32_t>*> lists;
    for (int i = 0; i < n; ++i) lists.push_back(i < lead ? &zero : i == lead ? &monic : &all);
    std::uint64_t c = 0;
    const auto hits = product_search(lists, ev, coprime, opt, opt.collect_points, c);
    out.count += c;
    for (const auto& h : hits) {
      std::vector<RingElement> x;
      for (auto i : h) x.push_back(elems[i]);
      out.points.push_back(ProjectivePoint::canonicalize(std::move(x)));
    }
  }
  return out;
}

std::uint64_t line_count(const AffineLine& L, int ell) {
  if (L.base.size() != L.direction.size() || L.base.empty()) throw PreconditionError("line dimension mismatch");
  if (height(L.direction) == kNegInf) throw PreconditionError("line direction must be nonzero");
  if (height(L.base) >= ell) throw PreconditionError("line base point must have height below ell");
  const Field& F = L.direction.front().field();
  const int k = std::max(0, ell - height(L.direction));
  const ElementsBelow lambdas(F, k);
  if (lambdas.size() > limits().enumeration_candidates) throw BudgetError("line enumeration exceeds the budget");
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < lambdas.size(); ++i) {
    const RingElement lam = lambdas[i];
    bool ok = true;
    for (std::size_t j = 0; j < L.base.size() && ok; ++j) ok = (L.base[j] + lam * L.direction[j]).degree() < ell;
    if (ok) ++count;
  }
  return count;
}

TrivialBound trivial_bound_check(std::uint64_t count, int d, int m, std::uint64_t q, int ell) {
  TrivialBound tb;
  tb.count = count;
  tb.bound = saturating_mul(static_cast<std::uint64_t>(std::max(d, 0)), saturating_pow(q, ell * m));
  tb.holds = count <= tb.bound;
  const auto cap = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  tb.margin = tb.holds ? static_cast<std::int64_t>(std::min(tb.bound - count, cap))
                       : -static_cast<std::int64_t>(std::min(count - tb.bound, cap));
  return tb;
}

std::vector<SliceCount> slice_counts(const MultiPoly& f, const std::vector<RingElement>& a, int ell, int range) {
  check_affine(f);
  if (static_cast<int>(a.size()) != f.nvars() - 1) throw PreconditionError("slice form dimension mismatch");
  if (height(a) == kNegInf) throw PreconditionError("slice form must be nonzero");
  std::vector<SliceCount> out;
  if (range < 0) return out;
  const ElementsBelow alphas(f.field(), range);
  MultiPoly linear(f.field(), f.nvars());
  for (std::size_t i = 0; i < a.size(); ++i) linear.add_term(Monomial::variable(static_cast<int>(i) + 1), a[i]);
  for (std::uint64_t k = 0; k < alphas.size(); ++k) {
    const RingElement alpha = alphas[k];
    MultiPoly slice = linear;
    slice.add_term(Monomial{}, -alpha);
    out.push_back({alpha, affine_system({f, slice}, ell, {}).count});
  }
  return out;
}

}  // namespace ffh
