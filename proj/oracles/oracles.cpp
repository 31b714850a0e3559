#include "oracles.hpp"

#include <algorithm>
#include <map>

#include "ffh/error.hpp"
#include "ffh/factor.hpp"

namespace ffh::oracle {

namespace {

int mobius(int n) {
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::int64_t ipow(std::uint64_t q, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::int64_t>(q);
  return r;
}

// Plain tuple enumeration of F_q[t]_{<ell}^n.
template <class Visit>
void for_each_tuple(const Field& F, int n, int ell, Visit visit) {
  std::vector<RingElement> elems;
  for (auto e : elements_below(F, ell)) elems.push_back(e);
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::vector<RingElement> x(static_cast<std::size_t>(n), elems[0]);
  for (;;) {
    for (std::size_t i = 0; i < idx.size(); ++i) x[i] = elems[idx[i]];
    visit(x);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == elems.size()) idx[i++] = 0;
    if (i == idx.size()) return;
  }
}

RingElement value_at(const MultiPoly& f, const std::vector<RingElement>& x) {
  RingElement acc(f.field());
  for (const auto& [m, c] : f.terms()) {
    RingElement v = c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (int k = 0; k < m.e[i]; ++k) v = v * x[i];
    }
    acc += v;
  }
  return acc;
}

struct Frac {
  RingElement num, den;
};

Frac make_frac(RingElement num, RingElement den) {
  if (num.is_zero()) return {num, RingElement::constant(den.field(), 1)};
  const RingElement g = gcd(num, den);
  num = num.exact_div(g);
  den = den.exact_div(g);
  const std::uint32_t inv = den.field().inv(den.leading());
  return {num.scale(inv), den.scale(inv)};
}

}  // namespace

std::uint64_t mobius_prime_count(std::uint64_t q, int n) {
  if (n < 1) throw PreconditionError("degree must be >= 1");
  std::int64_t sum = 0;
  for (int k = 1; k <= n; ++k) {
    if (n % k == 0) sum += mobius(k) * ipow(q, n / k);
  }
  return static_cast<std::uint64_t>(sum / n);
}

std::uint64_t sieve_prime_count(const Field& F, int n) {
  // Index monic polynomials of degree exactly k by their lower coefficients.
  auto monics = [&](int k) {
    std::vector<RingElement> out;
    for (auto low : elements_below(F, k)) out.push_back(low + RingElement::monomial(F, k));
    return out;
  };
  std::vector<std::vector<RingElement>> by_degree(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) by_degree[static_cast<std::size_t>(k)] = monics(k);
  std::set<std::vector<std::uint32_t>> composite;
  for (int a = 1; a <= n / 2; ++a) {
    for (const auto& u : by_degree[static_cast<std::size_t>(a)]) {
      for (const auto& v : by_degree[static_cast<std::size_t>(n - a)]) composite.insert((u * v).coeffs());
    }
  }
  return by_degree[static_cast<std::size_t>(n)].size() - composite.size();
}

RingElement cofactor_determinant(const PolyMatrix& A) {
  if (A.rows() != A.cols()) throw PreconditionError("determinant of a non-square matrix");
  const int n = A.rows();
  if (n == 0) return RingElement::constant(A.field(), 1);
  if (n == 1) return A(0, 0);
  RingElement det(A.field());
  std::vector<int> rows;
  for (int i = 1; i < n; ++i) rows.push_back(i);
  for (int j = 0; j < n; ++j) {
    if (A(0, j).is_zero()) continue;
    std::vector<int> cols;
    for (int k = 0; k < n; ++k) {
      if (k != j) cols.push_back(k);
    }
    const RingElement minor = A(0, j) * cofactor_determinant(A.submatrix(rows, cols));
    det = j % 2 ? det - minor : det + minor;
  }
  return det;
}

int fraction_rank(const PolyMatrix& A) {
  const Field& F = A.field();
  std::vector<std::vector<Frac>> M(static_cast<std::size_t>(A.rows()));
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) M[static_cast<std::size_t>(i)].push_back({A(i, j), RingElement::constant(F, 1)});
  }
  int r = 0;
  for (int c = 0; c < A.cols() && r < A.rows(); ++c) {
    int p = r;
    while (p < A.rows() && M[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)].num.is_zero()) ++p;
    if (p == A.rows()) continue;
    std::swap(M[static_cast<std::size_t>(r)], M[static_cast<std::size_t>(p)]);
    const auto& piv = M[static_cast<std::size_t>(r)];
    for (int i = r + 1; i < A.rows(); ++i) {
      auto& row = M[static_cast<std::size_t>(i)];
      const Frac& lead = row[static_cast<std::size_t>(c)];
      if (lead.num.is_zero()) continue;
      // factor = lead / pivot
      const Frac factor = make_frac(lead.num * piv[static_cast<std::size_t>(c)].den, lead.den * piv[static_cast<std::size_t>(c)].num);
      for (int j = c; j < A.cols(); ++j) {
        const Frac& a = row[static_cast<std::size_t>(j)];
        const Frac& b = piv[static_cast<std::size_t>(j)];
        // a - factor * b
        const RingElement num = a.num * factor.den * b.den - factor.num * b.num * a.den;
        row[static_cast<std::size_t>(j)] = make_frac(num, a.den * factor.den * b.den);
      }
    }
    ++r;
  }
  return r;
}

int min_kernel_degree(const PolyMatrix& A, int max_k) {
  const Field& F = A.field();
  for (int k = 0; k <= max_k; ++k) {
    const std::size_t w = static_cast<std::size_t>(k) + 1;
    const std::size_t ncols = static_cast<std::size_t>(A.cols()) * w;
    const int N = std::max(0, A.max_degree());
    std::vector<std::vector<std::uint32_t>> rows;
    for (int i = 0; i < A.rows(); ++i) {
      for (int e = 0; e <= N + k; ++e) {
        std::vector<std::uint32_t> row(ncols, 0);
        for (int j = 0; j < A.cols(); ++j) {
          for (int l = 0; l <= k; ++l) row[static_cast<std::size_t>(j) * w + static_cast<std::size_t>(l)] = A(i, j).coeff(e - l);
        }
        rows.push_back(std::move(row));
      }
    }
    // Rank over F_q by elimination; a nonzero solution exists iff rank < ncols.
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
      std::size_t p = r;
      while (p < rows.size() && rows[p][c] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[r], rows[p]);
      const std::uint32_t inv = F.inv(rows[r][c]);
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (!rows[i][c]) continue;
        const std::uint32_t f = F.mul(rows[i][c], inv);
        for (std::size_t j = c; j < ncols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
      }
      ++r;
    }
    if (r < ncols) return k;
  }
  return -1;
}

std::uint64_t brute_affine_count(const MultiPoly& f, int ell) {
  const int n = f.nvars() - 1;
  std::uint64_t count = 0;
  for_each_tuple(f.field(), n, ell, [&](const std::vector<RingElement>& x) {
    std::vector<RingElement> full{RingElement(f.field())};
    full.insert(full.end(), x.begin(), x.end());
    if (value_at(f, full).is_zero()) ++count;
  });
  return count;
}

std::set<std::vector<RingElement>> brute_projective_points(const MultiPoly& f, int ell) {
  std::set<std::vector<RingElement>> pts;
  for_each_tuple(f.field(), f.nvars(), ell, [&](const std::vector<RingElement>& x) {
    if (std::all_of(x.begin(), x.end(), [](const RingElement& c) { return c.is_zero(); })) return;
    if (!value_at(f, x).is_zero()) return;
    pts.insert(ProjectivePoint::canonicalize(x).coords());
  });
  return pts;
}

std::uint64_t brute_cone_count(const MultiPoly& f, int ell) {
  std::uint64_t count = 0;
  for_each_tuple(f.field(), f.nvars(), ell, [&](const std::vector<RingElement>& x) {
    if (std::all_of(x.begin(), x.end(), [](const RingElement& c) { return c.is_zero(); })) return;
    if (value_at(f, x).is_zero()) ++count;
  });
  return count;
}

int residue_classes(const std::vector<ProjectivePoint>& points, const PrimeElement& p) {
  // Two reductions are the same projective point iff all 2x2 minors vanish.
  const RingElement& P = p.value();
  std::vector<std::vector<RingElement>> reps;
  for (const auto& pt : points) {
    std::vector<RingElement> r;
    for (const auto& c : pt.coords()) r.push_back(c % P);
    bool seen = false;
    for (const auto& q : reps) {
      bool same = true;
      for (std::size_t i = 0; i < r.size() && same; ++i) {
        for (std::size_t j = i + 1; j < r.size() && same; ++j) same = ((r[i] * q[j] - r[j] * q[i]) % P).is_zero();
      }
      if (same) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(std::move(r));
  }
  return static_cast<int>(reps.size());
}

bool absolutely_irreducible_exhaustive(const ResiduePoly& g) {
  const int d = g.degree();
  if (d < 1) return false;
  for (int r = 1; r <= d; ++r) {
    const FieldEmbedding emb = extend_field(g.field(), r);
    const Factorization fac = factor_bruteforce(embed(g, emb), FactorStrategy::Exhaustive);
    if (fac.factors.size() != 1 || fac.factors.front().multiplicity != 1) return false;
  }
  return true;
}

}  // namespace ffh::oracle
