#include "ffh/polymatrix.hpp"

#include <algorithm>
#include <numeric>

#include "ffh/error.hpp"
#include "ffh/limits.hpp"
#include "ffh/monomial.hpp"

namespace ffh {

PolyMatrix::PolyMatrix(Field f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), RingElement(f));
}

PolyMatrix PolyMatrix::identity(Field f, int n) {
  PolyMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = RingElement::constant(f, 1);
  return m;
}

PolyMatrix PolyMatrix::from_rows(Field f, const std::vector<PolyVector>& rows) {
  if (rows.empty() || rows.front().empty()) throw PreconditionError("empty matrix");
  PolyMatrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols_) throw PreconditionError("ragged matrix rows");
    for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

int PolyMatrix::max_degree() const {
  int d = kNegInf;
  for (const auto& x : a_) d = std::max(d, x.degree());
  return d;
}

PolyVector PolyMatrix::column(int j) const {
  PolyVector v;
  for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix m(field_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
  }
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("matrix dimension mismatch");
  PolyMatrix m(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const RingElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  }
  return m;
}

PolyVector PolyMatrix::operator*(const PolyVector& x) const {
  if (static_cast<int>(x.size()) != cols_) throw PreconditionError("matrix-vector dimension mismatch");
  PolyVector y(static_cast<std::size_t>(rows_), RingElement(field_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) y[static_cast<std::size_t>(i)] += (*this)(i, j) * x[static_cast<std::size_t>(j)];
  }
  return y;
}

std::string PolyMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    if (i) out += ";";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += (*this)(i, j).to_string();
    }
  }
  return out;
}

int max_degree(const PolyVector& v) {
  int d = kNegInf;
  for (const auto& x : v) d = std::max(d, x.degree());
  return d;
}

bool is_zero_vector(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const RingElement& x) { return x.is_zero(); });
}

std::string to_string(const PolyVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + ")";
}

RingElement determinant(const PolyMatrix& A) {
  if (A.rows() != A.cols()) throw PreconditionError("determinant of a non-square matrix");
  const int n = A.rows();
  const Field& F = A.field();
  if (n == 0) return RingElement::constant(F, 1);
  PolyMatrix M = A;
  RingElement prev = RingElement::constant(F, 1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (M(k, k).is_zero()) {
      int swap = -1;
      for (int i = k + 1; i < n && swap < 0; ++i) {
        if (!M(i, k).is_zero()) swap = i;
      }
      if (swap < 0) return RingElement(F);
      for (int j = 0; j < n; ++j) std::swap(M(k, j), M(swap, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        M(i, j) = (M(k, k) * M(i, j) - M(i, k) * M(k, j)).exact_div(prev);
      }
      M(i, k) = RingElement(F);
    }
    prev = M(k, k);
  }
  RingElement d = M(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

void column_axpy(PolyMatrix& M, int dst, int src, const RingElement& c) {
  // col_dst -= c * col_src
  for (int i = 0; i < M.rows(); ++i) {
    if (!M(i, src).is_zero()) M(i, dst) -= c * M(i, src);
  }
}

void column_swap(PolyMatrix& M, int a, int b) {
  for (int i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
}

void column_scale(PolyMatrix& M, int j, std::uint32_t c) {
  for (int i = 0; i < M.rows(); ++i) M(i, j) = M(i, j).scale(c);
}

}  // namespace

HermiteResult hermite_form(const PolyMatrix& A) {
  const Field& F = A.field();
  HermiteResult res{A, PolyMatrix::identity(F, A.cols()), {}};
  PolyMatrix& H = res.H;
  PolyMatrix& U = res.U;
  int c = 0;
  for (int i = 0; i < H.rows() && c < H.cols(); ++i) {
    while (true) {
      int piv = -1;
      for (int j = c; j < H.cols(); ++j) {
        if (H(i, j).is_zero()) continue;
        if (piv < 0 || H(i, j).degree() < H(i, piv).degree()) piv = j;
      }
      if (piv < 0) break;
      bool others = false;
      for (int j = c; j < H.cols(); ++j) {
        if (j == piv || H(i, j).is_zero()) continue;
        const RingElement q = H(i, j) / H(i, piv);
        column_axpy(H, j, piv, q);
        column_axpy(U, j, piv, q);
        others = others || !H(i, j).is_zero();
      }
      if (others) continue;
      column_swap(H, c, piv);
      column_swap(U, c, piv);
      const std::uint32_t inv = F.inv(H(i, c).leading());
      column_scale(H, c, inv);
      column_scale(U, c, inv);
      for (int j = 0; j < c; ++j) {
        const RingElement q = H(i, j) / H(i, c);
        if (q.is_zero()) continue;
        column_axpy(H, j, c, q);
        column_axpy(U, j, c, q);
      }
      res.pivot_rows.push_back(i);
      ++c;
      break;
    }
  }
  return res;
}

std::vector<RingElement> smith_invariants(const PolyMatrix& A) {
  PolyMatrix M = A;
  const int m = M.rows(), n = M.cols();
  const Field& F = M.field();
  std::vector<RingElement> out;
  for (int k = 0; k < std::min(m, n); ++k) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = k; i < m; ++i) {
        for (int j = k; j < n; ++j) {
          if (M(i, j).is_zero()) continue;
          if (pi < 0 || M(i, j).degree() < M(pi, pj).degree()) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return out;
      for (int j = 0; j < n; ++j) std::swap(M(k, j), M(pi, j));
      column_swap(M, k, pj);
      bool dirty = false;
      for (int i = k + 1; i < m; ++i) {
        if (M(i, k).is_zero()) continue;
        const RingElement q = M(i, k) / M(k, k);
        for (int j = k; j < n; ++j) M(i, j) -= q * M(k, j);
        dirty = dirty || !M(i, k).is_zero();
      }
      for (int j = k + 1; j < n; ++j) {
        if (M(k, j).is_zero()) continue;
        const RingElement q = M(k, j) / M(k, k);
        column_axpy(M, j, k, q);
        dirty = dirty || !M(k, j).is_zero();
      }
      if (dirty) continue;
      // Pivot must divide the rest of the block; otherwise fold a row in.
      int bad = -1;
      for (int i = k + 1; i < m && bad < 0; ++i) {
        for (int j = k + 1; j < n && bad < 0; ++j) {
          if (!(M(i, j) % M(k, k)).is_zero()) bad = i;
        }
      }
      if (bad < 0) break;
      for (int j = k; j < n; ++j) M(k, j) += M(bad, j);
    }
    out.push_back(M(k, k).monic());
  }
  (void)F;
  return out;
}

namespace {

void next_subset(std::vector<int>& s, int n, bool& done) {
  const int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) {
    done = true;
    return;
  }
  ++s[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
}

constexpr std::uint64_t kMinorCrossCheckLimit = 4000;

}  // namespace

RingElement determinantal_divisor_by_minors(const PolyMatrix& A, int s) {
  if (s < 1 || s > std::min(A.rows(), A.cols())) throw PreconditionError("minor size out of range");
  RingElement g(A.field());
  std::vector<int> rows(static_cast<std::size_t>(s));
  std::iota(rows.begin(), rows.end(), 0);
  for (bool rdone = false; !rdone; next_subset(rows, A.rows(), rdone)) {
    std::vector<int> cols(static_cast<std::size_t>(s));
    std::iota(cols.begin(), cols.end(), 0);
    for (bool cdone = false; !cdone; next_subset(cols, A.cols(), cdone)) {
      const RingElement m = determinant(A.submatrix(rows, cols));
      if (m.is_zero()) continue;
      g = g.is_zero() ? m.monic() : gcd(g, m);
    }
  }
  return g;
}

RingElement determinantal_divisor(const PolyMatrix& A, int s) {
  if (s < 1 || s > std::min(A.rows(), A.cols())) throw PreconditionError("minor size out of range");
  const auto inv = smith_invariants(A);
  RingElement d(A.field());
  if (static_cast<int>(inv.size()) >= s) {
    d = RingElement::constant(A.field(), 1);
    for (int i = 0; i < s; ++i) d = d * inv[static_cast<std::size_t>(i)];
  }
  const std::uint64_t minors = binomial(A.rows(), s) * binomial(A.cols(), s);
  if (minors <= kMinorCrossCheckLimit) {
    const RingElement direct = determinantal_divisor_by_minors(A, s);
    if (!(direct == d)) {
      throw ConsistencyError("determinantal divisor disagrees: Smith form gives " + d.to_string() +
                             ", minors give " + direct.to_string());
    }
  }
  return d;
}

namespace {

int rank_over_field(std::vector<std::vector<std::uint32_t>> M, const Field& F) {
  const int m = static_cast<int>(M.size());
  const int n = m ? static_cast<int>(M[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m && p < 0; ++i) {
      if (M[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) p = i;
    }
    if (p < 0) continue;
    std::swap(M[static_cast<std::size_t>(r)], M[static_cast<std::size_t>(p)]);
    auto& row = M[static_cast<std::size_t>(r)];
    const std::uint32_t inv = F.inv(row[static_cast<std::size_t>(c)]);
    for (int j = c; j < n; ++j) row[static_cast<std::size_t>(j)] = F.mul(row[static_cast<std::size_t>(j)], inv);
    for (int i = r + 1; i < m; ++i) {
      auto& other = M[static_cast<std::size_t>(i)];
      const std::uint32_t f = other[static_cast<std::size_t>(c)];
      if (!f) continue;
      for (int j = c; j < n; ++j) {
        other[static_cast<std::size_t>(j)] = F.sub(other[static_cast<std::size_t>(j)], F.mul(f, row[static_cast<std::size_t>(j)]));
      }
    }
    ++r;
  }
  return r;
}

// Fraction-free echelon rank, used when no extension field is large enough.
int rank_fraction_free(const PolyMatrix& A) {
  PolyMatrix M = A;
  const int m = M.rows(), n = M.cols();
  RingElement prev = RingElement::constant(A.field(), 1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m && p < 0; ++i) {
      if (!M(i, c).is_zero()) p = i;
    }
    if (p < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(M(r, j), M(p, j));
    for (int i = r + 1; i < m; ++i) {
      for (int j = c + 1; j < n; ++j) M(i, j) = (M(r, c) * M(i, j) - M(i, c) * M(r, j)).exact_div(prev);
      M(i, c) = RingElement(A.field());
    }
    prev = M(r, c);
    ++r;
  }
  return r;
}

}  // namespace

int rank(const PolyMatrix& A, int upper_bound) {
  const int N = A.max_degree();
  if (N == kNegInf) return 0;
  const int full = std::min(A.rows(), A.cols());
  const int stop = upper_bound >= 0 ? std::min(full, upper_bound) : full;
  // A nonzero minor of size rank has degree <= full * N, so it survives at
  // one of any full * N + 1 distinct specialisations.
  const std::uint64_t points = static_cast<std::uint64_t>(full) * static_cast<std::uint64_t>(N) + 1;
  const Field& F = A.field();
  int e = 1;
  std::uint64_t size = F.order();
  while (size < points && size <= limits().max_field_order / F.order()) {
    size *= F.order();
    ++e;
  }
  if (size < points) return rank_fraction_free(A);
  const FieldEmbedding emb = extend_field(F, e);
  int best = 0;
  for (std::uint64_t x = 0; x < points && best < stop; ++x) {
    std::vector<std::vector<std::uint32_t>> M(static_cast<std::size_t>(A.rows()),
                                              std::vector<std::uint32_t>(static_cast<std::size_t>(A.cols())));
    for (int i = 0; i < A.rows(); ++i) {
      for (int j = 0; j < A.cols(); ++j) {
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = A(i, j).evaluate(emb, static_cast<std::uint32_t>(x));
      }
    }
    best = std::max(best, rank_over_field(std::move(M), emb.target));
  }
  return best;
}

namespace {

// Leading position: first index attaining the max degree.
int leading_position(const PolyVector& v) {
  const int d = max_degree(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].degree() == d) return static_cast<int>(i);
  }
  return -1;
}

void column_reduce(std::vector<PolyVector>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < basis.size() && !changed; ++a) {
      for (std::size_t b = 0; b < basis.size() && !changed; ++b) {
        if (a == b) continue;
        const int pa = leading_position(basis[a]), pb = leading_position(basis[b]);
        if (pa != pb) continue;
        const int da = max_degree(basis[a]), db = max_degree(basis[b]);
        if (da < db) continue;
        // basis[a] -= c t^(da-db) basis[b], cancelling the leading entry.
        const Field& F = basis[a][static_cast<std::size_t>(pa)].field();
        const std::uint32_t c = F.div(basis[a][static_cast<std::size_t>(pa)].leading(),
                                      basis[b][static_cast<std::size_t>(pb)].leading());
        const RingElement mult = RingElement::monomial(F, da - db, c);
        for (std::size_t i = 0; i < basis[a].size(); ++i) basis[a][i] -= mult * basis[b][i];
        changed = true;
      }
    }
  }
}

PolyVector normalized(PolyVector v) {
  const int p = leading_position(v);
  const Field& F = v[static_cast<std::size_t>(p)].field();
  const std::uint32_t inv = F.inv(v[static_cast<std::size_t>(p)].leading());
  for (auto& x : v) x = x.scale(inv);
  return v;
}

}  // namespace

std::vector<PolyVector> kernel_basis(const PolyMatrix& A) {
  const HermiteResult h = hermite_form(A);
  std::vector<PolyVector> basis;
  for (int j = static_cast<int>(h.pivot_rows.size()); j < A.cols(); ++j) basis.push_back(h.U.column(j));
  column_reduce(basis);
  for (auto& v : basis) v = normalized(std::move(v));
  std::stable_sort(basis.begin(), basis.end(), [](const PolyVector& a, const PolyVector& b) {
    if (max_degree(a) != max_degree(b)) return max_degree(a) < max_degree(b);
    return to_string(a) < to_string(b);
  });
  return basis;
}

PolyVector minimal_kernel_vector(const PolyMatrix& A) {
  const auto basis = kernel_basis(A);
  if (basis.empty()) throw PreconditionError("matrix has trivial kernel");
  return basis.front();
}

ThueSiegelResult thue_siegel_solve(const PolyMatrix& A) {
  const int s = A.rows(), r = A.cols();
  if (r <= s) throw PreconditionError("Thue-Siegel needs more columns than rows");
  if (rank(A) != s) throw PreconditionError("Thue-Siegel needs a matrix of full row rank");
  ThueSiegelResult res;
  auto& c = res.certificate;
  c.s = s;
  c.r = r;
  c.N = A.max_degree();
  const RingElement D = determinantal_divisor(A, s);
  if (D.is_zero()) throw ConsistencyError("full-rank matrix with vanishing maximal minors");
  c.deg_D = D.degree();
  res.x = minimal_kernel_vector(A);
  if (is_zero_vector(res.x) || !is_zero_vector(A * res.x)) throw ConsistencyError("kernel vector fails A x = 0");
  c.achieved = max_degree(res.x);
  c.bound = Rational(s * c.N - c.deg_D, r - s);
  c.within_bound = Rational(c.achieved) <= c.bound;
  const auto num = c.bound.numerator(), den = c.bound.denominator();
  const std::int64_t ceiled = num >= 0 ? (num + den - 1) / den : -((-num) / den);
  c.within_ceiled_bound = c.achieved <= ceiled;
  if (!c.within_bound) {
    throw ConsistencyError("solution degree " + std::to_string(c.achieved) + " exceeds (sN - deg D)/(r - s) = " +
                           std::to_string(num) + "/" + std::to_string(den) +
                           (c.within_ceiled_bound ? "; the ceiled bound holds" : "; the ceiled bound fails too"));
  }
  return res;
}

}  // namespace ffh
