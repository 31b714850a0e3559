#include "ffh/determinant_method.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffh/error.hpp"
#include "ffh/factor.hpp"
#include "ffh/limits.hpp"
#include "ffh/monomial.hpp"
#include "ffh/text.hpp"

namespace ffh {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Small: return "small";
    case Regime::Large: return "large";
    case Regime::VeryLarge: return "very-large";
  }
  return "unknown";
}

CharRegime classify_regime(std::uint64_t c, int d, double eps) {
  if (!is_prime_integer(c)) throw PreconditionError("characteristic must be prime");
  if (d < 1) throw PreconditionError("degree must be >= 1");
  CharRegime r{Regime::Large, c, d, eps};
  const auto dd = static_cast<std::uint64_t>(d);
  if (c <= dd * (dd - 1)) {
    r.tag = Regime::Small;
  } else if ((1.0 - eps) * std::log(static_cast<double>(c)) > std::log(27.0 * std::pow(static_cast<double>(d), 4))) {
    r.tag = Regime::VeryLarge;
  }
  return r;
}

Rational select(const RegimeTriple& t, Regime r) {
  switch (r) {
    case Regime::Small: return t.a;
    case Regime::Large: return t.b;
    case Regime::VeryLarge: return t.c;
  }
  return t.a;
}

int beta(std::uint64_t q, int d, Regime r) {
  if (d < 1) throw PreconditionError("degree must be >= 1");
  if (q < 2) throw PreconditionError("field order must be >= 2");
  if (r == Regime::VeryLarge) return 0;
  using boost::multiprecision::cpp_int;
  const cpp_int d14 = boost::multiprecision::pow(cpp_int(d), 14);
  const cpp_int q3 = cpp_int(q) * q * q;
  int k = 0;
  cpp_int power = q3;
  while (power <= d14) {
    ++k;
    power *= q3;
  }
  return k;
}

std::vector<PrimeElement> bad_primes(const MultiPoly& f, int cap) {
  if (f.degree() < 1) throw PreconditionError("bad primes need a nonconstant polynomial");
  if (!is_primitive(f)) throw PreconditionError("bad primes need a primitive polynomial");
  if (!absolute_irreducibility_certificate(f, limits().prime_degree_cap)) {
    throw PreconditionError("polynomial is not certified absolutely irreducible");
  }
  const Field& F = f.field();
  const int d = f.degree();
  std::vector<PrimeElement> bad;
  for (int k = 1; k <= cap; ++k) {
    const std::uint64_t residue = checked_pow(F.order(), k);
    if (checked_pow(residue, d) > limits().max_field_order) {
      throw BudgetError("bad prime search at degree " + std::to_string(k) + " needs a field of order " +
                        std::to_string(residue) + "^" + std::to_string(d) + " beyond the field budget");
    }
    for (const auto& p : primes_of_degree(F, k)) {
      if (!is_absolutely_irreducible(reduce_mod_prime(f, p))) bad.push_back(p);
    }
  }
  return bad;
}

Rational b_truncated(const std::vector<PrimeElement>& bad, int cap, int beta_value) {
  Rational sum(0);
  for (const auto& p : bad) {
    const int k = p.degree();
    if (k <= beta_value || k > cap) continue;
    const std::uint64_t norm = checked_pow(p.value().field().order(), k);
    sum += Rational(k, static_cast<std::int64_t>(norm));
  }
  return sum;
}

Rational b_truncated(const MultiPoly& f, int cap, Regime r) {
  const int b = beta(f.field().order(), f.degree(), r);
  return b_truncated(bad_primes(f, cap), cap, b);
}

namespace {

using Coords = std::vector<RingElement>;

PolyMatrix evaluation_matrix(const Field& F, const std::vector<Coords>& points, const std::vector<Monomial>& mons) {
  PolyMatrix A(F, static_cast<int>(points.size()), static_cast<int>(mons.size()));
  int top = 0;
  for (const auto& m : mons) top = std::max(top, m.degree());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Coords& x = points[i];
    std::vector<std::vector<RingElement>> pw(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
      pw[v].push_back(RingElement::constant(F, 1));
      for (int e = 1; e <= top; ++e) pw[v].push_back(pw[v].back() * x[v]);
    }
    for (std::size_t j = 0; j < mons.size(); ++j) {
      RingElement val = RingElement::constant(F, 1);
      for (std::size_t v = 0; v < x.size(); ++v) {
        const int e = mons[j].e[v];
        if (e) val = val * pw[v][static_cast<std::size_t>(e)];
      }
      A(static_cast<int>(i), static_cast<int>(j)) = std::move(val);
    }
  }
  return A;
}

std::uint64_t basis_size(int D, int nvars) {
  return D < 0 ? 0 : binomial(D + nvars - 1, nvars - 1);
}

// Basis of the right kernel of a dense matrix over F, from its reduced
// echelon form; one vector per free column, in column order.
std::vector<std::vector<std::uint32_t>> field_kernel(std::vector<std::vector<std::uint32_t>> M, std::size_t ncols,
                                                     const Field& F) {
  std::vector<int> pivot_of_col(ncols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < M.size(); ++c) {
    std::size_t p = r;
    while (p < M.size() && M[p][c] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[r], M[p]);
    auto& row = M[r];
    const std::uint32_t inv = F.inv(row[c]);
    for (std::size_t j = c; j < ncols; ++j) row[j] = F.mul(row[j], inv);
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c] == 0) continue;
      auto& other = M[i];
      const std::uint32_t k = other[c];
      for (std::size_t j = c; j < ncols; ++j) {
        if (row[j]) other[j] = F.sub(other[j], F.mul(k, row[j]));
      }
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<std::uint32_t> v(ncols, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = F.neg(M[static_cast<std::size_t>(pivot_of_col[c])][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Forms sum_b c_b b with deg c_b <= delta vanishing at the points (given by
// their monomial values), as F_q-vectors indexed by (b, j) -> b * (delta+1) + j.
std::vector<std::vector<std::uint32_t>> bounded_kernel(const PolyMatrix& values, int delta) {
  const Field& F = values.field();
  const auto width = static_cast<std::size_t>(delta + 1);
  const std::size_t ncols = static_cast<std::size_t>(values.cols()) * width;
  std::vector<std::vector<std::uint32_t>> rows;
  for (int i = 0; i < values.rows(); ++i) {
    int top = kNegInf;
    for (int b = 0; b < values.cols(); ++b) top = std::max(top, values(i, b).degree());
    if (top == kNegInf) continue;
    for (int k = 0; k <= top + delta; ++k) {
      std::vector<std::uint32_t> row(ncols, 0);
      bool any = false;
      for (int b = 0; b < values.cols(); ++b) {
        const RingElement& v = values(i, b);
        for (int j = 0; j <= delta; ++j) {
          const std::uint32_t c = k - j >= 0 ? v.coeff(k - j) : 0;
          if (c) {
            row[static_cast<std::size_t>(b) * width + static_cast<std::size_t>(j)] = c;
            any = true;
          }
        }
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  constexpr std::uint64_t kMaxEntries = 60'000'000;
  if (static_cast<std::uint64_t>(rows.size()) * ncols > kMaxEntries) {
    throw BudgetError("linear system for the auxiliary polynomial is too large (" + std::to_string(rows.size()) + " x " +
                      std::to_string(ncols) + ")");
  }
  return field_kernel(std::move(rows), ncols, F);
}

MultiPoly form_from_vector(const Field& F, int nvars, const std::vector<Monomial>& mons,
                           const std::vector<std::uint32_t>& v, int delta) {
  const auto width = static_cast<std::size_t>(delta + 1);
  MultiPoly g(F, nvars);
  for (std::size_t b = 0; b < mons.size(); ++b) {
    std::vector<std::uint32_t> c(v.begin() + static_cast<std::ptrdiff_t>(b * width),
                                 v.begin() + static_cast<std::ptrdiff_t>((b + 1) * width));
    g.add_term(mons[b], RingElement(F, std::move(c)));
  }
  return g;
}

// Primitive, leading coefficient with leading F_q-coefficient 1.
MultiPoly normalize(const MultiPoly& g) {
  MultiPoly p = content_primitive(g).primitive;
  const std::uint32_t lead = p.leading_coeff().leading();
  return p.scale(RingElement::constant(p.field(), p.field().inv(lead)));
}

}  // namespace

PolyMatrix vanishing_matrix(const std::vector<ProjectivePoint>& points, int D) {
  if (points.empty()) throw PreconditionError("vanishing matrix needs at least one point");
  if (D < 0) throw PreconditionError("degree must be >= 0");
  const Field F = points.front().coords().front().field();
  const int n = static_cast<int>(points.front().coords().size());
  std::vector<Coords> pts;
  for (const auto& p : points) {
    if (static_cast<int>(p.coords().size()) != n) throw PreconditionError("points of different dimensions");
    pts.push_back(p.coords());
  }
  return evaluation_matrix(F, pts, monomial_basis(D, n));
}

ValuationReport valuation_check(const std::vector<ProjectivePoint>& points, const PrimeElement& p, int D) {
  if (points.empty()) throw PreconditionError("valuation check needs at least one point");
  const int n = static_cast<int>(points.front().coords().size());
  ValuationReport rep;
  rep.s = static_cast<int>(points.size());
  if (static_cast<std::uint64_t>(rep.s) > basis_size(D, n)) {
    throw PreconditionError("more points than monomials of degree " + std::to_string(D));
  }
  const ResidueMap rm = residue_map(p);
  std::set<std::vector<std::uint32_t>> classes;
  for (const auto& pt : points) {
    std::vector<std::uint32_t> r;
    for (const auto& c : pt.coords()) r.push_back(rm(c));
    // Coprime coordinates never all vanish mod p; scale the first nonzero to 1.
    const auto lead = std::find_if(r.begin(), r.end(), [](std::uint32_t v) { return v != 0; });
    if (lead == r.end()) throw ConsistencyError("canonical point reduced to zero modulo a prime");
    const std::uint32_t inv = rm.residue.inv(*lead);
    for (auto& v : r) v = rm.residue.mul(v, inv);
    classes.insert(std::move(r));
  }
  rep.residue_classes = static_cast<int>(classes.size());
  rep.oracle = rep.s - rep.residue_classes;
  const RingElement Ds = determinantal_divisor(vanishing_matrix(points, D), rep.s);
  if (!Ds.is_zero()) rep.actual = valuation(Ds, p.value());
  rep.holds = !rep.actual || *rep.actual >= rep.oracle;
  if (!rep.holds) {
    throw ConsistencyError("determinantal divisor has valuation " + std::to_string(*rep.actual) +
                           " below the congruence bound " + std::to_string(rep.oracle));
  }
  return rep;
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::Thm1: return "thm1";
    case BoundKind::Thm2: return "thm2";
    case BoundKind::Thm3General: return "thm3-general";
    case BoundKind::Thm3Strong: return "thm3-strong";
    case BoundKind::MainThm: return "main-thm";
  }
  return "unknown";
}

BoundKind parse_bound_kind(const std::string& s) {
  for (auto k : {BoundKind::Thm1, BoundKind::Thm2, BoundKind::Thm3General, BoundKind::Thm3Strong, BoundKind::MainThm}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError("unknown bound '" + s + "'", 0);
}

double bound_value(const BoundParams& P, BoundKind which) {
  if (P.d < 1 || P.ell < 1 || P.n < 1 || P.q < 2 || P.eps < 0 || P.C <= 0) {
    throw PreconditionError("bound parameters out of range");
  }
  const double q = static_cast<double>(P.q), d = static_cast<double>(P.d), n = static_cast<double>(P.n);
  const double l1 = static_cast<double>(P.ell - 1), ell = static_cast<double>(P.ell);
  auto pick = [&](Rational a, Rational b, Rational c) { return boost::rational_cast<double>(select({a, b, c}, P.regime)); };
  const Rational inv_n(1, P.n);
  const double lead = std::pow(q, 1 + P.eps);
  switch (which) {
    case BoundKind::Thm1:
      return P.C * lead * std::pow(d, pick(8, Rational(14, 3), 4)) * std::pow(q, 2 * l1 / d);
    case BoundKind::Thm2:
      return P.C * lead * std::pow(d, pick(7, 3, 3)) * std::pow(q, l1 / d) * (ell + std::pow(d, pick(1, Rational(5, 3), 1)));
    case BoundKind::Thm3General:
      return P.C * std::pow(q, 9 + P.eps) * std::pow(d, P.thm3_exponent) * std::pow(q, ell * (n - 1));
    case BoundKind::Thm3Strong:
      return P.C * lead * std::pow(d, P.thm3_exponent) * std::pow(q, ell * (n - 1));
    case BoundKind::MainThm: {
      const double height_term = std::pow(q, (n + 1) * l1 / (n * std::pow(d, 1 / n)));
      const double coeff_term = std::pow(q, P.beta) * std::pow(d, -1 / n) * P.b_f /
                                std::pow(P.norm_f, 1 / (n * std::pow(d, 1 + 1 / n)));
      const double middle = std::pow(q, P.eps) * std::pow(d, 1 - 1 / n) * l1;
      const double tail = lead * std::pow(d, pick(7, Rational(14, 3) - inv_n, 3));
      return P.C * (lead * height_term * coeff_term + middle + tail);
    }
  }
  return 0;
}

AuxResult auxiliary_poly(const MultiPoly& f, int ell, const AuxOptions& opt) {
  if (!f.is_homogeneous() || f.degree() < 1) throw PreconditionError("auxiliary polynomial needs a nonconstant form");
  if (!is_primitive(f)) throw PreconditionError("auxiliary polynomial needs a primitive form");
  if (ell < 1) throw PreconditionError("height bound must be >= 1");
  const IrreducibilityVerdict verdict = irreducibility_over_fqt(f, limits().prime_degree_cap);
  if (!verdict.irreducible) {
    throw PreconditionError("form is reducible, with factor " +
                            (verdict.factor ? to_string(*verdict.factor) : std::string("unknown")));
  }
  const Field& F = f.field();
  const int n = f.nvars(), d = f.degree();

  AuxResult res;
  EnumerationOptions eo = opt.enumeration;
  eo.collect_points = true;
  res.points = enumerate_projective(f, ell, eo).points;

  const LeadingTransform lt = leading_transform(f);
  res.alpha = lt.alpha;
  const MultiPoly& ft = lt.transformed;
  const int norm_ft = log_norm(ft);
  // f(y) = 0 iff ft(y0, y_i - alpha_i y0) = 0.
  std::vector<Coords> moved;
  for (const auto& p : res.points) {
    Coords x = p.coords();
    for (int i = 1; i < n; ++i) x[static_cast<std::size_t>(i)] -= lt.alpha[static_cast<std::size_t>(i)] * x[0];
    moved.push_back(std::move(x));
  }

  std::optional<MultiPoly> witness;
  for (int M = 1; M <= opt.cap_M && !witness; ++M) {
    const std::vector<Monomial> mons = monomial_basis(M, n);
    MRecord rec;
    rec.M = M;
    rec.target = static_cast<int>(mons.size() - basis_size(M - d, n));
    PolyMatrix A = moved.empty() ? PolyMatrix() : evaluation_matrix(F, moved, mons);
    rec.rank = moved.empty() ? 0 : rank(A, rec.target);
    if (rec.rank > rec.target) {
      throw ConsistencyError("vanishing matrix rank exceeds the count of forms modulo multiples of f");
    }
    res.ranks.push_back(rec);
    if (rec.rank == rec.target) continue;

    // A witness exists over F_q(t). Find the least coefficient degree delta
    // at which one appears: the forms with deg c_b <= delta vanishing on the
    // points contain the multiples h ft with deg h <= delta - ||ft|| and
    // exceed them exactly when a witness of that degree exists.
    const std::uint64_t lower = basis_size(M - d, n);
    const int N = moved.empty() ? 0 : std::max(0, A.max_degree());
    const int delta_max = rec.rank * N;
    auto attempt = [&](int delta) -> std::optional<MultiPoly> {
      if (moved.empty()) {
        std::vector<std::uint32_t> v(mons.size() * static_cast<std::size_t>(delta + 1), 0);
        v[0] = 1;
        return form_from_vector(F, n, mons, v, delta);
      }
      const auto kernel = bounded_kernel(A, delta);
      const std::uint64_t multiples = lower * static_cast<std::uint64_t>(std::max(0, delta - norm_ft + 1));
      if (kernel.size() <= multiples) return std::nullopt;
      for (const auto& v : kernel) {
        MultiPoly g = form_from_vector(F, n, mons, v, delta);
        if (!divide_exact(g, ft)) return g;
      }
      throw ConsistencyError("kernel exceeds the multiples of f but every basis vector is a multiple");
    };
    int lo = -1, hi = 0;
    std::optional<MultiPoly> found;
    while (!(found = attempt(hi))) {
      if (hi >= delta_max) throw ConsistencyError("no witness of coefficient degree <= " + std::to_string(delta_max));
      lo = hi;
      hi = std::min(delta_max, hi == 0 ? 1 : 2 * hi);
    }
    while (hi - lo > 1) {
      const int mid = lo + (hi - lo) / 2;
      if (auto g = attempt(mid)) {
        hi = mid;
        found = std::move(g);
      } else {
        lo = mid;
      }
    }
    res.M = M;
    res.t_degree = hi;
    std::vector<RingElement> back;
    for (const auto& a : lt.alpha) back.push_back(-a);
    witness = normalize(shift_homogeneous(*found, back));
  }
  if (!witness) {
    throw ConsistencyError("no auxiliary polynomial of degree <= " + std::to_string(opt.cap_M));
  }
  res.g = *witness;
  res.vanishing_verified = std::all_of(res.points.begin(), res.points.end(),
                                       [&](const ProjectivePoint& p) { return evaluate(res.g, p.coords()).is_zero(); });
  res.not_divisible_verified = !divide_exact(res.g, f).has_value();
  if (!res.vanishing_verified || !res.not_divisible_verified) {
    throw ConsistencyError("auxiliary polynomial failed verification");
  }
  res.bezout_holds = res.points.size() <= static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(res.M);
  if (opt.bound) {
    res.bound = bound_value(*opt.bound, BoundKind::MainThm);
    res.ratio = res.M / *res.bound;
  }
  return res;
}

namespace {

struct MaximalMinor {
  std::vector<int> rows, cols;
};

// Row and column indices of a nonsingular minor of size rank, by
// fraction-free elimination with column-order pivoting.
MaximalMinor maximal_minor(const PolyMatrix& A) {
  PolyMatrix M = A;
  std::vector<int> order(static_cast<std::size_t>(A.rows()));
  for (int i = 0; i < A.rows(); ++i) order[static_cast<std::size_t>(i)] = i;
  MaximalMinor out;
  RingElement prev = RingElement::constant(A.field(), 1);
  int r = 0;
  for (int c = 0; c < A.cols() && r < A.rows(); ++c) {
    int p = r;
    while (p < A.rows() && M(p, c).is_zero()) ++p;
    if (p == A.rows()) continue;
    for (int j = 0; j < A.cols(); ++j) std::swap(M(r, j), M(p, j));
    std::swap(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(p)]);
    for (int i = r + 1; i < A.rows(); ++i) {
      for (int j = c + 1; j < A.cols(); ++j) M(i, j) = (M(r, c) * M(i, j) - M(i, c) * M(r, j)).exact_div(prev);
      M(i, c) = RingElement(A.field());
    }
    prev = M(r, c);
    out.rows.push_back(order[static_cast<std::size_t>(r)]);
    out.cols.push_back(c);
    ++r;
  }
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

}  // namespace

LargeCoeffResult large_coeff_vanishing_poly(const MultiPoly& f, int ell, int d) {
  if (d < 2) throw PreconditionError("degree must be >= 2");
  if (f.nvars() < 2 || f.degree_in(0) > 0) throw PreconditionError("affine polynomials use x1..xn");
  if (f.degree() < 1) throw PreconditionError("polynomial must be nonconstant");
  const Field& F = f.field();
  const int m = f.nvars() - 1;
  std::vector<Monomial> mons;
  for (const auto& mon : monomials_up_to(d, m)) {
    Monomial shifted;
    for (int i = 0; i < m; ++i) shifted.e[static_cast<std::size_t>(i + 1)] = mon.e[static_cast<std::size_t>(i)];
    mons.push_back(shifted);
  }
  LargeCoeffResult res;
  res.theta = mons.size();
  res.log_norm_f = log_norm(f);
  res.coefficient_bound = static_cast<std::uint64_t>(ell) * static_cast<std::uint64_t>(d) * res.theta;
  res.inequality_holds = static_cast<std::uint64_t>(std::max(res.log_norm_f, 0)) <= res.coefficient_bound;

  EnumerationOptions eo;
  eo.collect_points = true;
  const AffineCount pts = enumerate_affine(f, ell, eo);
  res.points = pts.count;
  std::vector<Coords> rows;
  for (const auto& p : pts.points) {
    Coords x{RingElement(F)};
    x.insert(x.end(), p.x.begin(), p.x.end());
    rows.push_back(std::move(x));
  }
  const MultiPoly fp = content_primitive(f).primitive;
  const int theta = static_cast<int>(res.theta);
  MaximalMinor mm;
  PolyMatrix E;
  if (!rows.empty()) {
    E = evaluation_matrix(F, rows, mons);
    mm = maximal_minor(E);
  }
  res.rank = static_cast<int>(mm.rows.size());
  for (int extra = 0; extra < theta; ++extra) {
    if (std::find(mm.cols.begin(), mm.cols.end(), extra) != mm.cols.end()) continue;
    std::vector<int> cols = mm.cols;
    cols.push_back(extra);
    std::sort(cols.begin(), cols.end());
    PolyVector v(static_cast<std::size_t>(theta), RingElement(F));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rest;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j != k) rest.push_back(cols[j]);
      }
      RingElement minor = rest.empty() ? RingElement::constant(F, 1) : determinant(E.submatrix(mm.rows, rest));
      v[static_cast<std::size_t>(cols[k])] = k % 2 ? -minor : minor;
    }
    if (!rows.empty() && !is_zero_vector(E * v)) throw ConsistencyError("Cramer vector is not in the kernel");
    MultiPoly g(F, f.nvars());
    for (int j = 0; j < theta; ++j) g.add_term(mons[static_cast<std::size_t>(j)], v[static_cast<std::size_t>(j)]);
    if (g.is_zero()) throw ConsistencyError("Cramer vector vanished");
    if (!divide_exact(g, fp)) {
      res.g = normalize(g);
      return res;
    }
  }
  if (!res.inequality_holds) {
    throw ConsistencyError("every vanishing polynomial is a multiple of f, yet log_q||f|| = " +
                           std::to_string(res.log_norm_f) + " exceeds " + std::to_string(res.coefficient_bound));
  }
  return res;
}

MultiPoly hyperplane_slice(const MultiPoly& f, const std::vector<RingElement>& a) {
  const int n = f.nvars();
  if (static_cast<int>(a.size()) != n) throw PreconditionError("hyperplane dimension mismatch");
  int j = -1;
  for (int i = 0; i < n; ++i) {
    if (!a[static_cast<std::size_t>(i)].is_zero()) j = i;
  }
  if (j < 0) throw PreconditionError("hyperplane coefficients must not all vanish");
  const Field& F = f.field();
  std::vector<MultiPoly> images;
  MultiPoly dependent(F, n - 1);
  for (int i = 0, k = 0; i < n; ++i) {
    if (i == j) {
      images.emplace_back(F, n - 1);
      continue;
    }
    const MultiPoly y = MultiPoly::variable(F, n - 1, k++);
    images.push_back(y.scale(a[static_cast<std::size_t>(j)]));
    dependent -= y.scale(a[static_cast<std::size_t>(i)]);
  }
  images[static_cast<std::size_t>(j)] = dependent;
  const MultiPoly s = substitute(f, images);
  if (s.is_zero()) return s;
  return content_primitive(s).primitive;
}

GoodHyperplane good_hyperplane(const MultiPoly& f, int cap) {
  if (!f.is_homogeneous() || f.degree() < 1) throw PreconditionError("good hyperplane needs a nonconstant form");
  if (f.nvars() < 4) throw PreconditionError("good hyperplane needs at least four variables");
  if (cap < 0) throw PreconditionError("search cap must be >= 0");
  const Field& F = f.field();
  const int n = f.nvars();
  std::uint64_t tried = 0;
  for (int h = 0; h <= cap; ++h) {
    const ElementsBelow elems(F, h + 1);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total = total > limits().enumeration_candidates / elems.size() ? limits().enumeration_candidates + 1 : total * elems.size();
    if (total > limits().enumeration_candidates) throw BudgetError("hyperplane search exceeds the candidate budget");
    std::vector<std::vector<RingElement>> level;
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(n), 0);
    for (std::uint64_t k = 0; k < total; ++k) {
      std::uint64_t rest = k;
      std::vector<RingElement> a;
      for (int i = 0; i < n; ++i) {
        a.push_back(elems[rest % elems.size()]);
        rest /= elems.size();
      }
      if (height(a) != h) continue;
      const ProjectivePoint canon = ProjectivePoint::canonicalize(a);
      if (canon.coords() != a) continue;
      level.push_back(std::move(a));
    }
    auto support = [](const std::vector<RingElement>& a) {
      return std::count_if(a.begin(), a.end(), [](const RingElement& c) { return !c.is_zero(); });
    };
    std::sort(level.begin(), level.end(), [&](const auto& x, const auto& y) {
      const auto sx = support(x), sy = support(y);
      if (sx != sy) return sx < sy;
      return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend(),
                                          [](const RingElement& u, const RingElement& v) { return u > v; });
    });
    for (const auto& a : level) {
      ++tried;
      const MultiPoly s = hyperplane_slice(f, a);
      if (s.degree() != f.degree()) continue;
      if (auto cert = absolute_irreducibility_certificate(s, limits().prime_degree_cap)) {
        return GoodHyperplane{a, s, *cert, tried};
      }
    }
  }
  throw BudgetError("good hyperplane search exhausted at cap " + std::to_string(cap) + " after " +
                    std::to_string(tried) + " candidates");
}

ProjectionReport project_curve(const std::vector<AffinePoint>& samples, const std::vector<RingElement>& p, int d) {
  if (p.size() != 3) throw PreconditionError("projection direction must have three coordinates");
  if (d < 1) throw PreconditionError("degree must be >= 1");
  if (height(p) == kNegInf) throw PreconditionError("projection direction must be nonzero");
  const Field& F = p.front().field();
  RingElement g;
  bool any = false;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = any ? gcd(g, c) : c.monic();
    any = true;
  }
  if (g.degree() != 0) throw PreconditionError("projection direction must be primitive");
  RingElement pp(F);
  for (const auto& c : p) pp += c * c;
  if (pp.is_zero()) throw PreconditionError("isotropic projection direction (p.p = 0)");
  ProjectionReport rep;
  while (p[static_cast<std::size_t>(rep.dropped)].is_zero()) ++rep.dropped;
  rep.heights_ok = true;
  const int hp = height(p);
  for (const auto& s : samples) {
    if (s.x.size() != 3) throw PreconditionError("samples must lie in A^3");
    RingElement dot(F);
    for (int i = 0; i < 3; ++i) dot += p[static_cast<std::size_t>(i)] * s.x[static_cast<std::size_t>(i)];
    std::vector<RingElement> image;
    for (int i = 0; i < 3; ++i) image.push_back(dot * p[static_cast<std::size_t>(i)] - pp * s.x[static_cast<std::size_t>(i)]);
    const int hs = height(s.x), hi = height(image);
    if (hi != kNegInf && (hs == kNegInf || hi > hs + 2 * hp)) rep.heights_ok = false;
    AffinePoint plane;
    for (int i = 0; i < 3; ++i) {
      if (i != rep.dropped) plane.x.push_back(image[static_cast<std::size_t>(i)]);
    }
    rep.plane.push_back(std::move(plane));
  }
  auto kernel_dim = [&](int D) {
    std::vector<Monomial> mons;
    for (const auto& m : monomials_up_to(D, 2)) {
      Monomial shifted;
      shifted.e[1] = m.e[0];
      shifted.e[2] = m.e[1];
      mons.push_back(shifted);
    }
    if (rep.plane.empty()) return static_cast<int>(mons.size());
    std::vector<Coords> rows;
    for (const auto& q : rep.plane) rows.push_back({RingElement(F), q.x[0], q.x[1]});
    return static_cast<int>(mons.size()) - rank(evaluation_matrix(F, rows, mons));
  };
  rep.kernel_dim_d = kernel_dim(d);
  rep.kernel_dim_below = kernel_dim(d - 1);
  return rep;
}

}  // namespace ffh
