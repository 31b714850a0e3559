// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// limit. Expected values come from the oracles library or from arithmetic
// done here, never from the routine under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "ffh/determinant_method.hpp"
#include "ffh/error.hpp"
#include "ffh/factor.hpp"
#include "ffh/monomial.hpp"
#include "ffh/text.hpp"
#include "oracles.hpp"
#include "random_gen.hpp"

using namespace ffh;
using app::Rng;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;  // printed after the verdict line

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

RingElement one(const Field& F) { return RingElement::constant(F, 1); }

RingElement gcd_all(const std::vector<RingElement>& xs, const Field& F) {
  RingElement g(F);
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? x.monic() : gcd(g, x);
  }
  return g;
}

void choose(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  choose(n, k, 0, cur, out);
  return out;
}

// gcd of all s x s minors, each by cofactor expansion.
RingElement minor_gcd(const PolyMatrix& A, int s) {
  std::vector<RingElement> minors;
  for (const auto& rows : subsets(A.rows(), s)) {
    for (const auto& cols : subsets(A.cols(), s)) minors.push_back(oracle::cofactor_determinant(A.submatrix(rows, cols)));
  }
  return gcd_all(minors, A.field());
}

int vp(RingElement a, const RingElement& p) {
  int v = 0;
  while (true) {
    const auto [q, r] = divmod(a, p);
    if (!r.is_zero()) return v;
    a = q;
    ++v;
  }
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// ---------------------------------------------------------------------------

Outcome prime_counting() {
  Outcome o;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Field F = Field::make(q);
    for (int n = 1; n <= (q == 5 ? 6 : 8); ++n) {
      const std::uint64_t N = primes_of_degree(F, n).size();
      const std::uint64_t mobius = oracle::mobius_prime_count(q, n);
      o.require(N == mobius, "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": count differs from the Moebius sum");
      const double main = std::pow(q, n) / n, err = 3 * std::pow(q, n / 2.0) / n;
      o.require(std::abs(static_cast<double>(N) - main) <= err, "error term too large at q=" + std::to_string(q));
    }
  }
  return o;
}

Outcome thue_siegel() {
  Outcome o;
  Rng rng(2024);
  int done = 0;
  while (done < 200) {
    const Field F = Field::make(rng.chance(50) ? 2 : 3);
    const int s = 1 + static_cast<int>(rng.below(3));
    const int r = s + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(6 - s)));
    const PolyMatrix A = rng.matrix(F, s, r, 4);
    if (oracle::fraction_rank(A) < s) continue;
    ++done;
    const ThueSiegelResult res = thue_siegel_solve(A);
    o.require(!is_zero_vector(res.x), "zero solution");
    o.require(is_zero_vector(A * res.x), "A x != 0");
    const int N = A.max_degree();
    const int degD = minor_gcd(A, s).degree();
    const Rational bound(s * N - degD, r - s);
    o.require(Rational(max_degree(res.x)) <= bound, "solution exceeds (sN - deg D)/(r - s)");
  }
  return o;
}

Outcome determinant_divisibility() {
  Outcome o;
  Rng rng(77);
  for (int inst = 0; inst < 500; ++inst) {
    const Field F = Field::make(rng.chance(50) ? 2 : 3);
    const int n = 2 + static_cast<int>(rng.below(2));
    const int D = 1 + static_cast<int>(rng.below(2));
    const int cols = static_cast<int>(binomial(D + n - 1, n - 1));
    const int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(cols, 5))));
    const auto primes = primes_of_degree(F, 1 + static_cast<int>(rng.below(2)));
    const PrimeElement& p = primes[rng.below(primes.size())];
    std::vector<ProjectivePoint> pts;
    while (static_cast<int>(pts.size()) < s) {
      std::vector<RingElement> x;
      if (!pts.empty() && rng.chance(40)) {
        // A point congruent to an earlier one modulo p.
        const auto& base = pts[rng.below(pts.size())].coords();
        for (const auto& c : base) x.push_back(c + p.value() * rng.element(F, 2));
      } else {
        for (int j = 0; j < n; ++j) x.push_back(rng.element(F, 3));
      }
      if (height(x) == kNegInf) continue;
      pts.push_back(ProjectivePoint::canonicalize(x));
    }
    const ValuationReport rep = valuation_check(pts, p, D);
    const int classes = oracle::residue_classes(pts, p);
    const RingElement Delta = minor_gcd(vanishing_matrix(pts, D), s);
    o.require(rep.residue_classes == classes, "residue class count differs from the oracle");
    if (Delta.is_zero()) {
      o.require(!rep.actual.has_value(), "reported a valuation of a zero divisor");
    } else {
      const int actual = vp(Delta, p.value());
      o.require(rep.actual == actual, "valuation differs from the cofactor route");
      o.require(actual >= s - classes, "valuation below s - #classes");
    }
  }
  return o;
}

Outcome auxiliary_polynomials() {
  Outcome o;
  std::vector<std::pair<Field, MultiPoly>> forms;
  forms.emplace_back(Field::make(2), parse_poly("x0*x2 - x1^2", Field::make(2)));
  Rng rng(31337);
  for (std::uint32_t q : {2u, 3u}) {
    const Field F = Field::make(q);
    int found = 0;
    while (found < 10) {
      const MultiPoly f = rng.form(F, 3, 3, 2, 55);
      if (f.is_zero() || f.degree() != 3 || !is_primitive(f)) continue;
      if (!irreducibility_over_fqt(f, limits().prime_degree_cap).irreducible) continue;
      forms.emplace_back(F, f);
      ++found;
    }
  }
  std::ostringstream table;
  table << "    q  ell  N   M  bound(main-thm,C=1)  M/bound   f\n";
  for (const auto& [F, f] : forms) {
    const int d = f.degree();
    const CharRegime reg = classify_regime(F.characteristic(), d, 0.1);
    for (int ell = 1; ell <= 2; ++ell) {
      BoundParams P;
      P.q = F.order();
      P.d = d;
      P.n = 1;
      P.ell = ell;
      P.eps = 0.1;
      P.regime = reg.tag;
      P.beta = beta(F.order(), d, reg.tag);
      P.norm_f = std::pow(static_cast<double>(F.order()), log_norm(f));
      AuxOptions opt;
      opt.bound = P;
      const AuxResult a = auxiliary_poly(f, ell, opt);
      const auto pts = oracle::brute_projective_points(f, ell);
      const std::string tag = to_string(f) + " ell=" + std::to_string(ell);
      bool vanish = a.points.size() == pts.size();
      for (const auto& x : pts) vanish = vanish && evaluate(a.g, x).is_zero();
      o.require(vanish, "g does not vanish on every point: " + tag);
      o.require(a.g.is_homogeneous() && a.g.degree() == a.M, "g is not a form of degree M: " + tag);
      o.require(!divide_exact(a.g, f).has_value(), "f divides g: " + tag);
      // Below M every vanishing form is a multiple of f: the vanishing space
      // has the dimension of f * (forms of degree M - d).
      std::vector<ProjectivePoint> P_pts;
      for (const auto& x : pts) P_pts.push_back(ProjectivePoint::canonicalize(x));
      for (int M = 1; M <= a.M && !P_pts.empty(); ++M) {
        const int target = static_cast<int>(binomial(M + 2, 2) - (M >= d ? binomial(M - d + 2, 2) : 0));
        const int r = oracle::fraction_rank(vanishing_matrix(P_pts, M));
        o.require(M < a.M ? r == target : r < target, "M is not minimal: " + tag);
      }
      if (P_pts.empty()) o.require(a.M == 1, "M > 1 without points: " + tag);
      const bool bezout = pts.size() <= static_cast<std::size_t>(d * a.M);
      o.require(a.bezout_holds == bezout && bezout, "Bezout check disagrees with enumeration: " + tag);
      char line[512];
      std::snprintf(line, sizeof line, "    %u  %d   %-3zu %-3d %-19.6g %-9.3g %s", F.order(), ell, pts.size(), a.M,
                    *a.bound, *a.ratio, to_string(f).c_str());
      table << line << "\n";
    }
  }
  o.notes.push_back(table.str());
  return o;
}

// f in x0..x_{N-1} moved to x1..xN so that enumerate_affine counts its cone.
MultiPoly as_cone(const MultiPoly& f) {
  MultiPoly g(f.field(), f.nvars() + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial s;
    for (int i = 0; i < f.nvars(); ++i) s.e[static_cast<std::size_t>(i + 1)] = m.e[static_cast<std::size_t>(i)];
    g.add_term(s, c);
  }
  return g;
}

Outcome counting_consistency() {
  Outcome o;
  const Field F = Field::make(2);
  const std::uint64_t q = 2;
  std::vector<MultiPoly> forms;
  for (const char* s : {"x0", "x0 + x1 + x2", "x0*x2 + x1^2", "x0^3 + x1^3 + x2^3", "x0*x1 + t*x2^2", "x0^2 + x0*x1 + x1^2",
                        "x0*x3 + x1*x2", "x0^2 + t*x1^2 + x2*x3"}) {
    forms.push_back(parse_poly(s, F));
  }
  Rng rng(555);
  for (int i = 0; i < 20; ++i) {
    const MultiPoly f = rng.form(F, 3 + static_cast<int>(rng.below(2)), 1 + static_cast<int>(rng.below(3)), 2, 60);
    if (!f.is_zero()) forms.push_back(f);
  }
  auto trivial = [&](std::uint64_t count, int d, int m, int ell, const std::string& what) {
    const TrivialBound tb = trivial_bound_check(count, d, m, q, ell);
    const std::uint64_t bound = static_cast<std::uint64_t>(d) * ipow(q, ell * m);
    o.require(tb.bound == bound && tb.holds == (count <= bound), "trivial bound misreported: " + what);
    o.require(count <= bound, "count exceeds d q^(ell m): " + what);
  };
  for (const auto& f : forms) {
    const int N = f.nvars(), d = f.degree();
    for (int ell = 1; ell <= 2; ++ell) {
      const std::string tag = to_string(f) + " ell=" + std::to_string(ell);
      const ProjectiveCount pc = enumerate_projective(f, ell, {true, 0});
      o.require(pc.count == oracle::brute_projective_points(f, ell).size(), "projective count differs from brute force: " + tag);
      std::uint64_t cone = 0;
      for (const auto& p : pc.points) cone += ipow(q, ell - height(p)) - 1;
      const std::uint64_t affine = enumerate_affine(as_cone(f), ell).count;
      o.require(affine == cone + 1, "cone relation fails: " + tag);
      o.require(affine - 1 == oracle::brute_cone_count(f, ell), "cone count differs from brute force: " + tag);
      trivial(affine, d, N - 1, ell, tag);
    }
  }
  for (int i = 0; i < 20; ++i) {
    const MultiPoly g = rng.poly(F, 3, 1 + static_cast<int>(rng.below(3)), 2, 60, 1);
    if (g.degree() < 1) continue;
    for (int ell = 1; ell <= 2; ++ell) {
      const std::uint64_t c = enumerate_affine(g, ell).count;
      o.require(c == oracle::brute_affine_count(g, ell), "affine count differs from brute force");
      trivial(c, g.degree(), 1, ell, to_string(g));
    }
  }
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng.below(2));
    const int ell = 1 + static_cast<int>(rng.below(4));
    AffineLine L;
    for (int j = 0; j < n; ++j) L.base.push_back(rng.element(F, ell));
    do {
      L.direction.clear();
      for (int j = 0; j < n; ++j) L.direction.push_back(rng.element(F, 1 + static_cast<int>(rng.below(4))));
    } while (height(L.direction) == kNegInf || gcd_all(L.direction, F).degree() > 0);
    const int hv = height(L.direction);
    const std::uint64_t expected = hv < ell ? ipow(q, ell - hv) : 1;
    o.require(line_count(L, ell) == expected, "line count differs from q^(ell - h(v))");
  }
  return o;
}

Outcome slicing() {
  Outcome o;
  const Field F = Field::make(2);
  Rng rng(99);
  int done = 0;
  while (done < 5) {
    MultiPoly f = rng.poly(F, 4, 3, 2, 40, 1);
    if (f.degree() != 3) continue;
    ++done;
    const int ell = 1 + done % 2;
    std::vector<RingElement> a;
    do {
      a = {rng.element(F, 2), rng.element(F, 2), rng.element(F, 2)};
    } while (height(a) == kNegInf);
    std::uint64_t total = 0;
    for (const auto& sc : slice_counts(f, a, ell, ell + height(a))) total += sc.count;
    o.require(total == oracle::brute_affine_count(f, ell), "slice counts do not sum to the direct count: " + to_string(f));
  }
  return o;
}

Outcome normalization() {
  Outcome o;
  Rng rng(4242);
  int done = 0;
  while (done < 100) {
    const Field F = Field::make(rng.chance(50) ? 2 : 3);
    const int nv = 2 + static_cast<int>(rng.below(2));
    const int d = 1 + static_cast<int>(rng.below(4));
    const MultiPoly f = rng.form(F, nv, d, 4, 50);
    if (f.is_zero()) continue;
    ++done;
    const LeadingTransform lt = leading_transform(f);
    std::vector<RingElement> at{one(F)};
    for (int i = 1; i < nv; ++i) {
      o.require(lt.alpha[static_cast<std::size_t>(i)].is_zero() ||
                    ipow(F.order(), lt.alpha[static_cast<std::size_t>(i)].degree()) <= static_cast<std::uint64_t>(d),
                "|alpha_i| > d");
      at.push_back(lt.alpha[static_cast<std::size_t>(i)]);
    }
    const RingElement lead = evaluate(f, at);
    o.require(!lead.is_zero() && ipow(F.order(), lead.degree()) >= max_norm(f), "|f(1, alpha)| < ||f||");
    // The transformed form is f(x0, x1 + alpha_1 x0, ...), checked pointwise.
    for (int k = 0; k < 3; ++k) {
      std::vector<RingElement> x, y;
      for (int i = 0; i < nv; ++i) x.push_back(rng.element(F, 3));
      y.push_back(x[0]);
      for (int i = 1; i < nv; ++i) y.push_back(x[static_cast<std::size_t>(i)] + lt.alpha[static_cast<std::size_t>(i)] * x[0]);
      o.require(evaluate(lt.transformed, x) == evaluate(f, y), "transformed form is not the shift of f");
    }
    const double lhs = std::pow(static_cast<double>(F.order()), log_norm(lt.transformed));
    const double rhs = static_cast<double>(max_norm(f)) * std::pow(static_cast<double>(d), d);
    o.require(lhs <= rhs, "||shift(f, alpha)|| > ||f|| d^d");
  }
  return o;
}

Outcome worked_examples() {
  Outcome o;
  o.require(beta(2, 2, Regime::Small) == 4, "beta(2, 2)");
  o.require(beta(3, 2, Regime::Large) == 2, "beta(3, 2)");
  o.require(beta(1000003, 2, Regime::VeryLarge) == 0, "beta very large");
  o.require(classify_regime(2, 3, 0.1).tag == Regime::Small, "regime (2, 3)");
  o.require(classify_regime(7, 2, 0.1).tag == Regime::Large, "regime (7, 2)");
  o.require(classify_regime(1000003, 2, 0.1).tag == Regime::VeryLarge, "regime (1000003, 2)");
  const Field F3 = Field::make(3);
  const MultiPoly f = parse_poly("x0^2 + x1^2 + t*x2^2", F3);
  const auto bad = bad_primes(f, 2);
  o.require(bad.size() == 1 && bad[0].value() == parse_ring_element("t", F3), "bad primes of x0^2 + x1^2 + t x2^2");
  o.require(bad_primes(parse_poly("x0*x2 - x1^2", F3), 2).empty(), "conic has no bad primes");
  o.require(bad_primes(f, 0).empty(), "cap 0");
  o.require(b_truncated(f, 3, Regime::Large) == Rational(0), "b(f) with deg t <= beta");
  const Field F2 = Field::make(2);
  o.require(b_truncated({PrimeElement(parse_ring_element("t^3+t+1", F2))}, 3, 2) == Rational(3, 8), "3/8");
  BoundParams P;
  P.q = 2;
  P.d = 2;
  P.eps = 0;
  P.beta = 4;
  o.require(std::abs(bound_value(P, BoundKind::Thm1) - 512) < 1e-9, "thm1 = 512");
  o.require(std::abs(bound_value(P, BoundKind::Thm2) - 768) < 1e-9, "thm2 = 768");
  return o;
}

Outcome twist_identity() {
  Outcome o;
  Rng rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const Field F = Field::make(rng.chance(50) ? 2 : 3);
    const int nv = 3 + static_cast<int>(rng.below(2));
    const MultiPoly f = rng.poly(F, nv, 1 + static_cast<int>(rng.below(3)), 3, 50, 1);
    if (f.degree() < 1) {
      --i;
      continue;
    }
    const RingElement H = rng.monic(F, static_cast<int>(rng.below(3)));
    std::vector<RingElement> x{RingElement(F)}, hx{H};
    for (int j = 1; j < nv; ++j) {
      x.push_back(rng.element(F, 3));
      hx.push_back(x.back());
    }
    const MultiPoly FH = twist(f, H);
    o.require(FH.is_homogeneous() && FH.degree() == f.degree(), "F_H is not a form of degree d");
    o.require(evaluate(FH, hx) == H.pow(static_cast<std::uint64_t>(f.degree())) * evaluate(f, x), "F_H(H, x) != H^d f(x)");
  }
  return o;
}

Outcome projection() {
  Outcome o;
  const Field F5 = Field::make(5);
  const RingElement z(F5), u = one(F5), t = parse_ring_element("t", F5);
  std::vector<AffinePoint> samples;
  for (const auto& l : elements_below(F5, 2)) samples.push_back({{l, l * l, l * l * l}});
  for (const std::vector<RingElement>& p : {std::vector<RingElement>{u, u, u}, {u, t, u}, {t + u, u, z}, {u, z, z}}) {
    const ProjectionReport r = project_curve(samples, p, 3);
    const RingElement pp = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    int dropped = 0;
    while (p[static_cast<std::size_t>(dropped)].is_zero()) ++dropped;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      const auto& x = samples[k].x;
      const RingElement px = p[0] * x[0] + p[1] * x[1] + p[2] * x[2];
      std::vector<RingElement> img;
      for (int i = 0; i < 3; ++i) {
        if (i != dropped) img.push_back(px * p[static_cast<std::size_t>(i)] - pp * x[static_cast<std::size_t>(i)]);
      }
      o.require(r.plane[k].x == img, "projected point differs from (p.x)p - (p.p)x");
      std::vector<RingElement> full{img[0], img[1], px * p[static_cast<std::size_t>(dropped)] - pp * x[static_cast<std::size_t>(dropped)]};
      o.require(height(full) <= height(x) + 2 * height(p), "h(pi(x)) > h(x) + 2 h(p)");
    }
    o.require(r.heights_ok, "height check misreported");
    // Interpolation: evaluation matrix of the plane samples against monomials
    // of degree <= D in two variables, rank by elimination over fractions.
    auto kernel_dim = [&](int D) {
      const auto mons = monomials_up_to(D, 2);
      PolyMatrix A(F5, static_cast<int>(r.plane.size()), static_cast<int>(mons.size()));
      for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) {
          const auto& m = mons[static_cast<std::size_t>(j)];
          A(i, j) = r.plane[static_cast<std::size_t>(i)].x[0].pow(m.e[0]) * r.plane[static_cast<std::size_t>(i)].x[1].pow(m.e[1]);
        }
      }
      return A.cols() - oracle::fraction_rank(A);
    };
    const int k3 = kernel_dim(3), k2 = kernel_dim(2);
    o.require(k3 == 1 && k2 == 0, "projected samples do not lie on a single curve of degree <= 3");
    o.require(r.kernel_dim_d == k3 && r.kernel_dim_below == k2, "interpolation dimensions misreported");
  }
  return o;
}

Outcome reproducibility() {
  Outcome o;
  app::ExperimentConfig cfg;
  const auto a = app::cmd_verify(cfg);
  const auto b = app::cmd_verify(cfg);
  o.require(a.failed.empty(), "suites failed on the first run");
  o.require(b.failed.empty(), "suites failed on the second run");
  o.require(a.report.dump(2) == b.report.dump(2), "reports differ between runs");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "prime counting against the Moebius sum", 30, prime_counting},
      {2, "Thue-Siegel solutions within the degree bound", 60, thue_siegel},
      {3, "determinantal divisor valuations", 60, determinant_divisibility},
      {4, "auxiliary polynomials (vanishing, f does not divide g, minimal M, Bezout)", 300, auxiliary_polynomials},
      {5, "projective/affine/line counts and the trivial bound", 120, counting_consistency},
      {6, "hyperplane slice decomposition", 120, slicing},
      {7, "leading transform and shifted norm", 60, normalization},
      {8, "beta, regime and bad prime worked examples", 30, worked_examples},
      {9, "F_H(H, x) = H^d f(x) on 1000 triples", 10, twist_identity},
      {10, "space curve projection and plane interpolation", 60, projection},
      {11, "verify twice with byte-identical reports", 120, reproducibility},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_s) {
      o.ok = false;
      o.detail = "over the time limit";
    }
    if (!o.ok) ++failed;
    std::printf("[%s] %2d %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                o.ok ? "" : ": ", o.detail.c_str());
    for (const auto& n : o.notes) std::printf("%s", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
