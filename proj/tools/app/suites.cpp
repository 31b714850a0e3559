#include "suites.hpp"

#include <functional>

#include "ffh/determinant_method.hpp"
#include "ffh/error.hpp"
#include "ffh/factor.hpp"
#include "ffh/monomial.hpp"
#include "ffh/text.hpp"
#include "oracles.hpp"
#include "random_gen.hpp"

namespace ffh::app {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { r_.name = std::move(name); }
  void check(bool ok) {
    ++r_.cases;
    if (!ok) ++r_.failures;
  }
  SuiteResult& result() { return r_; }

 private:
  SuiteResult r_;
};

std::vector<Field> small_fields() {
  return {Field::make(2), Field::make(3), Field::make(2, 2), Field::make(5), Field::make(3, 2)};
}

RingElement one(const Field& F) { return RingElement::constant(F, 1); }

void finite_field(Suite& s, Rng& rng) {
  for (const Field& F : small_fields()) {
    for (int i = 0; i < 60; ++i) {
      const FieldElement a = F.element(static_cast<std::uint32_t>(rng.below(F.order())));
      const FieldElement b = F.element(static_cast<std::uint32_t>(rng.below(F.order())));
      const FieldElement c = F.element(static_cast<std::uint32_t>(rng.below(F.order())));
      s.check((a * b) * c == a * (b * c));
      s.check(a * (b + c) == a * b + a * c);
      s.check(a.pow(F.order()) == a);
      if (!a.is_zero()) s.check((a * a.inverse()).is_one());
    }
  }
}

void fqt_division(Suite& s, Rng& rng) {
  for (const Field& F : small_fields()) {
    for (int i = 0; i < 40; ++i) {
      const RingElement a = rng.nonzero_element(F, 1 + static_cast<int>(rng.below(7)));
      const RingElement b = rng.nonzero_element(F, 1 + static_cast<int>(rng.below(5)));
      const auto [q, r] = divmod(a, b);
      s.check(q * b + r == a && r.degree() < b.degree());
      const RingElement g = gcd(a, b);
      s.check((a % g).is_zero() && (b % g).is_zero() && g.is_monic());
      const ExtendedGcd x = xgcd(a, b);
      s.check(x.s * a + x.t * b == x.g && x.g == g);
    }
  }
}

void prime_counts(Suite& s, Rng&) {
  for (std::uint32_t q : {2u, 3u}) {
    const Field F = Field::make(q);
    for (int n = 1; n <= 6; ++n) {
      s.check(primes_of_degree(F, n).size() == oracle::mobius_prime_count(q, n));
      s.check(prime_count(F, n).exact == oracle::sieve_prime_count(F, n));
    }
  }
}

void multivariate(Suite& s, Rng& rng) {
  for (const Field& F : {Field::make(2), Field::make(3)}) {
    for (int i = 0; i < 25; ++i) {
      const int d = 1 + static_cast<int>(rng.below(3));
      MultiPoly f = rng.poly(F, 3, d, 3, 70, 1);
      if (f.degree() < 1) continue;
      // F_H(H, x) = H^d f(x).
      const RingElement H = rng.monic(F, static_cast<int>(rng.below(3)));
      const MultiPoly FH = twist(f, H);
      std::vector<RingElement> x{H, rng.element(F, 3), rng.element(F, 3)};
      std::vector<RingElement> x_aff{RingElement(F), x[1], x[2]};
      s.check(FH.is_homogeneous() && evaluate(FH, x) == H.pow(static_cast<std::uint64_t>(f.degree())) * evaluate(f, x_aff));
      // Homogenize in a fresh slot and set it back to one.
      const MultiPoly h = homogenize(f.with_nvars(4), 3);
      s.check(dehomogenize(h, 3).with_nvars(3) == f);
      // Translation agrees with evaluation at a shifted point.
      std::vector<RingElement> alpha{RingElement(F), rng.element(F, 2), rng.element(F, 2)};
      std::vector<RingElement> shifted{RingElement(F), x[1] + alpha[1], x[2] + alpha[2]};
      s.check(evaluate(translate(f, alpha), x_aff) == evaluate(f, shifted));
    }
    for (int i = 0; i < 20; ++i) {
      const int d = 2 + static_cast<int>(rng.below(2));
      const MultiPoly f = rng.form(F, 3, d, 3, 60);
      if (f.is_zero()) continue;
      const LeadingTransform lt = leading_transform(f);
      std::vector<RingElement> at{one(F), lt.alpha[1], lt.alpha[2]};
      s.check(evaluate(f, at).degree() >= log_norm(f));
      s.check(norm_within_factor(F.order(), log_norm(lt.transformed), log_norm(f), d));
    }
  }
}

void factorization(Suite& s, Rng& rng) {
  for (const Field& F : {Field::make(2), Field::make(3)}) {
    for (int i = 0; i < 12; ++i) {
      auto residue_form = [&](int d) {
        ResiduePoly g(F, 3);
        for (const auto& m : monomial_basis(d, 3)) g.add_term(m, F.element(static_cast<std::uint32_t>(rng.below(F.order()))));
        return g;
      };
      const ResiduePoly a = residue_form(1), b = residue_form(1 + static_cast<int>(rng.below(2)));
      if (a.is_zero() || b.is_zero()) continue;
      const ResiduePoly p = a * b;
      const Factorization fac = factor_bruteforce(p);
      s.check(fac.product() == p);
      s.check(!is_absolutely_irreducible(p));
      const ResiduePoly g = residue_form(2);
      if (g.is_zero()) continue;
      s.check(is_absolutely_irreducible(g) == oracle::absolutely_irreducible_exhaustive(g));
    }
  }
}

void polymatrix(Suite& s, Rng& rng) {
  for (const Field& F : {Field::make(2), Field::make(3)}) {
    for (int i = 0; i < 20; ++i) {
      const int n = 1 + static_cast<int>(rng.below(3));
      const PolyMatrix A = rng.matrix(F, n, n, 3);
      s.check(determinant(A) == oracle::cofactor_determinant(A));
      const int rows = 1 + static_cast<int>(rng.below(3)), cols = rows + 1 + static_cast<int>(rng.below(3));
      const PolyMatrix B = rng.matrix(F, rows, cols, 3);
      const HermiteResult h = hermite_form(B);
      s.check(B * h.U == h.H && determinant(h.U).degree() == 0);
      s.check(rank(B) == oracle::fraction_rank(B));
      if (rank(B) == rows) {
        const ThueSiegelResult ts = thue_siegel_solve(B);
        s.check(!is_zero_vector(ts.x) && is_zero_vector(B * ts.x) && ts.certificate.within_bound);
        s.check(max_degree(minimal_kernel_vector(B)) == oracle::min_kernel_degree(B, 12));
      }
    }
  }
}

void enumeration(Suite& s, Rng& rng) {
  const Field F = Field::make(2);
  for (int i = 0; i < 8; ++i) {
    const MultiPoly f = rng.form(F, 3, 1 + static_cast<int>(rng.below(3)), 2, 60);
    if (f.is_zero()) continue;
    for (int ell = 1; ell <= 2; ++ell) {
      const ProjectiveCount pc = enumerate_projective(f, ell, {true, 1});
      const auto brute = oracle::brute_projective_points(f, ell);
      std::set<std::vector<RingElement>> got;
      for (const auto& p : pc.points) got.insert(p.coords());
      s.check(got == brute && pc.count == brute.size());
      // Each projective point x has q^(ell - h(x)) - 1 nonzero multiples of height < ell.
      std::uint64_t cone = 0;
      for (const auto& p : pc.points) cone += checked_pow(2, ell - height(p)) - 1;
      s.check(cone == oracle::brute_cone_count(f, ell));
    }
    const MultiPoly g = rng.poly(F, 3, 2, 2, 60, 1);
    if (g.is_zero()) continue;
    for (int ell = 1; ell <= 2; ++ell) {
      const std::uint64_t c = enumerate_affine(g, ell).count;
      s.check(c == oracle::brute_affine_count(g, ell));
      if (g.degree() >= 1) s.check(trivial_bound_check(c, g.degree(), 1, 2, ell).holds);
    }
  }
  for (int i = 0; i < 20; ++i) {
    AffineLine L;
    L.base = {RingElement(F), RingElement(F)};
    do {
      L.direction = {rng.element(F, 3), rng.element(F, 3)};
    } while (height(L.direction) == kNegInf || ProjectivePoint::canonicalize(L.direction).coords() != L.direction);
    const int ell = 1 + static_cast<int>(rng.below(4));
    const int hv = height(L.direction);
    s.check(line_count(L, ell) == (hv < ell ? checked_pow(2, ell - hv) : 1));
  }
}

void valuation(Suite& s, Rng& rng) {
  for (const Field& F : {Field::make(2), Field::make(3)}) {
    for (int i = 0; i < 30; ++i) {
      const int n = 2 + static_cast<int>(rng.below(2));
      const int D = 1 + static_cast<int>(rng.below(2));
      const int cap = static_cast<int>(binomial(D + n - 1, n - 1));
      const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(cap, 4))));
      std::vector<ProjectivePoint> pts;
      while (static_cast<int>(pts.size()) < count) {
        std::vector<RingElement> x;
        for (int j = 0; j < n; ++j) x.push_back(rng.element(F, 3));
        if (height(x) == kNegInf) continue;
        pts.push_back(ProjectivePoint::canonicalize(x));
      }
      const auto primes = primes_of_degree(F, 1 + static_cast<int>(rng.below(2)));
      const PrimeElement& p = primes[rng.below(primes.size())];
      const ValuationReport rep = valuation_check(pts, p, D);
      const int classes = oracle::residue_classes(pts, p);
      s.check(rep.residue_classes == classes);
      s.check(!rep.actual || *rep.actual >= count - classes);
    }
  }
}

void auxiliary(Suite& s, Rng&) {
  const std::vector<std::pair<std::uint32_t, std::string>> cases = {
      {2, "x0*x2 + x1^2"}, {2, "x0^3 + x0*x1^2 + x1*x2^2 + t*x2^3"}, {3, "x0^2 + x1^2 + t*x2^2"}};
  for (const auto& [q, text] : cases) {
    const Field F = Field::make(q);
    const MultiPoly f = parse_poly(text, F);
    for (int ell = 1; ell <= 2; ++ell) {
      const AuxResult a = auxiliary_poly(f, ell);
      bool vanish = true;
      for (const auto& p : oracle::brute_projective_points(f, ell)) vanish = vanish && evaluate(a.g, p).is_zero();
      s.check(vanish && !divide_exact(a.g, f));
      std::vector<ProjectivePoint> pts = a.points;
      for (int M = 1; M <= a.M && !pts.empty(); ++M) {
        const int r = oracle::fraction_rank(vanishing_matrix(pts, M));
        const auto target = static_cast<int>(binomial(M + 2, 2) - (M >= f.degree() ? binomial(M - f.degree() + 2, 2) : 0));
        s.check(M < a.M ? r == target : r < target);
      }
    }
  }
}

void slicing(Suite& s, Rng& rng) {
  const Field F = Field::make(2);
  for (int i = 0; i < 3; ++i) {
    const MultiPoly f = rng.poly(F, 4, 3, 1, 50, 1);
    if (f.is_zero()) continue;
    std::vector<RingElement> a{rng.element(F, 2), rng.element(F, 2), rng.element(F, 2)};
    if (height(a) == kNegInf) a[0] = one(F);
    const int ell = 1;
    std::uint64_t total = 0;
    for (const auto& sc : slice_counts(f, a, ell, ell + std::max(0, height(a)))) total += sc.count;
    s.check(total == enumerate_affine(f, ell).count);
  }
}

void text(Suite& s, Rng& rng) {
  for (const Field& F : small_fields()) {
    for (int i = 0; i < 10; ++i) {
      const MultiPoly f = rng.poly(F, 3, 3, 3, 40);
      s.check(parse_poly(to_string(f), F, 3) == f);
    }
  }
}

}  // namespace

std::vector<SuiteResult> run_suites(std::uint64_t seed) {
  const std::vector<std::pair<std::string, std::function<void(Suite&, Rng&)>>> suites = {
      {"finite-field", finite_field}, {"fqt-division", fqt_division}, {"prime-counts", prime_counts},
      {"multivariate", multivariate}, {"factorization", factorization}, {"polymatrix", polymatrix},
      {"enumeration", enumeration},   {"valuation", valuation},       {"auxiliary", auxiliary},
      {"slicing", slicing},           {"text", text}};
  std::vector<SuiteResult> out;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    Suite s(suites[i].first);
    Rng rng(seed * 1000003 + i);
    try {
      suites[i].second(s, rng);
    } catch (const std::exception&) {
      s.check(false);
    }
    out.push_back(s.result());
  }
  return out;
}

}  // namespace ffh::app
