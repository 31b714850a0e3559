#pragma once

// Heights of F_q[t]-points and exhaustive point counts on hypersurfaces.
// All counts use the strict bound h(x) < ell.

#include <cstdint>
#include <optional>
#include <vector>

#include "ffh/multipoly.hpp"

namespace ffh {

struct AffinePoint {
  std::vector<RingElement> x;
  bool operator==(const AffinePoint& o) const { return x == o.x; }
};

// Canonical: coprime coordinates, first nonzero coordinate monic.
class ProjectivePoint {
 public:
  // PreconditionError on the zero vector.
  static ProjectivePoint canonicalize(std::vector<RingElement> raw);
  const std::vector<RingElement>& coords() const { return x_; }
  bool operator==(const ProjectivePoint& o) const { return x_ == o.x_; }

 private:
  std::vector<RingElement> x_;
};

// Max coordinate degree; kNegInf only for the affine zero point.
int height(const std::vector<RingElement>& x);
inline int height(const AffinePoint& p) { return height(p.x); }
inline int height(const ProjectivePoint& p) { return height(p.coords()); }

struct EnumerationOptions {
  bool collect_points = false;
  unsigned threads = 0;  // 0: use limits().threads, then hardware concurrency
};

struct AffineCount {
  std::uint64_t count = 0;
  std::vector<AffinePoint> points;  // in enumeration order, when collected
};

struct ProjectiveCount {
  std::uint64_t count = 0;
  std::vector<ProjectivePoint> points;
};

// N_aff(f; ell) for f in the affine coordinates x1..xn (n = nvars - 1; x0 is
// reserved for homogenization and must not occur). Points carry n entries.
// BudgetError when q^(ell n) exceeds the enumeration budget.
AffineCount enumerate_affine(const MultiPoly& f, int ell, const EnumerationOptions& opt = {});

// N(f; ell) for homogeneous f, iterating canonical representatives.
ProjectiveCount enumerate_projective(const MultiPoly& f, int ell, const EnumerationOptions& opt = {});

// Number of projective points of height < ell in P^(n-1) (all n coordinates),
// i.e. the candidate count of enumerate_projective.
std::uint64_t projective_candidates(const Field& f, int n, int ell);

struct AffineLine {
  std::vector<RingElement> base;       // a
  std::vector<RingElement> direction;  // v, nonzero with coprime coordinates
};

// #{lambda in F_q[t] : h(a + lambda v) < ell}, by enumeration of lambda with
// deg lambda < ell - h(v) (larger lambda cannot qualify).
std::uint64_t line_count(const AffineLine& L, int ell);

struct TrivialBound {
  bool holds = false;
  std::uint64_t count = 0;
  std::uint64_t bound = 0;  // d q^(ell m), saturated at UINT64_MAX
  std::int64_t margin = 0;  // bound - count, saturated
};
TrivialBound trivial_bound_check(std::uint64_t count, int d, int m, std::uint64_t q, int ell);

struct SliceCount {
  RingElement alpha;
  std::uint64_t count = 0;
};
// For each alpha in F_q[t]_{<range}, the number of affine zeros of f with
// h < ell and a_1 x_1 + ... + a_n x_n = alpha (a has n entries).
std::vector<SliceCount> slice_counts(const MultiPoly& f, const std::vector<RingElement>& a, int ell, int range);

}  // namespace ffh
