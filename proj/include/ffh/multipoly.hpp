#pragma once

// Multivariate polynomials over F_q[t] (MultiPoly) and over finite fields
// (ResiduePoly), with the coordinate changes used by the determinant method.

#include <cstdint>
#include <optional>
#include <vector>

#include "ffh/fqt.hpp"
#include "ffh/sparse_poly.hpp"

namespace ffh {

using MultiPoly = SparsePoly<RingElement>;
using ResiduePoly = SparsePoly<FieldElement>;

// log_q ||f||: the largest coefficient degree. PreconditionError on zero.
int log_norm(const MultiPoly& f);
// ||f|| = q^log_norm; BudgetError if it does not fit in 64 bits.
std::uint64_t max_norm(const MultiPoly& f);

struct ContentSplit {
  RingElement content;  // monic
  MultiPoly primitive;
};
ContentSplit content_primitive(const MultiPoly& f);
bool is_primitive(const MultiPoly& f);

MultiPoly graded_part(const MultiPoly& f, int i);

// Homogenize with respect to variable `var`, which must not occur in f.
MultiPoly homogenize(const MultiPoly& f, int var);
// Set `var` to 1. PreconditionError unless F is homogeneous.
MultiPoly dehomogenize(const MultiPoly& F, int var);

// x_i -> x_i + alpha_i * x_var for every i != var (alpha[var] is ignored).
MultiPoly shift_homogeneous(const MultiPoly& F, const std::vector<RingElement>& alpha, int var = 0);
// f(x + alpha).
MultiPoly translate(const MultiPoly& f, const std::vector<RingElement>& alpha);
// x_i -> images[i]; the result lives in the variable space of the images.
MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images);

RingElement evaluate(const MultiPoly& f, const std::vector<RingElement>& point);
FieldElement evaluate(const ResiduePoly& f, const std::vector<FieldElement>& point);

// Coefficient-wise image under F_q[t] -> F_q[t]/(p).
ResiduePoly reduce_mod_prime(const MultiPoly& f, const ResidueMap& rm);
ResiduePoly reduce_mod_prime(const MultiPoly& f, const PrimeElement& p);
// Coefficient-wise image under a field embedding.
ResiduePoly embed(const ResiduePoly& g, const FieldEmbedding& emb);
ResiduePoly make_monic(const ResiduePoly& g);

// The result of normalising a form so that its x_var^d coefficient is large.
struct LeadingTransform {
  std::vector<RingElement> alpha;  // alpha[var] is zero
  MultiPoly transformed;           // shift_homogeneous(f, alpha, var)
  int lead_degree = 0;             // deg f(1, alpha) = deg c_{f'}
  std::uint64_t candidates_tried = 0;
};
// Searches alpha with deg alpha_i <= floor(log_q d), zero vector first, until
// |f(1, alpha)| >= ||f||. Such an alpha always exists; not finding one raises
// ConsistencyError, as does a violation of ||f'|| <= ||f|| d^d.
LeadingTransform leading_transform(const MultiPoly& f, int var = 0);

// floor(log_q d) computed in integers.
int floor_log(std::uint64_t q, std::uint64_t d);
// Exact test of q^a <= q^b * d^d, i.e. q^(a-b) <= d^d.
bool norm_within_factor(std::uint64_t q, int a, int b, int d);

// F_H(x_0, ..., x_n) = sum_i H^i f_i x_0^(d-i) for f not involving x_0 and
// monic H.
MultiPoly twist(const MultiPoly& f, const RingElement& H);

// g / f when f divides g in F_q[t][x]; nullopt otherwise. For primitive f this
// also decides divisibility over F_q(t).
std::optional<MultiPoly> divide_exact(const MultiPoly& g, const MultiPoly& f);
std::optional<ResiduePoly> divide_exact(const ResiduePoly& g, const ResiduePoly& f);

// Variables that actually occur.
std::vector<int> support_variables(const MultiPoly& f);

}  // namespace ffh
