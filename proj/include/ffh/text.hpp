#pragma once

// Text form of ring elements, polynomials and matrices.
//
// Grammar (whitespace ignored):
//   sum    := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := integer | 't' | 'u' | 'x' digit+ | '(' sum ')'
// Integers are field elements of the prime field and must be < p; 'u' is the
// class of the generator of F_q over F_p (only when e > 1).

#include <string>
#include <string_view>

#include "ffh/multipoly.hpp"
#include "ffh/polymatrix.hpp"

namespace ffh {

// nvars = 0 infers the count as one more than the largest index used
// (at least 1). ParseError on syntax errors, unknown names, and integers that
// are not field elements.
MultiPoly parse_poly(std::string_view text, const Field& f, int nvars = 0);
RingElement parse_ring_element(std::string_view text, const Field& f);
// Rows separated by ';', entries by ','.
PolyMatrix parse_matrix(std::string_view text, const Field& f);

// Terms leading first, joined by " + "; a unit coefficient is omitted and a
// coefficient with more than one term is parenthesised. parse_poly reads the
// output back to the same polynomial.
std::string to_string(const MultiPoly& f);
std::string to_string(const ResiduePoly& f);

}  // namespace ffh
