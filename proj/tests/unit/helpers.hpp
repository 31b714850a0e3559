#pragma once

#include <doctest.h>

#include "ffh/text.hpp"

namespace ffh::test {

inline MultiPoly P(const char* text, const Field& F, int nvars = 0) { return parse_poly(text, F, nvars); }
inline RingElement R(const char* text, const Field& F) { return parse_ring_element(text, F); }
inline PolyMatrix Mat(const char* text, const Field& F) { return parse_matrix(text, F); }

}  // namespace ffh::test
