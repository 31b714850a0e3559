#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffh/determinant_method.hpp"

namespace ffh::app {

struct ExperimentConfig {
  std::uint64_t q = 2;  // field order p^e
  std::optional<int> e;
  std::vector<std::uint32_t> modulus;  // low-to-high, monic; empty picks the default
  std::string f;
  std::string f_file;
  int nvars = 0;  // 0 infers from the polynomial
  int ell_lo = 1, ell_hi = 1;
  double eps = 0.1;
  double C = 1;
  std::optional<int> cap_deg;  // bad prime degree cap; default beta + 3
  std::uint64_t cap_enum = 1'000'000'000;
  int cap_M = 40;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";  // json | csv
  std::string mode = "projective";  // projective | affine
  double thm3_exponent = 1;
  unsigned threads = 0;
};

// Reads a JSON object whose keys mirror ExperimentConfig ("ell" may be an
// integer, "a:b" or [a, b]). ParseError on unknown keys or malformed values.
void merge_config_file(ExperimentConfig& cfg, const std::string& path);
void merge_config_json(ExperimentConfig& cfg, const std::string& text);

// "n" or "a:b" into [lo, hi]. ParseError otherwise.
void parse_ell_range(const std::string& text, int& lo, int& hi);

// PreconditionError on out-of-range caps, formats or modes.
void validate(const ExperimentConfig& cfg);

Field make_field(const ExperimentConfig& cfg);
MultiPoly load_polynomial(const ExperimentConfig& cfg, const Field& F);

}  // namespace ffh::app
