#pragma once

#include <cstdint>

namespace ffh {

// Process-wide search budgets. Exceeding any of them raises BudgetError;
// nothing falls back to a probabilistic or partial answer.
struct Limits {
  std::uint64_t max_field_order = std::uint64_t{1} << 20;
  std::uint64_t enumeration_candidates = 1'000'000'000;
  std::uint64_t factor_candidates = std::uint64_t{1} << 22;
  int prime_degree_cap = 10;
  // Worker threads for enumeration; 0 picks hardware concurrency.
  unsigned threads = 0;
};

const Limits& limits();
void set_limits(const Limits& l);

// Test hook used by `verify --inject-fault`. When set, gcd() returns a wrong
// (non-dividing) result so that the property suites have something to catch.
enum class Fault { None, Gcd };
Fault injected_fault();
void inject_fault(Fault f);

}  // namespace ffh
