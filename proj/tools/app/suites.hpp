#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ffh::app {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
};

// Every property suite, in a fixed order, driven by one seed. An exception
// inside a suite counts as one failure and ends that suite.
std::vector<SuiteResult> run_suites(std::uint64_t seed);

}  // namespace ffh::app
