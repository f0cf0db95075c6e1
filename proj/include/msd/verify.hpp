#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace msd {

struct CheckResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifyOptions {
  bool extended = false;  // adds the n=6 sweep claims
  uint64_t seed = 20250824;
  int threads = 0;
  int tightness_samples = 1000;
  std::ostream* log = nullptr;  // progress notes, may be null
};

// Runs every verification claim (the n<=5 mandatory tier, plus the n=6 tier
// when extended) and returns one result per claim.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace msd
