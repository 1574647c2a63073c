#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "annular/numtheory.hpp"

namespace annular {

struct CheckResult {
  std::string group;     // e.g. "burnside", "roundtrip"
  std::string instance;  // e.g. "(n,m,k)=(2,1,2)"
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  /// One line per check group with pass counts, then every failing instance.
  std::string matrix() const;
};

using CrosscutFormula = std::function<ExactInt(std::uint64_t n, std::uint64_t m, std::uint64_t k)>;

struct VerifyOptions {
  /// Instances run while 2n+k and 2m+k stay at or below this.
  std::uint64_t max_endpoints = 12;
  /// Also compare bundled reference sequences with computed counts.
  bool sequences = false;
  /// Run the left-endpoint-set oracle next to the cell oracle.
  bool state_oracle = true;
  /// Formula under test; defaults to count_fixed_crosscuts.
  CrosscutFormula formula;
  unsigned threads = 0;
};

/// Runs formula-versus-oracle comparisons, bijection round trips, symmetry
/// and strictness checks for every instance within the endpoint bound.
VerificationReport run_verification(const VerifyOptions& options = {});

}  // namespace annular
