#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace halfpow {

struct CheckResult {
  std::string name;
  bool pass = false;
};

struct IdentitySuiteOptions {
  std::size_t order = 30;       // truncation window for series identities
  long k_max = 31;              // odd levels covered by the symbolic checks
  std::uint64_t seed = 20250808; // randomized instances are reproducible
};

// Runs every symbolic and property check of the exact layers: Bernoulli and
// Catalan identities, the duality and Lagrange-Buermann extraction laws,
// route equivalence with the zero pattern, the Faulhaber baseline, the
// functional sum formulas, and the Chebyshev sum/telescoping identities.
std::vector<CheckResult> run_identity_suite(const IdentitySuiteOptions& options);

}  // namespace halfpow
