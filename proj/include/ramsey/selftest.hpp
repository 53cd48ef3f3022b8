#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/evaluator.hpp"

namespace ramsey {

// Randomized cross-check of the production evaluator (and optionally each
// engine) against the exhaustive oracle on small seeded instances.
struct OracleCheckConfig {
  std::size_t max_n = 12;           // capped at kOracleLimit
  std::size_t trials_small = 1000;  // instances per n for n <= 6
  std::size_t trials_large = 200;   // instances per n for larger n
  std::uint64_t seed = 42;
  bool engines = true;  // also cross-check enumeration (small k), vc, bnb
  EvalConfig eval;
};

// A reproducible counterexample: the instance in DIMACS text plus what
// disagreed.
struct Disagreement {
  std::string fn_source;
  std::string instance_dimacs;
  std::string detail;
};

struct OracleCheckReport {
  std::uint64_t checks = 0;
  std::vector<Disagreement> disagreements;
  bool ok() const { return disagreements.empty(); }
};

// The threshold suite the equivalence corpus runs against: constants,
// logarithmic, square root, half, near-n, identity, and the always-false
// n + 1.
const std::vector<std::string>& equivalence_suite();

OracleCheckReport run_oracle_check(const OracleCheckConfig& config = {});

}  // namespace ramsey
