#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ramsey/threshold.hpp"

namespace ramsey {

// The four asymptotic regimes of a nondecreasing threshold function:
//   Case1: eventually bounded by a constant.
//   Case2: unbounded but o(n).
//   Case3: Omega(n) yet n - f(n) outgrows every constant multiple of log n.
//   Case4: f(n) >= n - c*log2(n) eventually, for some constant c.
enum class FunctionCase {
  Case1_Bounded,
  Case2_SublinearUnbounded,
  Case3_LinearButFarFromN,
  Case4_NearN,
};

enum class Certainty { Proved, Empirical };

// Classification result. The case label is Proved when a symbolic rule over
// the expression tree decides it, Empirical when it rests on the sampling
// schedule alone. Witness fields are case dependent:
//   Case1: witness_c  = eventual bound (the largest sampled value),
//          n0         = first sampled n at which f(n) <= witness_c.
//   Case2: schedule   = (n, floor(n / f(n))) divergence evidence.
//   Case3: omega_constant = least a with f(n) >= n/a on the sampled tail,
//          schedule   = (n, floor((n - f(n)) / ceil(log2 n))) evidence.
//   Case4: witness_c  = least c with f(n) >= n - c*ceil(log2 n) on a sampled
//                       suffix, n0 = start of that suffix.
struct FunctionClass {
  FunctionCase case_;
  Certainty certainty;
  std::uint64_t witness_c = 0;
  std::uint64_t n0 = 0;
  std::uint64_t omega_constant = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> schedule;
  std::uint64_t horizon = kSampleHorizon;
  // Whether f is known to be computable in time polynomial in n. True for
  // every DSL expression; caller-declared for opaque functions.
  bool poly_time = true;
};

// Classifies a DSL threshold. Validates first (throws ValidationError on a
// decreasing or oversized function). Symbolic rules prove the case where
// they apply; the sampling schedule always runs to populate witnesses and
// decides the case when no rule fires.
FunctionClass classify(const ThresholdExpr& f);

// Escape hatch for thresholds with no DSL form: classifies from the sampling
// schedule alone, so certainty is always Empirical. The function must be
// nondecreasing on the schedule (ValidationError otherwise) and total up to
// kSampleHorizon. poly_time_declared records the caller's claim about
// computability; it is not checkable here.
FunctionClass classify_sampled(const std::function<std::uint64_t(std::uint64_t)>& f,
                               bool poly_time_declared = false);

enum class VerdictReason {
  ConstantLogBounded,      // Case1 or Case4: polynomial-time decidable
  NotPolyComputable,       // f itself not polynomial-time computable
  SublinearUnbounded_ETH,  // Case2: no polynomial algorithm unless ETH fails
  LinearNotCLB_ETH,        // Case3: no polynomial algorithm unless ETH fails
};

enum class Assumption { None, ETH };

// Tractability verdict for model checking with the quantifier at threshold f.
struct Verdict {
  bool tractable;
  VerdictReason reason;
  Assumption assumption;
};

Verdict dichotomy_verdict(const FunctionClass& cls);

const char* to_string(FunctionCase c);
const char* to_string(Certainty c);
const char* to_string(VerdictReason r);
const char* to_string(Assumption a);

}  // namespace ramsey
