#pragma once

#include <cstdint>
#include <optional>

#include "ramsey/graph.hpp"
#include "ramsey/solvers.hpp"
#include "ramsey/threshold.hpp"

namespace ramsey {

enum class StrategyKind { EnumerateSmall, VertexCoverNearN, BranchAndBound, Oracle };

// Per-instance dispatch decision, a pure function of n and k = f(n). The
// graph contents never influence the choice.
struct EvalStrategy {
  StrategyKind kind;
  std::size_t n;
  std::size_t k;
};

struct EvalConfig {
  std::size_t c_small = 4;  // enumeration regime: k <= c_small
  std::size_t c_log = 2;    // vertex cover regime: n - k <= c_log * ceil(log2 n)
  std::optional<std::uint64_t> budget_ms;   // branch-and-bound wall budget
  std::optional<StrategyKind> force;        // override for testing and the CLI
};

// EnumerateSmall when k <= c_small, else VertexCoverNearN when
// n - k <= c_log * ceil(log2 n) (k >= n counts as a zero gap), else
// BranchAndBound. `force` bypasses the rules but keeps n and k.
EvalStrategy choose_strategy(std::size_t n, std::size_t k, const EvalConfig& config = {});

// Decides whether the graph holds an eligible clique of size at least
// k = f(n), n = g.size(). Validates f, then: k > n is false outright
// (f(n) = n+1 encodes unsatisfiable), k = 0 is true with the empty witness,
// anything else goes to the strategy's engine. The certificate's strategy
// field reflects the dispatch decision even on the shortcut paths.
Certificate eval_ramsey(const Graph& g, const ThresholdExpr& f, const EvalConfig& config = {});

// Same decision on a relational structure through its clique-side view.
Certificate eval_ramsey(const Model& m, const ThresholdExpr& f, const EvalConfig& config = {});

Engine engine_of(StrategyKind kind);
const char* to_string(StrategyKind s);

}  // namespace ramsey
