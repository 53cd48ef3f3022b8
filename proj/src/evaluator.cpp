#include "ramsey/evaluator.hpp"

#include "ramsey/arith.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

EvalStrategy choose_strategy(std::size_t n, std::size_t k, const EvalConfig& config) {
  if (config.force) return {*config.force, n, k};
  if (k <= config.c_small) return {StrategyKind::EnumerateSmall, n, k};
  const std::size_t gap = k >= n ? 0 : n - k;
  if (gap <= config.c_log * static_cast<std::size_t>(ceil_log2(n)))
    return {StrategyKind::VertexCoverNearN, n, k};
  return {StrategyKind::BranchAndBound, n, k};
}

Engine engine_of(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::EnumerateSmall:
      return Engine::Enumeration;
    case StrategyKind::VertexCoverNearN:
      return Engine::VertexCover;
    case StrategyKind::BranchAndBound:
      return Engine::BranchAndBound;
    case StrategyKind::Oracle:
      return Engine::Oracle;
  }
  throw Error("corrupt strategy");
}

Certificate eval_ramsey(const Graph& g, const ThresholdExpr& f, const EvalConfig& config) {
  validate_threshold(f);
  const std::size_t n = g.size();
  if (n == 0) throw PreconditionError("evaluation needs a nonempty universe");
  const std::uint64_t kf = eval_threshold(f, n);
  // k may exceed n (largest transient: a constant above n+1); every such
  // request short-circuits to false below, so the narrowing is inert.
  const std::size_t k = static_cast<std::size_t>(kf);
  const EvalStrategy strategy = choose_strategy(n, k, config);
  if (kf > n) return {Outcome::NoClique, std::nullopt, engine_of(strategy.kind), {}};
  if (k == 0)
    return {Outcome::CliqueFound, std::vector<std::uint32_t>{}, engine_of(strategy.kind), {}};
  switch (strategy.kind) {
    case StrategyKind::EnumerateSmall:
      return clique_by_enumeration(g, k, config.c_small);
    case StrategyKind::VertexCoverNearN:
      return clique_by_vertex_cover(g, k);
    case StrategyKind::BranchAndBound:
      return clique_by_branch_and_bound(g, k, config.budget_ms);
    case StrategyKind::Oracle:
      return clique_oracle(g, k);
  }
  throw Error("corrupt strategy");
}

Certificate eval_ramsey(const Model& m, const ThresholdExpr& f, const EvalConfig& config) {
  return eval_ramsey(model_to_graph(m), f, config);
}

const char* to_string(StrategyKind s) {
  switch (s) {
    case StrategyKind::EnumerateSmall:
      return "enum";
    case StrategyKind::VertexCoverNearN:
      return "vc";
    case StrategyKind::BranchAndBound:
      return "bnb";
    case StrategyKind::Oracle:
      return "oracle";
  }
  return "?";
}

}  // namespace ramsey
