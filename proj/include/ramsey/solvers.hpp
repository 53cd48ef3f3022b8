#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Third outcome is real: a budgeted search that runs out of time reports
// BudgetExhausted and is never coerced to a boolean.
enum class Outcome { CliqueFound, NoClique, BudgetExhausted };

enum class Engine { Oracle, Enumeration, VertexCover, BranchAndBound };

struct SearchStats {
  std::uint64_t subsets = 0;   // candidate sets materialized (enumerative engines)
  std::uint64_t nodes = 0;     // search tree nodes visited
  std::uint64_t branches = 0;  // binary branching decisions taken
};

// Decision result. A CliqueFound certificate carries a witness: a sorted
// eligible pairwise-adjacent vertex set of the requested size.
struct Certificate {
  Outcome outcome;
  std::optional<std::vector<std::uint32_t>> witness;
  Engine strategy;
  SearchStats stats;

  bool decided() const { return outcome != Outcome::BudgetExhausted; }
  bool holds() const { return outcome == Outcome::CliqueFound; }
};

inline constexpr std::size_t kOracleLimit = 20;
inline constexpr std::size_t kEnumerationCutoff = 4;

// Reference decision by exhaustive k-subset enumeration over the eligible
// vertices in lexicographic order. Deliberately unoptimized; refuses graphs
// larger than `limit` so it cannot be misapplied.
Certificate clique_oracle(const Graph& g, std::size_t k, std::size_t limit = kOracleLimit);

// Lexicographic DFS over eligible partial cliques, O(n^k) style. Refuses
// k above `cutoff` to guard against accidental exponential use; the
// evaluator only routes small k here.
Certificate clique_by_enumeration(const Graph& g, std::size_t k,
                                  std::size_t cutoff = kEnumerationCutoff);

// Near-n regime: a clique of size k among the n_e eligible vertices exists
// iff the complement of the eligible-induced subgraph has a vertex cover of
// size n_e - k. Bounded search tree of depth n_e - k, so 2^(n-k) * poly(n)
// overall. Ineligible vertices are excluded up front, which is the same
// accounting as forcing them into the cover.
Certificate clique_by_vertex_cover(const Graph& g, std::size_t k);

// Exact branch-and-bound with a greedy-coloring upper bound. Optional wall
// clock budget; when it runs out the certificate reports BudgetExhausted.
Certificate clique_by_branch_and_bound(const Graph& g, std::size_t k,
                                       std::optional<std::uint64_t> budget_ms = std::nullopt);

// Re-checks a positive certificate against the graph: witness present,
// sorted and duplicate-free, all eligible, pairwise adjacent, size >= k.
// Negative and exhausted certificates verify vacuously false here; use
// decided()/holds() for those.
bool verify_certificate(const Graph& g, std::size_t k, const Certificate& c);

const char* to_string(Outcome o);
const char* to_string(Engine e);

}  // namespace ramsey
