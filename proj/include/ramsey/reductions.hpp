#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "ramsey/graph.hpp"
#include "ramsey/threshold.hpp"

namespace ramsey {

enum class Construction { Pad, EmbedSublinear, EmbedLinear };

// A transformed instance together with the construction parameters that make
// it auditable. Which parameters are meaningful depends on `construction`.
struct ReductionOutput {
  Graph graph;
  Construction construction;
  std::size_t input_size = 0;   // n of the input instance
  std::uint64_t request = 0;    // pad: b, sublinear: k, linear: m
  std::uint64_t n_prime = 0;    // size of the output instance
  std::uint64_t k_prime = 0;    // embeds: f(n'); pad: b' = b + delta
  std::uint64_t delta = 0;      // pad: scan result
  std::uint64_t q = 0;          // sublinear: least q with f(q) >= k
  std::uint64_t ell = 0;        // linear: total vertices added
  std::uint64_t universal = 0;  // universal vertices appended
  std::uint64_t isolated = 0;   // isolated vertices appended

  std::string params_text() const;  // one `key value` line per parameter
};

// Padding: for a sublinear unbounded f (checked via classify), the least
// delta >= 0 with f(n + delta) <= b + delta exists; appending delta
// universal vertices turns the size-b question on g into the size-b' = b +
// delta question on g', with membership preserved in both directions.
ReductionOutput pad_instance(const Graph& g, std::uint64_t b, const ThresholdExpr& f);

// Threshold probe: for each i, G_i has the first i of n vertices pairwise
// related (and nothing else), so G_i holds an eligible i-clique and no
// larger one. The oracle accepts G_i exactly when i >= f(n); binary search
// over that monotone predicate returns min{i : accepted} = f(n) whenever
// f(n) <= n, and nullopt (meaning "> n") otherwise.
std::optional<std::uint64_t> probe_function(
    const std::function<bool(const Graph&)>& ramsey_oracle, std::size_t n);

// Clique-to-quantifier embedding, sublinear regime (Case2 f): outputs an
// instance g' with n' vertices such that g has a k-clique iff g' has an
// f(n')-clique, where f(n') - k vertices were added universal and the rest
// isolated. Requires every input vertex eligible and k >= 1.
ReductionOutput embed_kclique_sublinear(const Graph& g, std::uint64_t k, const ThresholdExpr& f);

// Clique-to-quantifier embedding, linear-gap regime (Case3 f): picks the
// least ell with m <= f(n + ell) <= m + ell, adds ell' = f(n + ell) - m
// universal and ell - ell' isolated vertices; g has an m-clique iff the
// output has an f(n')-clique.
ReductionOutput embed_kclique_linear(const Graph& g, std::uint64_t m, const ThresholdExpr& f);

const char* to_string(Construction c);

}  // namespace ramsey
