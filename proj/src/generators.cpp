#include "ramsey/generators.hpp"

#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// p mapped onto [0, 2^64]: draw < threshold(p) succeeds with probability p.
// The endpoints avoid the one-in-2^64 bias of a plain product.
bool bernoulli(double p, std::mt19937_64& rng) {
  if (p <= 0.0) {
    rng();  // keep the stream position independent of p
    return false;
  }
  if (p >= 1.0) {
    rng();
    return true;
  }
  const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0);
  return rng() < threshold;
}

}  // namespace

Graph gnp_graph(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = v + 1; u < n; ++u)
      if (bernoulli(p, rng)) g.add_edge(v, u);
  return g;
}

Graph planted_clique_graph(std::size_t n, double p, std::size_t clique_size,
                           std::mt19937_64& rng) {
  if (clique_size > n) throw PreconditionError("planted clique larger than the graph");
  Graph g = gnp_graph(n, p, rng);
  // Partial Fisher-Yates: the first clique_size entries after shuffling.
  std::vector<std::uint32_t> verts(n);
  for (std::size_t i = 0; i < n; ++i) verts[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < clique_size; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
    std::swap(verts[i], verts[j]);
  }
  for (std::size_t i = 0; i < clique_size; ++i)
    for (std::size_t j = i + 1; j < clique_size; ++j) g.add_edge(verts[i], verts[j]);
  return g;
}

Model random_model(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (bernoulli(p, rng)) pairs.emplace_back(static_cast<std::uint32_t>(a),
                                                static_cast<std::uint32_t>(b));
  return Model(n, std::move(pairs));
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a simple combination; good enough to decouple
  // the derived streams.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

}  // namespace ramsey
