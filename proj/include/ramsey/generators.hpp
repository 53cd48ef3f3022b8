#pragma once

#include <cstdint>
#include <random>

#include "ramsey/graph.hpp"

namespace ramsey {

// Seeded instance generators. All randomness comes from the caller's
// mt19937_64, and edge decisions compare raw 64-bit draws against a fixed
// integer threshold, so identical seeds give byte-identical instances on
// every platform regardless of library distribution internals.

// G(n, p): every unordered pair independently with probability p. All
// vertices eligible.
Graph gnp_graph(std::size_t n, double p, std::mt19937_64& rng);

// G(n, p) with a clique planted on `clique_size` vertices sampled without
// replacement.
Graph planted_clique_graph(std::size_t n, double p, std::size_t clique_size,
                           std::mt19937_64& rng);

// Random relational structure: every ordered pair, diagonal included,
// independently with probability p.
Model random_model(std::size_t n, double p, std::mt19937_64& rng);

// Splitmix-style mixing for deriving independent streams from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

}  // namespace ramsey
