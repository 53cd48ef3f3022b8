#include "ramsey/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::vector<std::uint32_t> eligible_list(const Graph& g) {
  std::vector<std::uint32_t> verts;
  verts.reserve(g.eligible_count());
  for (std::size_t v = g.eligible().find_first(); v != VertexSet::npos;
       v = g.eligible().find_next(v))
    verts.push_back(static_cast<std::uint32_t>(v));
  return verts;
}

Certificate empty_set_certificate(Engine engine) {
  // Size-zero requests hold in every graph, witnessed by the empty set.
  return {Outcome::CliqueFound, std::vector<std::uint32_t>{}, engine, {}};
}

}  // namespace

Certificate clique_oracle(const Graph& g, std::size_t k, std::size_t limit) {
  if (g.size() > limit)
    throw PreconditionError("oracle is restricted to graphs with at most " +
                            std::to_string(limit) + " vertices");
  if (k == 0) return empty_set_certificate(Engine::Oracle);
  Certificate cert{Outcome::NoClique, std::nullopt, Engine::Oracle, {}};
  const std::vector<std::uint32_t> verts = eligible_list(g);
  if (k > verts.size()) return cert;
  // Lexicographic k-combinations of the eligible list; first hit is the
  // lexicographically least witness.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    ++cert.stats.subsets;
    bool ok = true;
    for (std::size_t i = 0; ok && i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (!g.has_edge(verts[idx[i]], verts[idx[j]])) {
          ok = false;
          break;
        }
    if (ok) {
      std::vector<std::uint32_t> w(k);
      for (std::size_t i = 0; i < k; ++i) w[i] = verts[idx[i]];
      cert.outcome = Outcome::CliqueFound;
      cert.witness = std::move(w);
      return cert;
    }
    // Advance to the next combination.
    std::size_t i = k;
    while (i-- > 0)
      if (idx[i] != verts.size() - k + i) break;
    if (i == SIZE_MAX) return cert;
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

struct EnumCtx {
  const Graph& g;
  std::size_t k;
  SearchStats stats;
  std::vector<std::uint32_t> cur;
  std::optional<std::vector<std::uint32_t>> found;

  // cand: eligible vertices adjacent to everything in cur, all greater than
  // the last chosen vertex. Ascending choice makes the first complete set
  // the lexicographically least k-clique.
  void dfs(const VertexSet& cand) {
    ++stats.nodes;
    if (found) return;
    if (cur.size() == k) {
      found = cur;
      return;
    }
    for (std::size_t v = cand.find_first(); v != VertexSet::npos && !found;
         v = cand.find_next(v)) {
      VertexSet next = cand & g.neighbors(v);
      // Restrict to ids above v; clears v itself as well.
      for (std::size_t u = next.find_first(); u != VertexSet::npos && u <= v;
           u = next.find_next(u))
        next.reset(u);
      cur.push_back(static_cast<std::uint32_t>(v));
      dfs(next);
      cur.pop_back();
    }
  }
};

}  // namespace

Certificate clique_by_enumeration(const Graph& g, std::size_t k, std::size_t cutoff) {
  if (k > cutoff)
    throw PreconditionError("enumeration refuses k=" + std::to_string(k) + " above its cutoff " +
                            std::to_string(cutoff));
  if (k == 0) return empty_set_certificate(Engine::Enumeration);
  EnumCtx ctx{g, k, {}, {}, std::nullopt};
  ctx.dfs(g.eligible());
  ctx.stats.subsets = ctx.stats.nodes;
  if (ctx.found) return {Outcome::CliqueFound, std::move(ctx.found), Engine::Enumeration, ctx.stats};
  return {Outcome::NoClique, std::nullopt, Engine::Enumeration, ctx.stats};
}

namespace {

struct VcCtx {
  const std::vector<VertexSet>& comp;  // complement adjacency over eligible vertices
  const VertexSet& universe;
  VertexSet covered;
  SearchStats stats;

  bool search(std::size_t budget) {
    ++stats.nodes;
    // First uncovered complement edge, by least endpoint.
    std::size_t v = VertexSet::npos, u = VertexSet::npos;
    for (std::size_t w = universe.find_first(); w != VertexSet::npos;
         w = universe.find_next(w)) {
      if (covered[w]) continue;
      VertexSet row = comp[w];
      row -= covered;
      const std::size_t first = row.find_first();
      if (first != VertexSet::npos) {
        v = w;
        u = first;
        break;
      }
    }
    if (v == VertexSet::npos) return true;  // edgeless: remaining set is a clique
    if (budget == 0) return false;
    ++stats.branches;
    // Cover the larger endpoint first, keeping small ids on the clique side.
    covered.set(u);
    if (search(budget - 1)) return true;
    covered.reset(u);
    covered.set(v);
    if (search(budget - 1)) return true;
    covered.reset(v);
    return false;
  }
};

}  // namespace

Certificate clique_by_vertex_cover(const Graph& g, std::size_t k) {
  if (k == 0) return empty_set_certificate(Engine::VertexCover);
  Certificate cert{Outcome::NoClique, std::nullopt, Engine::VertexCover, {}};
  const VertexSet& elig = g.eligible();
  const std::size_t ne = elig.count();
  if (k > ne) return cert;
  const std::size_t n = g.size();
  std::vector<VertexSet> comp(n, VertexSet(n));
  for (std::size_t v = elig.find_first(); v != VertexSet::npos; v = elig.find_next(v)) {
    comp[v] = ~g.neighbors(v);
    comp[v] &= elig;
    comp[v].reset(v);
  }
  VcCtx ctx{comp, elig, VertexSet(n), {}};
  const bool ok = ctx.search(ne - k);
  cert.stats = ctx.stats;
  if (!ok) return cert;
  std::vector<std::uint32_t> witness;
  for (std::size_t v = elig.find_first(); v != VertexSet::npos; v = elig.find_next(v))
    if (!ctx.covered[v]) witness.push_back(static_cast<std::uint32_t>(v));
  cert.outcome = Outcome::CliqueFound;
  cert.witness = std::move(witness);
  return cert;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BnbCtx {
  const Graph& g;
  std::size_t k;
  std::optional<Clock::time_point> deadline;
  SearchStats stats;
  std::vector<std::uint32_t> cur;
  std::optional<std::vector<std::uint32_t>> found;
  bool exhausted = false;

  void expand(const VertexSet& pool) {
    ++stats.nodes;
    if (deadline && Clock::now() >= *deadline) {
      exhausted = true;
      return;
    }
    if (cur.size() >= k) {
      auto w = cur;
      std::sort(w.begin(), w.end());
      found = std::move(w);
      return;
    }
    // Greedy coloring of the pool: vertices listed color class by color
    // class, so color[i] bounds the largest clique within order[0..i].
    std::vector<std::uint32_t> order, color;
    VertexSet uncolored = pool;
    std::uint32_t c = 0;
    while (uncolored.any()) {
      ++c;
      VertexSet cls = uncolored;
      while (cls.any()) {
        const std::size_t v = cls.find_first();
        order.push_back(static_cast<std::uint32_t>(v));
        color.push_back(c);
        uncolored.reset(v);
        cls.reset(v);
        cls -= g.neighbors(v);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      // Colors ascend along `order`; once the bound fails it fails for the
      // rest as well.
      if (cur.size() + color[i] < k) return;
      const std::uint32_t v = order[i];
      ++stats.branches;
      VertexSet next = pool & g.neighbors(v);
      for (std::size_t j = i; j < order.size(); ++j) next.reset(order[j]);
      cur.push_back(v);
      expand(next);
      cur.pop_back();
      if (found || exhausted) return;
    }
  }
};

}  // namespace

Certificate clique_by_branch_and_bound(const Graph& g, std::size_t k,
                                       std::optional<std::uint64_t> budget_ms) {
  if (k == 0) return empty_set_certificate(Engine::BranchAndBound);
  Certificate cert{Outcome::NoClique, std::nullopt, Engine::BranchAndBound, {}};
  if (k > g.eligible_count()) return cert;
  BnbCtx ctx{g, k, std::nullopt, {}, {}, std::nullopt, false};
  if (budget_ms) ctx.deadline = Clock::now() + std::chrono::milliseconds(*budget_ms);
  ctx.expand(g.eligible());
  cert.stats = ctx.stats;
  if (ctx.found) {
    cert.outcome = Outcome::CliqueFound;
    cert.witness = std::move(ctx.found);
  } else if (ctx.exhausted) {
    cert.outcome = Outcome::BudgetExhausted;
  }
  return cert;
}

bool verify_certificate(const Graph& g, std::size_t k, const Certificate& c) {
  if (c.outcome != Outcome::CliqueFound || !c.witness) return false;
  const auto& w = *c.witness;
  if (w.size() < k) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= g.size()) return false;
    if (i > 0 && w[i] <= w[i - 1]) return false;
    if (!g.is_eligible(w[i])) return false;
  }
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (!g.has_edge(w[i], w[j])) return false;
  return true;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::CliqueFound:
      return "true";
    case Outcome::NoClique:
      return "false";
    case Outcome::BudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

const char* to_string(Engine e) {
  switch (e) {
    case Engine::Oracle:
      return "oracle";
    case Engine::Enumeration:
      return "enum";
    case Engine::VertexCover:
      return "vc";
    case Engine::BranchAndBound:
      return "bnb";
  }
  return "?";
}

}  // namespace ramsey
