#include "ramsey/graph.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)), eligible_(n) { eligible_.set(); }

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.adj_[v].set();
    g.adj_[v].reset(v);
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw PreconditionError("edge endpoint out of range");
  if (u == v) throw PreconditionError("self-loops are not edges");
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::set_all_eligible(bool on) {
  if (on)
    eligible_.set();
  else
    eligible_.reset();
}

Model::Model(std::size_t size, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs)
    : size_(size), pairs_(std::move(pairs)) {
  if (size_ == 0) throw PreconditionError("model universe must be nonempty");
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].first >= size_ || pairs_[i].second >= size_)
      throw PreconditionError("relation pair out of range");
    if (i > 0 && pairs_[i] == pairs_[i - 1]) throw PreconditionError("duplicate relation pair");
  }
}

bool Model::contains(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(a, b));
}

Graph model_to_graph(const Model& m) {
  Graph g(m.size());
  g.set_all_eligible(false);
  for (const auto& [a, b] : m.pairs()) {
    if (a == b) {
      g.set_eligible(a, true);
    } else if (a < b && m.contains(b, a)) {
      g.add_edge(a, b);
    }
  }
  return g;
}

Model graph_to_model(const Graph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.is_eligible(v)) pairs.emplace_back(v, v);
    for (std::size_t u = g.neighbors(v).find_first(); u != VertexSet::npos;
         u = g.neighbors(v).find_next(u))
      pairs.emplace_back(v, u);
  }
  return Model(g.size(), std::move(pairs));
}

Graph add_vertices(const Graph& g, std::size_t universal, std::size_t isolated) {
  const std::size_t n = g.size();
  const std::size_t total = n + universal + isolated;
  Graph out(total);
  for (std::size_t v = 0; v < n; ++v) {
    out.set_eligible(v, g.is_eligible(v));
    for (std::size_t u = g.neighbors(v).find_next(v); u != VertexSet::npos;
         u = g.neighbors(v).find_next(u))
      out.add_edge(v, u);
  }
  // Universal vertices reach everything except the isolated block, isolated
  // vertices keep degree zero.
  for (std::size_t w = n; w < n + universal; ++w)
    for (std::size_t v = 0; v < n + universal; ++v)
      if (v != w) out.add_edge(w, v);
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.size();
  Graph out(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = v + 1; u < n; ++u)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  for (std::size_t v = 0; v < n; ++v) out.set_eligible(v, g.is_eligible(v));
  return out;
}

}  // namespace ramsey
