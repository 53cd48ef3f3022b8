#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ramsey {

using VertexSet = boost::dynamic_bitset<>;

// Simple undirected graph with an eligibility mask. Vertices are
// 0..size()-1; adjacency is symmetric and irreflexive. Eligibility marks the
// vertices allowed in homogeneous sets; plain simple-graph workloads keep
// every vertex eligible.
class Graph {
 public:
  explicit Graph(std::size_t n);  // edgeless, all vertices eligible
  static Graph complete(std::size_t n);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const;

  void add_edge(std::size_t u, std::size_t v);  // u != v; idempotent
  bool has_edge(std::size_t u, std::size_t v) const { return adj_[u][v]; }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }

  bool is_eligible(std::size_t v) const { return eligible_[v]; }
  void set_eligible(std::size_t v, bool on) { eligible_[v] = on; }
  void set_all_eligible(bool on);
  const VertexSet& eligible() const { return eligible_; }
  std::size_t eligible_count() const { return eligible_.count(); }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> adj_;
  VertexSet eligible_;
};

// Finite relational structure (M, S): universe {0..size-1} and a binary
// relation as a sorted, duplicate-free pair list.
class Model {
 public:
  Model(std::size_t size, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);
  std::size_t size() const { return size_; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs() const { return pairs_; }
  bool contains(std::uint32_t a, std::uint32_t b) const;

 private:
  std::size_t size_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
};

// Clique-side view of a model: vertex a is eligible iff S(a,a); edge {a,b}
// is present iff both S(a,b) and S(b,a). A set is homogeneous for S exactly
// when it is a clique of eligible vertices here.
Graph model_to_graph(const Model& m);

// Relational view of a graph: S(a,a) for each eligible a, S(a,b) and S(b,a)
// for each edge. model_to_graph inverts it exactly.
Model graph_to_model(const Graph& g);

// Appends `universal` vertices adjacent to every vertex except the new
// isolated ones, then `isolated` vertices of degree zero. New vertices are
// eligible; existing adjacency and eligibility are untouched.
Graph add_vertices(const Graph& g, std::size_t universal, std::size_t isolated);

// Edge complement on the same vertex set; eligibility preserved.
Graph complement(const Graph& g);

}  // namespace ramsey
