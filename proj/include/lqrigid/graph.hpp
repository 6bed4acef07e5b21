#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lqrigid {

using Vertex = int;

/// Unordered vertex pair, stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on the dense vertex set 0..n-1.
///
/// Edges keep their insertion order; that order is the row order of every
/// rigidity matrix built from the graph. Construction rejects loops,
/// duplicate edges and out-of-range endpoints with std::invalid_argument.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  /// Wheel with hub 0 and rim 1..n-1 in cyclic order.
  static Graph wheel(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(nbrs_.at(v).size()); }
  int min_degree() const;
  int max_degree() const;
  bool is_connected() const;

  /// Index of edge {a,b} in edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;

  Graph with_edge(Vertex a, Vertex b) const;
  Graph without_edge(Vertex a, Vertex b) const;
  /// Deletes v; vertices above v shift down by one.
  Graph without_vertex(Vertex v) const;
  /// Subgraph induced by `keep` (sorted ascending), relabelled 0..|keep|-1.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void index_edges();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::vector<int>> edge_id_;  // dense n*n lookup, -1 = absent
};

/// f_d(G) = d|V| - |E|.
long f_count(const Graph& g, int d);

/// Number of edges with both ends in `mask` (bit v set <=> v in U); n <= 64.
int induced_edge_count(const Graph& g, std::uint64_t mask);

/// Number of edges xy with x in U\W and y in W\U.
int cross_edge_count(const Graph& g, std::uint64_t u_mask, std::uint64_t w_mask);

}  // namespace lqrigid
