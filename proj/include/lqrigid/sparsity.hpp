#pragma once

#include <vector>

#include "lqrigid/graph.hpp"

namespace lqrigid {

/// Count parameters for (k,l)-sparsity. Each edge is counted
/// `edge_multiplier` times, so (5,7,x2) encodes |E(H)| <= (5|V(H)|-7)/2.
struct SparsityParams {
  int k = 2;
  int l = 2;
  int edge_multiplier = 1;

  static SparsityParams dd(int d) { return {d, d, 1}; }
  /// Throws std::invalid_argument unless 0 <= l < 2k and multiplier in {1,2}.
  void validate() const;
};

/// Incremental (k,l)-pebble game on a multigraph.
///
/// Every vertex starts with k pebbles. An accepted edge is covered by one
/// pebble of an endpoint and oriented away from it. An edge uv is accepted
/// iff l+1 pebbles can be gathered on {u,v}; gathering only reorients
/// already accepted edges, so queries never change the accepted set.
class PebbleGame {
 public:
  PebbleGame(int n, int k, int l);

  /// Accepts the edge and returns true when it is independent in the
  /// (k,l)-count matroid; otherwise leaves the state untouched.
  bool try_add(Vertex u, Vertex v);

  /// True iff l+1 pebbles can be gathered on {u,v} (u != v).
  bool can_add(Vertex u, Vertex v);

  int free_pebbles(Vertex v) const { return pebbles_[v]; }
  int accepted_edges() const { return accepted_; }

 private:
  bool gather(Vertex u, Vertex v);
  bool pull_pebble(Vertex target, Vertex blocked);

  int k_;
  int l_;
  int accepted_ = 0;
  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;  // out_[a] holds b for each edge a->b
};

bool is_sparse(const Graph& g, const SparsityParams& params);

/// (d,d)-sparse and f_d(g) = d.
bool is_tight(const Graph& g, int d);

/// True iff xy is not an edge and g + xy is (d,d)-sparse, i.e. no critical
/// set contains both x and y. Requires g to be (d,d)-sparse.
bool edge_addable(const Graph& g, int d, Vertex x, Vertex y);

}  // namespace lqrigid
