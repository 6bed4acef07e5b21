#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lqrigid/graph.hpp"
#include "lqrigid/sparsity.hpp"

namespace lqrigid {

enum class OpKind { cone, brace, ext0, ext1, vsplit, spider, subst, reduce1 };

std::string_view to_string(OpKind k);
/// Throws std::invalid_argument for unknown names.
OpKind op_kind_from_string(std::string_view s);

/// One applied graph operation, with everything needed to replay it.
///
/// Field use by kind:
///   cone    -  (no parameters)
///   brace   -  vertices = S (|S| = 2d)
///   ext0    -  vertices = S (|S| = d)
///   ext1    -  vertices = v1..v_{d+1}, edge = removed edge v_d v_{d+1}
///   vsplit  -  pivot = v0, vertices = shared (d-1), moved
///   spider  -  pivot = v0, vertices = shared (d), moved
///   subst   -  pivot = v0, h, assignment (neighbour w of v0 -> vertex of h)
///   reduce1 -  pivot = v, edge = added pair xy
struct OpRecord {
  OpKind kind = OpKind::cone;
  int d = 1;
  Vertex pivot = -1;
  std::vector<Vertex> vertices;
  std::vector<Vertex> moved;
  std::optional<Edge> edge;
  std::optional<Graph> h;
  std::map<Vertex, Vertex> assignment;
  int n_before = 0;
  int n_after = 0;
};

/// New vertex n joined to every vertex.
Graph cone(const Graph& g);

/// New adjacent vertices n, n+1, each joined to all of s (|s| = 2d).
Graph brace(const Graph& g, std::span<const Vertex> s, int d);

/// New vertex n joined to exactly s (|s| = d).
Graph zero_extension(const Graph& g, std::span<const Vertex> s, int d);

/// Deletes `removed` (both ends in nbrs) and joins new vertex n to all of
/// nbrs (|nbrs| = d+1).
Graph one_extension(const Graph& g, std::span<const Vertex> nbrs, Edge removed, int d);

/// New vertex w0 = n joined to `shared`; each edge v0w with w in `moved` is
/// moved to w0w. The ordinary split (|shared| = d-1) adds v0w0; the spider
/// split (|shared| = d) does not.
Graph vertex_split(const Graph& g, Vertex v0, std::span<const Vertex> shared,
                   std::span<const Vertex> moved, int d, bool spider);

/// Replaces v0 by a copy of h. Vertex 0 of h takes v0's index, vertex i >= 1
/// of h becomes n+i-1. Edge v0w becomes assignment[w]-w. Without an
/// assignment every edge goes to vertex 0 of h.
Graph substitute(const Graph& g, Vertex v0, const Graph& h,
                 const std::optional<std::map<Vertex, Vertex>>& assignment = std::nullopt);

/// Deletes v (degree d+1 is the caller's concern) and adds xy. Vertices above
/// v shift down by one; x and y are given in g's numbering.
Graph one_reduction(const Graph& g, Vertex v, Vertex x, Vertex y);

/// Lexicographically least non-adjacent pair x < y in N(v) such that
/// g - v + xy is (d,d)-sparse. Requires deg(v) = d+1 and g (d,d)-sparse.
std::optional<Edge> one_reduction_search(const Graph& g, Vertex v, int d);

/// Applies a record to `g`; throws std::invalid_argument if it does not fit.
Graph apply(const Graph& g, const OpRecord& rec);

struct Generated {
  Graph graph;
  std::vector<OpRecord> log;
};

/// Random (d,d)-tight graph on n vertices grown from K_{2d} by 0- and
/// 1-extensions, each chosen with probability 1/2.
Generated henneberg_generate(int d, int n, std::uint64_t seed);

/// Random graph on n vertices whose edges were accepted greedily in random
/// order by the pebble game for `params`; edges that would push an endpoint
/// past `max_degree` (when positive) are skipped.
Graph random_sparse_graph(int n, const SparsityParams& params, std::uint64_t seed,
                          int max_degree = 0);

/// Random connected (d,d)-sparse graph with max degree <= d+2 and min degree
/// <= d+1: a random spanning tree plus greedily accepted random edges.
Graph random_degree_bounded_sparse(int d, int n, std::uint64_t seed);

/// Replays a generation log starting from `start`.
Graph replay(Graph start, std::span<const OpRecord> log);

}  // namespace lqrigid
