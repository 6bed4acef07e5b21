#pragma once

// Exhaustive reference implementations used only by the tests. Everything
// here is deliberately naive so it can be trusted by inspection.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "lqrigid/graph.hpp"
#include "lqrigid/lq_geometry.hpp"

namespace brute {

using lqrigid::Edge;
using lqrigid::Graph;
using lqrigid::Vertex;

inline int popcount(std::uint64_t m) { return __builtin_popcountll(m); }

inline int edges_inside(const Graph& g, std::uint64_t mask) {
  int c = 0;
  for (const Edge& e : g.edges()) {
    if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++c;
  }
  return c;
}

/// mult*|E(H)| <= k|V(H)| - l for every vertex subset spanning at least one
/// edge. Induced subgraphs suffice: they have the most edges per vertex set.
inline bool is_sparse(const Graph& g, int k, int l, int mult = 1) {
  const int n = g.vertex_count();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    const int e = edges_inside(g, m);
    if (e > 0 && mult * e > k * popcount(m) - l) return false;
  }
  return true;
}

inline bool is_tight(const Graph& g, int d) {
  return is_sparse(g, d, d) && d * g.vertex_count() - g.edge_count() == d;
}

/// Vertex sets U, |U| > 1, with i(U) = d|U| - d.
inline std::vector<std::uint64_t> critical_sets(const Graph& g, int d) {
  std::vector<std::uint64_t> out;
  const int n = g.vertex_count();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (popcount(m) > 1 && edges_inside(g, m) == d * popcount(m) - d) out.push_back(m);
  }
  return out;
}

inline bool addable(const Graph& g, int d, Vertex x, Vertex y) {
  if (g.has_edge(x, y)) return false;
  return is_sparse(g.with_edge(x, y), d, d);
}

/// Tries every vertex permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < a.vertex_count() && ok; ++v) ok = da[v] == db[perm[v]];
    for (const Edge& e : a.edges()) {
      if (!ok) break;
      ok = b.has_edge(perm[e.u], perm[e.v]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Random graph with each pair present independently.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) es.emplace_back(u, v);
    }
  }
  return Graph(n, es);
}

/// Rigidity matrix written straight from the entry formula, one loop per
/// entry, standard form unless `altered`.
inline Eigen::MatrixXd matrix(const Graph& g, const Eigen::MatrixXd& p, double q, bool altered) {
  const int d = static_cast<int>(p.cols());
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(g.edge_count(), d * g.vertex_count());
  int row = 0;
  for (const Edge& e : g.edges()) {
    double norm_q = 0.0;
    for (int k = 0; k < d; ++k) norm_q += std::pow(std::abs(p(e.u, k) - p(e.v, k)), q);
    const double norm = std::pow(norm_q, 1.0 / q);
    for (int k = 0; k < d; ++k) {
      const double x = p(e.u, k) - p(e.v, k);
      double entry = (x > 0 ? 1.0 : x < 0 ? -1.0 : 0.0) * std::pow(std::abs(x), q - 1);
      if (!altered) entry /= std::pow(norm, q - 2);
      r(row, e.u * d + k) = entry;
      r(row, e.v * d + k) = -entry;
    }
    ++row;
  }
  return r;
}

/// Rank by column-pivoted QR, a different decomposition from the library's.
inline int qr_rank(const Eigen::MatrixXd& m, double rel = 1e-9) {
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(rel);
  return static_cast<int>(qr.rank());
}

/// Generic rank of g in l_q^d by QR at a few random placements.
inline int generic_rank(const Graph& g, int d, double q, std::uint64_t seed, int tries = 3) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int best = 0;
  for (int t = 0; t < tries; ++t) {
    Eigen::MatrixXd p(g.vertex_count(), d);
    for (int i = 0; i < p.rows(); ++i) {
      for (int k = 0; k < d; ++k) p(i, k) = u(rng);
    }
    best = std::max(best, qr_rank(matrix(g, p, q, true)));
  }
  return best;
}

using Tri = std::array<int, 3>;

/// Every closed triangulated surface whose edge graph is exactly g, found by
/// backtracking: each edge must lie in exactly two faces and every vertex
/// link must be a single cycle. Faces are triangles of g.
inline std::vector<std::vector<Tri>> triangulations_of(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Tri> tris;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) tris.push_back({a, b, c});
      }
    }
  }
  std::vector<int> cover(g.edge_count(), 0);
  std::vector<Tri> chosen;
  std::vector<std::vector<Tri>> found;

  auto links_ok = [&] {
    for (int v = 0; v < n; ++v) {
      // link graph at v: one edge per face containing v
      std::vector<std::vector<int>> adj(n);
      int faces_at_v = 0;
      for (const Tri& t : chosen) {
        std::vector<int> other;
        for (int x : t) {
          if (x != v) other.push_back(x);
        }
        if (other.size() != 2) continue;
        ++faces_at_v;
        adj[other[0]].push_back(other[1]);
        adj[other[1]].push_back(other[0]);
      }
      if (faces_at_v != g.degree(v)) return false;
      int start = g.neighbors(v).front(), prev = -1, cur = start, steps = 0;
      do {
        if (adj[cur].size() != 2) return false;
        const int next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = next;
        ++steps;
      } while (cur != start && steps <= n);
      if (steps != g.degree(v)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self) -> void {
    int open = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (cover[e] < 2) {
        open = e;
        break;
      }
    }
    if (open < 0) {
      if (links_ok()) found.push_back(chosen);
      return;
    }
    const Edge oe = g.edges()[open];
    for (const Tri& t : tris) {
      const bool contains = std::count(t.begin(), t.end(), oe.u) && std::count(t.begin(), t.end(), oe.v);
      if (!contains) continue;
      if (!chosen.empty() && std::find(chosen.begin(), chosen.end(), t) != chosen.end()) continue;
      // keep faces in increasing order among those covering the same edge
      const std::array<int, 3> ids{g.edge_index(t[0], t[1]), g.edge_index(t[0], t[2]),
                                   g.edge_index(t[1], t[2])};
      bool fits = true;
      for (int id : ids) fits = fits && cover[id] < 2;
      if (!fits) continue;
      for (int id : ids) ++cover[id];
      chosen.push_back(t);
      self(self);
      chosen.pop_back();
      for (int id : ids) --cover[id];
    }
  };
  rec(rec);

  // the same face set is reached in several orders; normalise
  std::set<std::vector<Tri>> unique;
  for (auto f : found) {
    std::sort(f.begin(), f.end());
    unique.insert(f);
  }
  return {unique.begin(), unique.end()};
}

}  // namespace brute
