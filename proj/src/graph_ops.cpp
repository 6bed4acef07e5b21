#include "lqrigid/graph_ops.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "lqrigid/sparsity.hpp"

namespace lqrigid {
namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

void require_distinct_vertices(const Graph& g, std::span<const Vertex> s, const char* op) {
  std::set<Vertex> seen;
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count()) fail(std::string(op) + ": vertex out of range");
    if (!seen.insert(v).second) fail(std::string(op) + ": repeated vertex");
  }
}

std::vector<Edge> copy_edges(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

}  // namespace

std::string_view to_string(OpKind k) {
  switch (k) {
    case OpKind::cone: return "cone";
    case OpKind::brace: return "brace";
    case OpKind::ext0: return "ext0";
    case OpKind::ext1: return "ext1";
    case OpKind::vsplit: return "vsplit";
    case OpKind::spider: return "spider";
    case OpKind::subst: return "subst";
    case OpKind::reduce1: return "reduce1";
  }
  return "?";
}

OpKind op_kind_from_string(std::string_view s) {
  for (OpKind k : {OpKind::cone, OpKind::brace, OpKind::ext0, OpKind::ext1, OpKind::vsplit,
                   OpKind::spider, OpKind::subst, OpKind::reduce1}) {
    if (to_string(k) == s) return k;
  }
  fail("unknown operation '" + std::string(s) + "'");
}

Graph cone(const Graph& g) {
  const int n = g.vertex_count();
  auto es = copy_edges(g);
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, n);
  return Graph(n + 1, std::move(es));
}

Graph brace(const Graph& g, std::span<const Vertex> s, int d) {
  if (d < 1) fail("brace: d must be positive");
  if (static_cast<int>(s.size()) != 2 * d) fail("brace: |S| must equal 2d");
  require_distinct_vertices(g, s, "brace");
  const int n = g.vertex_count();
  auto es = copy_edges(g);
  for (Vertex w : s) es.emplace_back(w, n);
  for (Vertex w : s) es.emplace_back(w, n + 1);
  es.emplace_back(n, n + 1);
  return Graph(n + 2, std::move(es));
}

Graph zero_extension(const Graph& g, std::span<const Vertex> s, int d) {
  if (d < 1) fail("ext0: d must be positive");
  if (static_cast<int>(s.size()) != d) fail("ext0: |S| must equal d");
  require_distinct_vertices(g, s, "ext0");
  const int n = g.vertex_count();
  auto es = copy_edges(g);
  for (Vertex w : s) es.emplace_back(w, n);
  return Graph(n + 1, std::move(es));
}

Graph one_extension(const Graph& g, std::span<const Vertex> nbrs, Edge removed, int d) {
  if (d < 1) fail("ext1: d must be positive");
  if (static_cast<int>(nbrs.size()) != d + 1) fail("ext1: need exactly d+1 neighbours");
  require_distinct_vertices(g, nbrs, "ext1");
  if (!g.has_edge(removed.u, removed.v)) fail("ext1: removed pair is not an edge");
  auto in_nbrs = [&](Vertex x) { return std::find(nbrs.begin(), nbrs.end(), x) != nbrs.end(); };
  if (!in_nbrs(removed.u) || !in_nbrs(removed.v)) fail("ext1: removed edge must lie inside nbrs");
  const int n = g.vertex_count();
  auto es = copy_edges(g.without_edge(removed.u, removed.v));
  for (Vertex w : nbrs) es.emplace_back(w, n);
  return Graph(n + 1, std::move(es));
}

Graph vertex_split(const Graph& g, Vertex v0, std::span<const Vertex> shared,
                   std::span<const Vertex> moved, int d, bool spider) {
  if (d < 1) fail("vsplit: d must be positive");
  if (v0 < 0 || v0 >= g.vertex_count()) fail("vsplit: v0 out of range");
  const int want = spider ? d : d - 1;
  if (static_cast<int>(shared.size()) != want) {
    fail(spider ? "spider split: |shared| must equal d" : "vsplit: |shared| must equal d-1");
  }
  require_distinct_vertices(g, shared, "vsplit");
  require_distinct_vertices(g, moved, "vsplit");
  for (Vertex w : shared) {
    if (!g.has_edge(v0, w)) fail("vsplit: shared vertex is not a neighbour of v0");
  }
  std::set<Vertex> moved_set(moved.begin(), moved.end());
  for (Vertex w : moved) {
    if (!g.has_edge(v0, w)) fail("vsplit: moved vertex is not a neighbour of v0");
    if (std::find(shared.begin(), shared.end(), w) != shared.end()) {
      fail("vsplit: shared and moved overlap");
    }
  }

  const int n = g.vertex_count();
  const Vertex w0 = n;
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    const Vertex other = e.u == v0 ? e.v : e.v == v0 ? e.u : -1;
    if (other >= 0 && moved_set.count(other)) {
      es.emplace_back(w0, other);
    } else {
      es.push_back(e);
    }
  }
  for (Vertex w : shared) es.emplace_back(w0, w);
  if (!spider) es.emplace_back(v0, w0);
  return Graph(n + 1, std::move(es));
}

Graph substitute(const Graph& g, Vertex v0, const Graph& h,
                 const std::optional<std::map<Vertex, Vertex>>& assignment) {
  const int n = g.vertex_count();
  if (v0 < 0 || v0 >= n) fail("subst: v0 out of range");
  if (h.vertex_count() < 1) fail("subst: H must have at least one vertex");

  std::map<Vertex, Vertex> assign;
  if (assignment) {
    assign = *assignment;
    for (const auto& [w, target] : assign) {
      if (!g.has_edge(v0, w)) fail("subst: assignment names a non-edge at v0");
      if (target < 0 || target >= h.vertex_count()) fail("subst: assignment target not in H");
    }
    for (Vertex w : g.neighbors(v0)) {
      if (!assign.count(w)) fail("subst: assignment misses an edge at v0");
    }
  } else {
    for (Vertex w : g.neighbors(v0)) assign[w] = 0;
  }

  auto image = [&](Vertex hv) { return hv == 0 ? v0 : n + hv - 1; };
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (e.u == v0) {
      es.emplace_back(image(assign.at(e.v)), e.v);
    } else if (e.v == v0) {
      es.emplace_back(image(assign.at(e.u)), e.u);
    } else {
      es.push_back(e);
    }
  }
  for (const Edge& e : h.edges()) es.emplace_back(image(e.u), image(e.v));
  return Graph(n + h.vertex_count() - 1, std::move(es));
}

Graph one_reduction(const Graph& g, Vertex v, Vertex x, Vertex y) {
  if (x == v || y == v) fail("reduce1: added pair must avoid v");
  if (!g.has_edge(v, x) || !g.has_edge(v, y)) fail("reduce1: x and y must be neighbours of v");
  if (g.has_edge(x, y)) fail("reduce1: xy is already an edge");
  Graph out = g.without_vertex(v);
  auto shift = [v](Vertex a) { return a > v ? a - 1 : a; };
  return out.with_edge(shift(x), shift(y));
}

std::optional<Edge> one_reduction_search(const Graph& g, Vertex v, int d) {
  if (v < 0 || v >= g.vertex_count()) fail("one_reduction_search: vertex out of range");
  if (g.degree(v) != d + 1) fail("one_reduction_search: vertex degree must be d+1");

  // g - v with v kept as an isolated vertex, so indices stay put.
  std::vector<Edge> rest;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) rest.push_back(e);
  }
  PebbleGame game(g.vertex_count(), d, d);
  for (const Edge& e : rest) {
    if (!game.try_add(e.u, e.v)) fail("one_reduction_search: graph is not (d,d)-sparse");
  }

  const auto& nb = g.neighbors(v);  // sorted ascending
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      if (g.has_edge(nb[i], nb[j])) continue;
      if (game.can_add(nb[i], nb[j])) return Edge(nb[i], nb[j]);
    }
  }
  return std::nullopt;
}

Graph apply(const Graph& g, const OpRecord& rec) {
  if (rec.n_before != g.vertex_count()) fail("apply: record does not match the graph size");
  switch (rec.kind) {
    case OpKind::cone:
      return cone(g);
    case OpKind::brace:
      return brace(g, rec.vertices, rec.d);
    case OpKind::ext0:
      return zero_extension(g, rec.vertices, rec.d);
    case OpKind::ext1:
      if (!rec.edge) fail("apply: ext1 record has no removed edge");
      return one_extension(g, rec.vertices, *rec.edge, rec.d);
    case OpKind::vsplit:
    case OpKind::spider:
      return vertex_split(g, rec.pivot, rec.vertices, rec.moved, rec.d,
                          rec.kind == OpKind::spider);
    case OpKind::subst:
      if (!rec.h) fail("apply: subst record has no H");
      return substitute(g, rec.pivot, *rec.h,
                        rec.assignment.empty() ? std::nullopt
                                               : std::optional<std::map<Vertex, Vertex>>(rec.assignment));
    case OpKind::reduce1:
      if (!rec.edge) fail("apply: reduce1 record has no added edge");
      return one_reduction(g, rec.pivot, rec.edge->u, rec.edge->v);
  }
  fail("apply: unknown operation");
}

Generated henneberg_generate(int d, int n, std::uint64_t seed) {
  if (d < 1) fail("henneberg_generate: d must be positive");
  if (n < 2 * d) fail("henneberg_generate: n must be at least 2d");
  std::mt19937_64 rng(seed);
  Generated out{Graph::complete(2 * d), {}};

  std::vector<Vertex> pool;
  while (out.graph.vertex_count() < n) {
    const Graph& g = out.graph;
    const int cur = g.vertex_count();
    const bool try_ext1 = std::bernoulli_distribution(0.5)(rng);

    pool.resize(cur);
    for (Vertex v = 0; v < cur; ++v) pool[v] = v;
    std::shuffle(pool.begin(), pool.end(), rng);

    OpRecord rec;
    rec.d = d;
    rec.n_before = cur;
    rec.n_after = cur + 1;
    rec.kind = OpKind::ext0;
    rec.vertices.assign(pool.begin(), pool.begin() + d);

    if (try_ext1) {
      std::vector<Vertex> nbrs(pool.begin(), pool.begin() + d + 1);
      std::vector<Edge> inside;
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
          if (g.has_edge(nbrs[i], nbrs[j])) inside.emplace_back(nbrs[i], nbrs[j]);
      if (!inside.empty()) {
        const Edge e = inside[std::uniform_int_distribution<std::size_t>(0, inside.size() - 1)(rng)];
        std::vector<Vertex> ordered;
        for (Vertex x : nbrs)
          if (x != e.u && x != e.v) ordered.push_back(x);
        ordered.push_back(e.u);
        ordered.push_back(e.v);
        rec.kind = OpKind::ext1;
        rec.vertices = std::move(ordered);
        rec.edge = e;
      }
    }
    out.graph = apply(g, rec);
    out.log.push_back(std::move(rec));
  }
  return out;
}

Graph replay(Graph start, std::span<const OpRecord> log) {
  for (const OpRecord& rec : log) start = apply(start, rec);
  return start;
}

Graph random_sparse_graph(int n, const SparsityParams& params, std::uint64_t seed,
                          int max_degree) {
  params.validate();
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::shuffle(pairs.begin(), pairs.end(), rng);

  PebbleGame game(n, params.k, params.l);
  std::vector<int> degree(n, 0);
  std::vector<Edge> kept;
  for (const Edge& e : pairs) {
    if (max_degree > 0 && (degree[e.u] >= max_degree || degree[e.v] >= max_degree)) continue;
    PebbleGame trial = game;
    bool ok = true;
    for (int c = 0; c < params.edge_multiplier && ok; ++c) ok = trial.try_add(e.u, e.v);
    if (!ok) continue;
    game = std::move(trial);
    ++degree[e.u];
    ++degree[e.v];
    kept.push_back(e);
  }
  return Graph(n, std::move(kept));
}

Graph random_degree_bounded_sparse(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 1) fail("random_degree_bounded_sparse: need d >= 1 and n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);

  // One vertex is capped at d+1 so the minimum degree bound always holds.
  std::vector<int> cap(n, d + 2);
  cap[order[0]] = d + 1;
  std::vector<int> degree(n, 0);
  std::vector<Edge> kept;
  PebbleGame game(n, d, d);

  for (int i = 1; i < n; ++i) {
    std::vector<Vertex> open;
    for (int j = 0; j < i; ++j)
      if (degree[order[j]] < cap[order[j]]) open.push_back(order[j]);
    const Vertex parent = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    const Vertex child = order[i];
    game.try_add(parent, child);  // a forest is always independent
    ++degree[parent];
    ++degree[child];
    kept.emplace_back(parent, child);
  }

  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (std::find(kept.begin(), kept.end(), Edge(a, b)) == kept.end()) pairs.emplace_back(a, b);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const Edge& e : pairs) {
    if (degree[e.u] >= cap[e.u] || degree[e.v] >= cap[e.v]) continue;
    if (!game.try_add(e.u, e.v)) continue;
    ++degree[e.u];
    ++degree[e.v];
    kept.push_back(e);
  }
  return Graph(n, std::move(kept));
}

}  // namespace lqrigid
