#include "lqrigid/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lqrigid {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  index_edges();
}

void Graph::index_edges() {
  nbrs_.assign(n_, {});
  edge_id_.assign(n_, std::vector<int>(n_, -1));
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v >= n_) {
      throw std::invalid_argument("graph: endpoint out of range in edge (" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) + ")");
    }
    if (e.u == e.v) throw std::invalid_argument("graph: self-loop at " + std::to_string(e.u));
    if (edge_id_[e.u][e.v] >= 0) {
      throw std::invalid_argument("graph: duplicate edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
    edge_id_[e.u][e.v] = edge_id_[e.v][e.u] = i;
    nbrs_[e.u].push_back(e.v);
    nbrs_[e.v].push_back(e.u);
  }
  for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) es.emplace_back(a, b);
  return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int a = 0; a + 1 < n; ++a) es.emplace_back(a, a + 1);
  return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("graph: cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a) es.emplace_back(a, (a + 1) % n);
  return Graph(n, std::move(es));
}

Graph Graph::wheel(int n) {
  if (n < 4) throw std::invalid_argument("graph: wheel needs at least 4 vertices");
  std::vector<Edge> es;
  for (int r = 1; r < n; ++r) es.emplace_back(0, r);
  for (int r = 1; r < n; ++r) es.emplace_back(r, r + 1 < n ? r + 1 : 1);
  return Graph(n, std::move(es));
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
  return edge_id_[a][b];
}

int Graph::min_degree() const {
  int m = n_ == 0 ? 0 : degree(0);
  for (int v = 1; v < n_; ++v) m = std::min(m, degree(v));
  return m;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : nbrs_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  auto es = edges_;
  es.emplace_back(a, b);
  return Graph(n_, std::move(es));
}

Graph Graph::without_edge(Vertex a, Vertex b) const {
  const int idx = edge_index(a, b);
  if (idx < 0) throw std::invalid_argument("graph: edge to remove is absent");
  auto es = edges_;
  es.erase(es.begin() + idx);
  return Graph(n_, std::move(es));
}

Graph Graph::without_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
  std::vector<Edge> es;
  auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
  for (const Edge& e : edges_) {
    if (e.u == v || e.v == v) continue;
    es.emplace_back(shift(e.u), shift(e.v));
  }
  return Graph(n_ - 1, std::move(es));
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos.at(keep[i]) = static_cast<int>(i);
  std::vector<Edge> es;
  for (const Edge& e : edges_) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) es.emplace_back(pos[e.u], pos[e.v]);
  }
  return Graph(static_cast<int>(keep.size()), std::move(es));
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  auto ea = a.edges_, eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

long f_count(const Graph& g, int d) {
  return static_cast<long>(d) * g.vertex_count() - g.edge_count();
}

int induced_edge_count(const Graph& g, std::uint64_t mask) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) ++count;
  }
  return count;
}

int cross_edge_count(const Graph& g, std::uint64_t u_mask, std::uint64_t w_mask) {
  const std::uint64_t u_only = u_mask & ~w_mask;
  const std::uint64_t w_only = w_mask & ~u_mask;
  int count = 0;
  for (const Edge& e : g.edges()) {
    const bool a = u_only >> e.u & 1u, b = w_only >> e.v & 1u;
    const bool c = u_only >> e.v & 1u, d = w_only >> e.u & 1u;
    if ((a && b) || (c && d)) ++count;
  }
  return count;
}

}  // namespace lqrigid
