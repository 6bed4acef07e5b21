#include "lqrigid/sparsity.hpp"

#include <stdexcept>

namespace lqrigid {

void SparsityParams::validate() const {
  if (k < 1) throw std::invalid_argument("sparsity: k must be positive");
  if (l < 0 || l >= 2 * k) throw std::invalid_argument("sparsity: need 0 <= l < 2k");
  if (edge_multiplier != 1 && edge_multiplier != 2) {
    throw std::invalid_argument("sparsity: edge_multiplier must be 1 or 2");
  }
}

PebbleGame::PebbleGame(int n, int k, int l) : k_(k), l_(l), pebbles_(n, k), out_(n) {
  if (l < 0 || l >= 2 * k) throw std::invalid_argument("pebble game: need 0 <= l < 2k");
}

// Depth-first search along out-edges from `target` for a vertex holding a
// free pebble; the path is then reversed so the pebble arrives at `target`.
bool PebbleGame::pull_pebble(Vertex target, Vertex blocked) {
  const int n = static_cast<int>(pebbles_.size());
  std::vector<int> parent(n, -2);
  parent[target] = -1;
  parent[blocked] = -1;
  std::vector<Vertex> stack{target};
  Vertex found = -1;
  while (!stack.empty() && found < 0) {
    Vertex a = stack.back();
    stack.pop_back();
    for (Vertex b : out_[a]) {
      if (parent[b] != -2) continue;
      parent[b] = a;
      if (pebbles_[b] > 0) {
        found = b;
        break;
      }
      stack.push_back(b);
    }
  }
  if (found < 0) return false;

  --pebbles_[found];
  for (Vertex b = found; b != target;) {
    Vertex a = parent[b];
    auto& outs = out_[a];
    for (auto it = outs.begin(); it != outs.end(); ++it) {
      if (*it == b) {
        outs.erase(it);
        break;
      }
    }
    out_[b].push_back(a);
    b = a;
  }
  ++pebbles_[target];
  return true;
}

bool PebbleGame::gather(Vertex u, Vertex v) {
  while (pebbles_[u] + pebbles_[v] < l_ + 1) {
    if (pull_pebble(u, v)) continue;
    if (pull_pebble(v, u)) continue;
    return false;
  }
  return true;
}

bool PebbleGame::can_add(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("pebble game: loops are not supported");
  return gather(u, v);
}

bool PebbleGame::try_add(Vertex u, Vertex v) {
  if (!can_add(u, v)) return false;
  if (pebbles_[u] > 0) {
    --pebbles_[u];
    out_[u].push_back(v);
  } else {
    --pebbles_[v];
    out_[v].push_back(u);
  }
  ++accepted_;
  return true;
}

bool is_sparse(const Graph& g, const SparsityParams& params) {
  params.validate();
  PebbleGame game(g.vertex_count(), params.k, params.l);
  for (const Edge& e : g.edges()) {
    for (int c = 0; c < params.edge_multiplier; ++c) {
      if (!game.try_add(e.u, e.v)) return false;
    }
  }
  return true;
}

bool is_tight(const Graph& g, int d) {
  return f_count(g, d) == d && is_sparse(g, SparsityParams::dd(d));
}

bool edge_addable(const Graph& g, int d, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("edge_addable: x and y must differ");
  if (x < 0 || y < 0 || x >= g.vertex_count() || y >= g.vertex_count()) {
    throw std::invalid_argument("edge_addable: vertex out of range");
  }
  if (g.has_edge(x, y)) return false;
  PebbleGame game(g.vertex_count(), d, d);
  for (const Edge& e : g.edges()) {
    if (!game.try_add(e.u, e.v)) {
      throw std::invalid_argument("edge_addable: graph is not (d,d)-sparse");
    }
  }
  return game.can_add(x, y);
}

}  // namespace lqrigid
