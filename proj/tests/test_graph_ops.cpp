#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lqrigid/graph_ops.hpp"
#include "lqrigid/rank.hpp"
#include "lqrigid/sparsity.hpp"
#include "support/brute.hpp"

using namespace lqrigid;

namespace {

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> v(g.vertex_count());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<Vertex> sample(const std::vector<Vertex>& from, int k, std::mt19937_64& rng) {
  std::vector<Vertex> s = from;
  std::shuffle(s.begin(), s.end(), rng);
  s.resize(k);
  return s;
}

bool independent(const Graph& g, int d, double q) { return verdict(g, LqSpace(d, q)).independent; }

}  // namespace

TEST(Cone, Examples) {
  EXPECT_EQ(cone(Graph::complete(3)), Graph::complete(4));
  EXPECT_EQ(cone(Graph(1)), Graph::complete(2));
  Graph k = Graph::complete(1);
  for (int d = 1; d < 5; ++d) {
    k = cone(k);
    EXPECT_EQ(k, Graph::complete(d + 1));
    EXPECT_TRUE(verdict(k, LqSpace(d, 2.0)).minimally_rigid);
  }
}

TEST(Brace, Examples) {
  EXPECT_EQ(brace(Graph::complete(2), all_vertices(Graph::complete(2)), 1), Graph::complete(4));
  EXPECT_EQ(brace(Graph::complete(4), all_vertices(Graph::complete(4)), 2), Graph::complete(6));
  const std::vector<Vertex> three{0, 1, 2};
  EXPECT_THROW(brace(Graph::complete(4), three, 2), std::invalid_argument);

  const Graph w = Graph::wheel(5);
  ASSERT_TRUE(is_tight(w, 2));
  const std::vector<Vertex> s{0, 1, 2, 3};
  EXPECT_FALSE(is_tight(brace(w, s, 2), 3));
  EXPECT_TRUE(is_sparse(brace(w, s, 2), SparsityParams::dd(3)));
}

TEST(Brace, SparsityTransfer) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const int d = 1 + i % 3;
    const int n = 2 * d + (i / 3) % (9 - 2 * d);
    const Graph g = random_sparse_graph(n, SparsityParams::dd(d), rng());
    ASSERT_TRUE(brute::is_sparse(g, d, d));
    const Graph b = brace(g, sample(all_vertices(g), 2 * d, rng), d);
    EXPECT_TRUE(is_sparse(b, SparsityParams::dd(d + 1)));
    // f_{d+1} = f_d + |V| + 2(d+1) - (4d+1)
    EXPECT_EQ(f_count(b, d + 1), f_count(g, d) + g.vertex_count() + 2 * (d + 1) - (4 * d + 1));
    EXPECT_EQ(is_tight(b, d + 1), is_tight(g, d) && g.vertex_count() == 2 * d);
  }
}

TEST(ZeroExtension, Examples) {
  const std::vector<Vertex> s{0, 1, 2};
  EXPECT_EQ(zero_extension(Graph::complete(3), s, 3), Graph::complete(4));
  EXPECT_EQ(f_count(zero_extension(Graph::complete(3), s, 3), 3), f_count(Graph::complete(3), 3));
  EXPECT_THROW(zero_extension(Graph::complete(3), s, 2), std::invalid_argument);
  EXPECT_THROW(zero_extension(Graph::complete(3), std::vector<Vertex>{0, 0}, 2), std::invalid_argument);

  Graph g = zero_extension(Graph::complete(4), std::vector<Vertex>{0, 1}, 2);
  g = zero_extension(g, std::vector<Vertex>{2, 4}, 2);
  EXPECT_EQ(g.edge_count(), 10);
  EXPECT_TRUE(is_tight(g, 2));
  for (double q : {1.5, 3.0}) EXPECT_TRUE(verdict(g, LqSpace(2, q)).minimally_rigid);
}

TEST(OneExtension, Examples) {
  const Graph k4 = Graph::complete(4);
  const Graph g = one_extension(k4, std::vector<Vertex>{0, 1, 2}, Edge(1, 2), 2);
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_TRUE(brute::is_tight(g, 2));
  EXPECT_EQ(f_count(g, 2), f_count(k4, 2));
  EXPECT_THROW(one_extension(k4, std::vector<Vertex>{0, 1, 2}, Edge(0, 3), 2), std::invalid_argument);
  EXPECT_THROW(one_extension(k4.without_edge(1, 2), std::vector<Vertex>{0, 1, 2}, Edge(1, 2), 2),
               std::invalid_argument);
}

TEST(VertexSplit, Examples) {
  const Graph k4 = Graph::complete(4);
  const Graph g = vertex_split(k4, 0, std::vector<Vertex>{1, 2}, {}, 3, false);
  EXPECT_TRUE(brute::isomorphic(g, Graph::complete(5).without_edge(3, 4)));
  EXPECT_EQ(f_count(g, 3), f_count(k4, 3));

  EXPECT_THROW(vertex_split(k4, 0, std::vector<Vertex>{1}, {}, 3, false), std::invalid_argument);
  EXPECT_THROW(vertex_split(k4, 0, std::vector<Vertex>{1, 2}, std::vector<Vertex>{2}, 3, false),
               std::invalid_argument);
  const Graph p = Graph::path(4);
  EXPECT_THROW(vertex_split(p, 0, std::vector<Vertex>{2}, {}, 2, false), std::invalid_argument);

  const Graph sp = vertex_split(k4, 0, std::vector<Vertex>{1, 2, 3}, {}, 3, true);
  EXPECT_FALSE(sp.has_edge(0, 4));
  EXPECT_EQ(f_count(sp, 3), f_count(k4, 3));
}

TEST(VertexSplit, IndependenceOnTightPlanarInputs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = henneberg_generate(2, 6 + static_cast<int>(seed % 3), seed).graph;
    std::mt19937_64 rng(seed);
    const Vertex v0 = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
    const auto& nb = g.neighbors(v0);
    const std::vector<Vertex> shared{nb[0]};
    std::vector<Vertex> moved;
    for (std::size_t i = 1; i < nb.size(); ++i)
      if (rng() % 2) moved.push_back(nb[i]);
    const Graph out = vertex_split(g, v0, shared, moved, 2, false);
    for (double q : {1.5, 3.0}) EXPECT_EQ(verdict(out, LqSpace(2, q)).rank, out.edge_count());
  }
}

TEST(Substitute, Examples) {
  const Graph w = Graph::wheel(5);
  // spread the four spokes over the four vertices of K4
  const Graph g = substitute(w, 0, Graph::complete(4), std::map<Vertex, Vertex>{{1, 0}, {2, 1}, {3, 2}, {4, 3}});
  EXPECT_EQ(g.vertex_count(), 8);
  EXPECT_EQ(g.edge_count(), 14);
  EXPECT_EQ(f_count(g, 2), 2);
  EXPECT_TRUE(is_tight(g, 2));
  for (double q : {1.5, 3.0}) EXPECT_TRUE(verdict(g, LqSpace(2, q)).minimally_rigid);

  EXPECT_EQ(substitute(w, 2, Graph(1)), w);
  EXPECT_THROW(substitute(w, 0, Graph::complete(4), std::map<Vertex, Vertex>{{1, 0}}), std::invalid_argument);
  EXPECT_THROW(substitute(w, 0, Graph::complete(4), std::map<Vertex, Vertex>{{1, 0}, {2, 1}, {3, 2}, {4, 9}}),
               std::invalid_argument);
}

TEST(Substitute, DisconnectedHOnCompleteGraph) {
  // K_{d+3} with one vertex replaced by two isolated vertices, spokes shared
  // d+1 / 1 between them: the shape of the degree-bounded base case.
  const int d = 3;
  const Graph k = Graph::complete(d + 3);
  std::map<Vertex, Vertex> assign;
  for (Vertex w = 1; w < d + 3; ++w) assign[w] = w <= d + 1 ? 0 : 1;
  const Graph g = substitute(k, 0, Graph(2), assign);
  EXPECT_EQ(g.vertex_count(), d + 4);
  EXPECT_EQ(g.edge_count(), k.edge_count());
  EXPECT_TRUE(is_sparse(g, SparsityParams::dd(d)));
  for (double q : {1.5, 3.0}) EXPECT_TRUE(verdict(g, LqSpace(d, q)).independent);
}

TEST(OneReductionSearch, Examples) {
  EXPECT_FALSE(one_reduction_search(Graph::complete(4), 0, 2).has_value());
  EXPECT_FALSE(one_reduction_search(Graph::complete(5), 2, 3).has_value());
  EXPECT_THROW(one_reduction_search(Graph::complete(4), 0, 3), std::invalid_argument);

  const Graph k6 = Graph::complete(6);
  const Graph g = one_extension(k6, std::vector<Vertex>{0, 1, 2, 3}, Edge(2, 3), 3);
  const auto e = one_reduction_search(g, 6, 3);
  ASSERT_TRUE(e.has_value());
  const Graph r = one_reduction(g, 6, e->u, e->v);
  EXPECT_TRUE(brute::is_sparse(r, 3, 3));
  EXPECT_TRUE(brute::isomorphic(r, k6));
}

TEST(OneReductionSearch, SoundAndLexicographic) {
  std::mt19937_64 rng(42);
  int found = 0;
  for (int i = 0; i < 300; ++i) {
    const int d = 2 + i % 2;
    const Graph g = random_sparse_graph(d + 2 + i % 5, SparsityParams::dd(d), rng());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != d + 1) continue;
      const auto e = one_reduction_search(g, v, d);
      // brute-force reference: first nonadjacent neighbour pair whose reduction stays sparse
      std::optional<Edge> ref;
      const auto& nb = g.neighbors(v);
      for (std::size_t a = 0; a < nb.size() && !ref; ++a) {
        for (std::size_t b = a + 1; b < nb.size() && !ref; ++b) {
          if (g.has_edge(nb[a], nb[b])) continue;
          if (brute::is_sparse(one_reduction(g, v, nb[a], nb[b]), d, d)) ref = Edge(nb[a], nb[b]);
        }
      }
      ASSERT_EQ(e, ref);
      if (e) {
        EXPECT_TRUE(is_sparse(one_reduction(g, v, e->u, e->v), SparsityParams::dd(d)));
        ++found;
      }
    }
  }
  EXPECT_GT(found, 30);
}

TEST(OneExtension, RoundTripThroughReduction) {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    const int d = 2 + i % 2;
    const Graph g = henneberg_generate(d, 2 * d + i % 2, rng()).graph;
    const std::vector<Vertex> nbrs = sample(all_vertices(g), d + 1, rng);
    if (!g.has_edge(nbrs[d - 1], nbrs[d])) continue;
    const Graph ext = one_extension(g, nbrs, Edge(nbrs[d - 1], nbrs[d]), d);
    const auto e = one_reduction_search(ext, g.vertex_count(), d);
    ASSERT_TRUE(e.has_value());
    const Graph back = one_reduction(ext, g.vertex_count(), e->u, e->v);
    EXPECT_TRUE(brute::is_tight(back, d));
    // another nonadjacent pair may come first; when the removed edge is the
    // only candidate the input must come back
    if (*e == Edge(nbrs[d - 1], nbrs[d])) {
      EXPECT_TRUE(brute::isomorphic(back, g));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(Henneberg, TightAndReplayable) {
  EXPECT_EQ(henneberg_generate(2, 4, 9).graph, Graph::complete(4));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Generated gen = henneberg_generate(3, 10, seed);
    EXPECT_TRUE(is_tight(gen.graph, 3));
    EXPECT_EQ(replay(Graph::complete(6), gen.log), gen.graph);
    EXPECT_EQ(henneberg_generate(3, 10, seed).graph, gen.graph);
  }
  EXPECT_THROW(henneberg_generate(3, 5, 0), std::invalid_argument);
}

TEST(Apply, RejectsMismatchedRecord) {
  OpRecord rec;
  rec.kind = OpKind::cone;
  rec.n_before = 3;
  EXPECT_THROW(apply(Graph::complete(4), rec), std::invalid_argument);
  rec.n_before = 4;
  EXPECT_EQ(apply(Graph::complete(4), rec), Graph::complete(5));
  EXPECT_THROW(op_kind_from_string("twist"), std::invalid_argument);
  for (OpKind k : {OpKind::cone, OpKind::brace, OpKind::ext0, OpKind::ext1, OpKind::vsplit, OpKind::spider,
                   OpKind::subst, OpKind::reduce1}) {
    EXPECT_EQ(op_kind_from_string(to_string(k)), k);
  }
}

TEST(Generators, DegreeBoundedSparse) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 5 + static_cast<int>(seed % 6);
    const Graph g = random_degree_bounded_sparse(3, n, seed);
    EXPECT_TRUE(g.is_connected());
    EXPECT_LE(g.min_degree(), 4);
    EXPECT_LE(g.max_degree(), 5);
    EXPECT_TRUE(brute::is_sparse(g, 3, 3));
  }
}

TEST(Generators, RandomSparseHalfIntegerCount) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_sparse_graph(4 + static_cast<int>(seed % 7), {5, 7, 2}, seed);
    EXPECT_TRUE(brute::is_sparse(g, 5, 7, 2));
  }
}

TEST(Operations, IndependenceTransfer) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 12; ++i) {
    const int d = 2;
    const double q = i % 2 ? 1.5 : 3.0;
    const Graph g = henneberg_generate(d, 4 + i % 4, rng()).graph;
    ASSERT_TRUE(independent(g, d, q));
    EXPECT_TRUE(independent(cone(g), d + 1, q));
    EXPECT_TRUE(independent(brace(g, sample(all_vertices(g), 2 * d, rng), d), d + 1, q));
    EXPECT_TRUE(independent(zero_extension(g, sample(all_vertices(g), d, rng), d), d, q));
  }
}
