#include "lqrigid/surfaces.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace lqrigid {
namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

Graph graph_of_faces(int n, const std::vector<Face>& faces) {
  std::set<Edge> seen;
  std::vector<Edge> es;
  for (const Face& f : faces) {
    for (int i = 0; i < 3; ++i) {
      const Vertex a = f[i], b = f[(i + 1) % 3];
      if (a < 0 || a >= n || b < 0 || b >= n) fail("triangulation: face vertex out of range");
      if (a == b) fail("triangulation: face with a repeated vertex");
      Edge e(a, b);
      if (seen.insert(e).second) es.push_back(e);
    }
  }
  return Graph(n, std::move(es));
}

// Frozen output of the exhaustive two-faces-per-edge / link-cycle search
// (kept as a test). Vertices 4, 5, 6 span the missing triangle of K7-K3.
const std::vector<Face> kK6Faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                    {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
const std::vector<Face> kK7MinusK3Faces = {{0, 1, 4}, {0, 1, 5}, {0, 2, 4}, {0, 2, 6},
                                           {0, 3, 5}, {0, 3, 6}, {1, 2, 5}, {1, 2, 6},
                                           {1, 3, 4}, {1, 3, 6}, {2, 3, 4}, {2, 3, 5}};

}  // namespace

std::string_view to_string(Surface s) {
  return s == Surface::sphere ? "sphere" : "projective";
}

std::string_view to_string(BaseKind b) {
  switch (b) {
    case BaseKind::K4: return "K4";
    case BaseKind::K6: return "K6";
    case BaseKind::K7_minus_K3: return "K7mK3";
  }
  return "?";
}

Surface surface_from_string(std::string_view s) {
  if (s == "sphere") return Surface::sphere;
  if (s == "projective" || s == "projective_plane") return Surface::projective_plane;
  fail("unknown surface '" + std::string(s) + "'");
}

BaseKind base_kind_from_string(std::string_view s) {
  if (s == "K4") return BaseKind::K4;
  if (s == "K6") return BaseKind::K6;
  if (s == "K7mK3" || s == "K7_minus_K3") return BaseKind::K7_minus_K3;
  fail("unknown base '" + std::string(s) + "'");
}

SurfaceTriangulation::SurfaceTriangulation(int n, std::vector<Face> faces, Surface surface)
    : faces_(std::move(faces)), surface_(surface), graph_(graph_of_faces(n, faces_)) {}

int SurfaceTriangulation::euler_characteristic() const {
  return graph_.vertex_count() - graph_.edge_count() + static_cast<int>(faces_.size());
}

std::optional<std::vector<Vertex>> SurfaceTriangulation::link_cycle(Vertex v) const {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Face& f : faces_) {
    const auto it = std::find(f.begin(), f.end(), v);
    if (it == f.end()) continue;
    const int i = static_cast<int>(it - f.begin());
    const Vertex x = f[(i + 1) % 3], y = f[(i + 2) % 3];
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  if (adj.size() < 3) return std::nullopt;
  for (auto& [x, ys] : adj) {
    if (ys.size() != 2 || ys[0] == ys[1]) return std::nullopt;
  }
  const Vertex start = adj.begin()->first;
  const auto& first = adj[start];
  std::vector<Vertex> cycle{start};
  Vertex prev = start, cur = std::min(first[0], first[1]);
  while (cur != start) {
    cycle.push_back(cur);
    const auto& ys = adj[cur];
    const Vertex next = ys[0] == prev ? ys[1] : ys[0];
    prev = cur;
    cur = next;
    if (cycle.size() > adj.size()) return std::nullopt;
  }
  if (cycle.size() != adj.size()) return std::nullopt;
  return cycle;
}

Validation validate(const SurfaceTriangulation& t) {
  auto bad = [](std::string msg) { return Validation{false, std::move(msg)}; };
  const Graph& g = t.graph();

  std::set<std::array<Vertex, 3>> distinct;
  for (const Face& f : t.faces()) {
    auto s = f;
    std::sort(s.begin(), s.end());
    if (!distinct.insert(s).second) {
      return bad("duplicate face {" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                 std::to_string(s[2]) + "}");
    }
  }

  std::vector<int> cover(g.edge_count(), 0);
  for (const Face& f : t.faces()) {
    for (int i = 0; i < 3; ++i) {
      const int idx = g.edge_index(f[i], f[(i + 1) % 3]);
      if (idx < 0) return bad("face side missing from graph");
      ++cover[idx];
    }
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    if (cover[i] != 2) {
      const Edge e = g.edges()[i];
      return bad("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") lies in " +
                 std::to_string(cover[i]) + " faces, expected 2");
    }
  }

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto link = t.link_cycle(v);
    if (!link) return bad("link of vertex " + std::to_string(v) + " is not a single cycle");
    if (static_cast<int>(link->size()) != g.degree(v)) {
      return bad("link of vertex " + std::to_string(v) + " misses a neighbour");
    }
  }

  const int chi = t.euler_characteristic();
  const int want = t.surface() == Surface::sphere ? 2 : 1;
  if (chi != want) {
    return bad("Euler characteristic " + std::to_string(chi) + ", expected " +
               std::to_string(want));
  }
  const int n = g.vertex_count();
  const int edges_expected = t.surface() == Surface::sphere ? 3 * n - 6 : 3 * n - 3;
  if (g.edge_count() != edges_expected) {
    return bad("edge count " + std::to_string(g.edge_count()) + ", expected " +
               std::to_string(edges_expected));
  }
  return {};
}

SurfaceTriangulation base_complex(BaseKind kind) {
  switch (kind) {
    case BaseKind::K4:
      return SurfaceTriangulation(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, Surface::sphere);
    case BaseKind::K6:
      return SurfaceTriangulation(6, kK6Faces, Surface::projective_plane);
    case BaseKind::K7_minus_K3:
      return SurfaceTriangulation(7, kK7MinusK3Faces, Surface::projective_plane);
  }
  fail("base_complex: unknown kind");
}

namespace {

struct SplitPlan {
  std::vector<Vertex> cycle;
  int ia = 0;
  int ib = 0;
};

SplitPlan plan_split(const SurfaceTriangulation& t, Vertex v, Vertex a, Vertex b) {
  if (v < 0 || v >= t.vertex_count()) fail("topological split: vertex out of range");
  if (a == b) fail("topological split: a and b must differ");
  auto cycle = t.link_cycle(v);
  if (!cycle) fail("topological split: link of v is not a cycle");
  auto pos = [&](Vertex x) {
    const auto it = std::find(cycle->begin(), cycle->end(), x);
    if (it == cycle->end()) fail("topological split: a and b must lie in the link of v");
    return static_cast<int>(it - cycle->begin());
  };
  SplitPlan plan{*cycle, 0, 0};
  plan.ia = pos(a);
  plan.ib = pos(b);
  return plan;
}

}  // namespace

SurfaceTriangulation topological_vertex_split(const SurfaceTriangulation& t, Vertex v, Vertex a,
                                              Vertex b) {
  const SplitPlan plan = plan_split(t, v, a, b);
  const int m = static_cast<int>(plan.cycle.size());
  const int span = (plan.ib - plan.ia + m) % m;
  auto offset = [&](Vertex x) {
    const int p = static_cast<int>(std::find(plan.cycle.begin(), plan.cycle.end(), x) - plan.cycle.begin());
    return (p - plan.ia + m) % m;
  };

  const Vertex w0 = t.vertex_count();
  std::vector<Face> faces = t.faces();
  for (Face& f : faces) {
    const auto it = std::find(f.begin(), f.end(), v);
    if (it == f.end()) continue;
    const int i = static_cast<int>(it - f.begin());
    const int ox = offset(f[(i + 1) % 3]), oy = offset(f[(i + 2) % 3]);
    // The face spans link positions lo, lo+1; it moves to w0 when that step
    // lies on the arc from a to b.
    const int lo = std::min(ox, oy), hi = std::max(ox, oy);
    const bool step = hi - lo == 1;
    if (step && hi <= span) *it = w0;
  }
  faces.push_back({v, w0, a});
  faces.push_back({v, w0, b});

  try {
    SurfaceTriangulation out(t.vertex_count() + 1, std::move(faces), t.surface());
    if (auto check = validate(out); !check) {
      fail("topological split: result is not a triangulation (" + check.diagnostic + ")");
    }
    return out;
  } catch (const std::invalid_argument& e) {
    fail(std::string("topological split rejected: ") + e.what());
  }
}

OpRecord split_record(const SurfaceTriangulation& t, Vertex v, Vertex a, Vertex b) {
  const SplitPlan plan = plan_split(t, v, a, b);
  const int m = static_cast<int>(plan.cycle.size());
  OpRecord rec;
  rec.kind = OpKind::vsplit;
  rec.d = 3;
  rec.pivot = v;
  rec.vertices = {a, b};
  for (int k = (plan.ia + 1) % m; k != plan.ib; k = (k + 1) % m) rec.moved.push_back(plan.cycle[k]);
  rec.n_before = t.vertex_count();
  rec.n_after = t.vertex_count() + 1;
  return rec;
}

GeneratedTriangulation generate_triangulation(Surface surface, int n, std::uint64_t seed,
                                              std::optional<BaseKind> base) {
  const BaseKind kind = base.value_or(surface == Surface::sphere ? BaseKind::K4 : BaseKind::K6);
  const bool sphere_base = kind == BaseKind::K4;
  if (sphere_base != (surface == Surface::sphere)) {
    fail("generate_triangulation: base does not triangulate the requested surface");
  }
  GeneratedTriangulation out{base_complex(kind), {}, kind};
  if (n < out.triangulation.vertex_count()) {
    fail("generate_triangulation: n is below the base size");
  }

  std::mt19937_64 rng(seed);
  while (out.triangulation.vertex_count() < n) {
    const SurfaceTriangulation& t = out.triangulation;
    const Graph& g = t.graph();
    long total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) total += static_cast<long>(g.degree(v)) * (g.degree(v) - 1);
    long pick = std::uniform_int_distribution<long>(0, total - 1)(rng);
    Vertex v = 0;
    while (pick >= static_cast<long>(g.degree(v)) * (g.degree(v) - 1)) {
      pick -= static_cast<long>(g.degree(v)) * (g.degree(v) - 1);
      ++v;
    }
    const auto& nb = g.neighbors(v);
    const int deg = g.degree(v);
    const int ai = static_cast<int>(pick / (deg - 1));
    int bi = static_cast<int>(pick % (deg - 1));
    if (bi >= ai) ++bi;
    const Vertex a = nb[ai], b = nb[bi];

    // rejected triples are simply redrawn, which keeps the choice uniform
    // over the accepted ones
    std::optional<SurfaceTriangulation> next;
    try {
      next = topological_vertex_split(t, v, a, b);
    } catch (const std::invalid_argument&) {
      continue;
    }
    out.log.push_back(split_record(t, v, a, b));
    out.triangulation = std::move(*next);
  }
  return out;
}

}  // namespace lqrigid
