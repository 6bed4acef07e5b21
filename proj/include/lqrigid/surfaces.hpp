#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqrigid/graph.hpp"
#include "lqrigid/graph_ops.hpp"

namespace lqrigid {

enum class Surface { sphere, projective_plane };
enum class BaseKind { K4, K6, K7_minus_K3 };

std::string_view to_string(Surface s);
std::string_view to_string(BaseKind b);
Surface surface_from_string(std::string_view s);
BaseKind base_kind_from_string(std::string_view s);

using Face = std::array<Vertex, 3>;

/// Face-list triangulation of a closed surface. The graph is derived from
/// the faces: an edge for every side of every face, in first-seen order.
class SurfaceTriangulation {
 public:
  SurfaceTriangulation(int n, std::vector<Face> faces, Surface surface);

  const Graph& graph() const { return graph_; }
  const std::vector<Face>& faces() const { return faces_; }
  Surface surface() const { return surface_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int euler_characteristic() const;

  /// Neighbours of v in cyclic order around v, or nullopt when the faces at
  /// v do not close up into one cycle. The orientation starts at the
  /// smallest neighbour and continues to the smaller of its two cycle
  /// neighbours.
  std::optional<std::vector<Vertex>> link_cycle(Vertex v) const;

 private:
  std::vector<Face> faces_;
  Surface surface_;
  Graph graph_;
};

struct Validation {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Checks every structural invariant; the diagnostic names the first
/// violated one.
Validation validate(const SurfaceTriangulation& t);

SurfaceTriangulation base_complex(BaseKind kind);

/// Splits the link cycle of v at a and b. The new vertex w0 = n takes the
/// arc running from a to b in link_cycle(v) order, v keeps the rest; both
/// stay adjacent to a and b, and faces (v,w0,a), (v,w0,b) are added.
SurfaceTriangulation topological_vertex_split(const SurfaceTriangulation& t, Vertex v, Vertex a,
                                              Vertex b);

/// The split above as a 3-dimensional vertex split record (shared {a,b}).
OpRecord split_record(const SurfaceTriangulation& t, Vertex v, Vertex a, Vertex b);

struct GeneratedTriangulation {
  SurfaceTriangulation triangulation;
  std::vector<OpRecord> log;
  BaseKind base;
};

/// Uniformly random topological vertex splits from the base until n
/// vertices. Default base: K4 for the sphere, K6 for the projective plane.
GeneratedTriangulation generate_triangulation(Surface surface, int n, std::uint64_t seed,
                                              std::optional<BaseKind> base = std::nullopt);

}  // namespace lqrigid
