#include "lqrigid/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace lqrigid {
namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  return guarded("graph", [&] {
    const int n = j.at("n").get<int>();
    std::vector<Edge> es;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("graph: edge must be a pair");
      es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(es));
  });
}

json to_json(const Placement& p) {
  json coords = json::array();
  for (int v = 0; v < p.vertex_count(); ++v) {
    json row = json::array();
    for (int k = 0; k < p.dimension(); ++k) row.push_back(p.coords()(v, k));
    coords.push_back(std::move(row));
  }
  return {{"d", p.dimension()}, {"coords", std::move(coords)}};
}

Placement placement_from_json(const json& j) {
  return guarded("placement", [&] {
    const int d = j.at("d").get<int>();
    if (d < 1) throw InputError("placement: d must be positive");
    const auto& rows = j.at("coords");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), d);
    for (std::size_t v = 0; v < rows.size(); ++v) {
      if (rows[v].size() != static_cast<std::size_t>(d)) {
        throw InputError("placement: coordinate row " + std::to_string(v) + " has wrong length");
      }
      for (int k = 0; k < d; ++k) m(static_cast<Eigen::Index>(v), k) = rows[v][k].get<double>();
    }
    return Placement(std::move(m));
  });
}

json to_json(const SurfaceTriangulation& t) {
  json faces = json::array();
  for (const Face& f : t.faces()) faces.push_back({f[0], f[1], f[2]});
  return {{"surface", std::string(to_string(t.surface()))},
          {"n", t.vertex_count()},
          {"faces", std::move(faces)}};
}

SurfaceTriangulation triangulation_from_json(const json& j) {
  return guarded("triangulation", [&] {
    const Surface s = surface_from_string(j.at("surface").get<std::string>());
    std::vector<Face> faces;
    for (const auto& f : j.at("faces")) {
      if (!f.is_array() || f.size() != 3) throw InputError("triangulation: face must be a triple");
      faces.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    return SurfaceTriangulation(j.at("n").get<int>(), std::move(faces), s);
  });
}

json to_json(const OpRecord& r) {
  json j = {{"kind", std::string(to_string(r.kind))},
            {"d", r.d},
            {"n_before", r.n_before},
            {"n_after", r.n_after}};
  if (r.pivot >= 0) j["pivot"] = r.pivot;
  if (!r.vertices.empty()) j["vertices"] = r.vertices;
  if (!r.moved.empty()) j["moved"] = r.moved;
  if (r.edge) j["edge"] = {r.edge->u, r.edge->v};
  if (r.h) j["h"] = to_json(*r.h);
  if (!r.assignment.empty()) {
    json a = json::array();
    for (const auto& [w, target] : r.assignment) a.push_back({w, target});
    j["assignment"] = std::move(a);
  }
  return j;
}

OpRecord op_record_from_json(const json& j) {
  return guarded("op record", [&] {
    OpRecord r;
    r.kind = op_kind_from_string(j.at("kind").get<std::string>());
    r.d = j.value("d", 1);
    r.n_before = j.value("n_before", 0);
    r.n_after = j.value("n_after", 0);
    r.pivot = j.value("pivot", -1);
    if (j.contains("vertices")) r.vertices = j.at("vertices").get<std::vector<Vertex>>();
    if (j.contains("moved")) r.moved = j.at("moved").get<std::vector<Vertex>>();
    if (j.contains("edge")) r.edge = Edge(j.at("edge")[0].get<int>(), j.at("edge")[1].get<int>());
    if (j.contains("h")) r.h = graph_from_json(j.at("h"));
    if (j.contains("assignment")) {
      for (const auto& p : j.at("assignment")) r.assignment[p[0].get<int>()] = p[1].get<int>();
    }
    return r;
  });
}

void write_json_lines(std::ostream& os, const std::vector<OpRecord>& log) {
  for (const OpRecord& r : log) os << to_json(r).dump() << '\n';
}

std::vector<OpRecord> read_json_lines(std::istream& is) {
  std::vector<OpRecord> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(op_record_from_json(guarded("op log", [&] { return json::parse(line); })));
  }
  return out;
}

json to_json(const AnalysisReport& r) {
  const Verdict& v = r.verdict;
  return {{"graph", to_json(r.graph)},
          {"d", r.d},
          {"q", r.q},
          {"rank", v.rank},
          {"target_rank", v.target_rank},
          {"independent", v.independent},
          {"rigid", v.rigid},
          {"minimally_rigid", v.minimally_rigid},
          {"stress_dim", v.stress_dim},
          {"sparse", r.sparse},
          {"trials", r.trials},
          {"seed", r.seed},
          {"tol", r.tolerance},
          {"stable", v.stable}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return guarded(path.c_str(), [&] { return json::parse(in); });
}

}  // namespace lqrigid
