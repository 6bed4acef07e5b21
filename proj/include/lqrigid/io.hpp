#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "lqrigid/graph.hpp"
#include "lqrigid/graph_ops.hpp"
#include "lqrigid/lq_geometry.hpp"
#include "lqrigid/rank.hpp"
#include "lqrigid/surfaces.hpp"

namespace lqrigid {

using json = nlohmann::json;

/// Malformed or inconsistent input document.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"n": int, "edges": [[u, v], ...]}, 0-based.
json to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// {"d": int, "coords": [[x1..xd], ...]}.
json to_json(const Placement& p);
Placement placement_from_json(const json& j);

/// {"surface": "sphere"|"projective", "n": int, "faces": [[a, b, c], ...]}.
json to_json(const SurfaceTriangulation& t);
SurfaceTriangulation triangulation_from_json(const json& j);

json to_json(const OpRecord& r);
OpRecord op_record_from_json(const json& j);
/// One compact JSON document per line.
void write_json_lines(std::ostream& os, const std::vector<OpRecord>& log);
std::vector<OpRecord> read_json_lines(std::istream& is);

/// Verdict record emitted by `analyze`.
struct AnalysisReport {
  Graph graph;
  int d = 0;
  double q = 0.0;
  Verdict verdict;
  bool sparse = false;
  int trials = 0;
  std::uint64_t seed = 0;
  double tolerance = kDefaultRelTol;
};

json to_json(const AnalysisReport& r);

/// Parses a whole file; wraps parse and schema failures in InputError.
json read_json_file(const std::string& path);

}  // namespace lqrigid
