#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lqrigid/graph.hpp"
#include "lqrigid/graph_ops.hpp"
#include "lqrigid/io.hpp"
#include "lqrigid/lq_geometry.hpp"
#include "lqrigid/rank.hpp"

namespace lqrigid {

enum class ScanSource { henneberg, sphere, projective, degree_bounded };

std::string_view to_string(ScanSource s);
ScanSource scan_source_from_string(std::string_view s);

/// Exponents closer than this to 2 are refused unless explicitly allowed.
inline constexpr double kMinEuclideanGap = 0.05;

struct ScanConfig {
  int d = 3;
  std::vector<double> q_list{1.5, 3.0};
  int max_n = 10;
  int count = 10;
  std::uint64_t seed = 0;
  int trials = kDefaultTrials;
  double rel_tol = kDefaultRelTol;
  std::set<ScanSource> sources{ScanSource::henneberg};
  bool allow_near_euclidean = false;
  /// Worker threads; 0 picks the hardware concurrency.
  int threads = 0;

  /// Throws InputError when an invariant is violated.
  void validate() const;
};

/// One graph produced by a scan source, replayable from its seed.
struct ScanGraph {
  ScanSource source = ScanSource::henneberg;
  Graph graph;
  std::uint64_t seed = 0;
  std::string base;             // triangulation base, if any
  std::vector<OpRecord> log;    // generation log, if any
};

enum class CellOutcome { predicted, candidate, marginal };

/// Result for one (graph, q) pair.
struct ScanCell {
  std::size_t graph_index = 0;
  double q = 0.0;
  bool sparse = false;
  Verdict verdict;
  std::optional<Placement> witness;
  CellOutcome outcome = CellOutcome::predicted;
};

struct ScanSummary {
  int total = 0;
  int predicted = 0;
  int candidates = 0;
  int marginal = 0;
  std::vector<ScanGraph> graphs;
  std::vector<ScanCell> cells;
};

/// Generates the configured graphs in a fixed order (source, n, index).
std::vector<ScanGraph> scan_graphs(const ScanConfig& config);

/// Verdict for every (graph, q) cell. A cell is marginal when fewer than two
/// samples agree on the maximum rank, a candidate when the stable verdict
/// disagrees with (d,d)-sparsity, and predicted otherwise.
ScanSummary run_scan(const ScanConfig& config);

json to_json(const ScanSummary& s, const ScanConfig& config);

}  // namespace lqrigid
