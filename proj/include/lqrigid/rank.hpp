#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lqrigid/graph.hpp"
#include "lqrigid/lq_geometry.hpp"

namespace lqrigid {

inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr int kDefaultTrials = 8;

struct RankResult {
  int rank = 0;
  std::vector<double> singular_values;  // descending
  double tolerance_used = 0.0;
  int trials = 1;
  /// Number of sampled placements that reached `rank`.
  int trials_at_max = 1;
  std::optional<Placement> witness;

  /// At least two samples agree on the maximum rank.
  bool stable() const { return trials_at_max >= 2; }
};

struct Verdict {
  int rank = 0;
  int edges = 0;
  int target_rank = 0;
  bool independent = false;
  bool rigid = false;
  bool minimally_rigid = false;
  int stress_dim = 0;
  bool stable = false;
};

/// Singular values above rel_tol * sigma_max * max(rows, cols).
/// Throws std::invalid_argument on non-finite entries or rel_tol <= 0.
RankResult numerical_rank(const Eigen::MatrixXd& m, double rel_tol = kDefaultRelTol);

/// Uniform [-1,1]^d coordinates for every vertex, resampled until no edge
/// has coincident endpoints. Trial t of a run seeded with `seed` always draws
/// the same placement.
Placement sample_placement(const Graph& g, int d, std::uint64_t seed, int trial);

/// Maximum altered-matrix rank over `trials` sampled placements.
RankResult max_rank_sample(const Graph& g, const LqSpace& space, int trials, std::uint64_t seed,
                           double rel_tol = kDefaultRelTol);

/// d|V| - dim T(p).
int target_rank(const Graph& g, const LqSpace& space);

Verdict verdict_from_rank(const Graph& g, const LqSpace& space, const RankResult& r);

Verdict verdict(const Graph& g, const LqSpace& space, int trials = kDefaultTrials,
                std::uint64_t seed = 0, double rel_tol = kDefaultRelTol);

/// Orthonormal basis of the left null space, one self-stress per row
/// (|E| - rank rows, |E| columns).
Eigen::MatrixXd cokernel_basis(const Eigen::MatrixXd& m, double rel_tol = kDefaultRelTol);
inline Eigen::MatrixXd cokernel_basis(const RigidityMatrix& m, double rel_tol = kDefaultRelTol) {
  return cokernel_basis(m.entries, rel_tol);
}

}  // namespace lqrigid
