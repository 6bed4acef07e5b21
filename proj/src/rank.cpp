#include "lqrigid/rank.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lqrigid {
namespace {

constexpr int kResampleBudget = 1000;

void check_input(const Eigen::MatrixXd& m, double rel_tol) {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("numerical_rank: rel_tol must be positive");
  if (!m.allFinite()) throw std::invalid_argument("numerical_rank: non-finite matrix entry");
}

double threshold(double sigma_max, const Eigen::MatrixXd& m, double rel_tol) {
  return rel_tol * sigma_max * static_cast<double>(std::max(m.rows(), m.cols()));
}

}  // namespace

RankResult numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  check_input(m, rel_tol);
  RankResult r;
  if (m.size() == 0) return r;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& s = svd.singularValues();
  r.singular_values.assign(s.data(), s.data() + s.size());
  r.tolerance_used = threshold(s.size() ? s[0] : 0.0, m, rel_tol);
  r.rank = static_cast<int>(std::count_if(r.singular_values.begin(), r.singular_values.end(),
                                          [&](double x) { return x > r.tolerance_used; }));
  return r;
}

Placement sample_placement(const Graph& g, int d, std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);

  Placement p(g.vertex_count(), d);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Eigen::VectorXd x(d);
    for (int k = 0; k < d; ++k) x[k] = coord(rng);
    p.set_point(v, x);
  }
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    auto bad = p.first_coincident_edge(g);
    if (!bad) return p;
    Eigen::VectorXd x(d);
    for (int k = 0; k < d; ++k) x[k] = coord(rng);
    p.set_point(bad->v, x);
  }
  throw std::runtime_error("sample_placement: could not find a well-positioned placement");
}

RankResult max_rank_sample(const Graph& g, const LqSpace& space, int trials, std::uint64_t seed,
                           double rel_tol) {
  if (trials < 1) throw std::invalid_argument("max_rank_sample: trials must be >= 1");
  RankResult best;
  best.rank = -1;
  int at_max = 0;
  for (int t = 0; t < trials; ++t) {
    Placement p = sample_placement(g, space.dimension(), seed, t);
    RankResult r = numerical_rank(rigidity_matrix(g, p, space).entries, rel_tol);
    if (r.rank > best.rank) {
      best = std::move(r);
      best.witness = std::move(p);
      at_max = 1;
    } else if (r.rank == best.rank) {
      ++at_max;
    }
  }
  best.trials = trials;
  best.trials_at_max = at_max;
  return best;
}

int target_rank(const Graph& g, const LqSpace& space) {
  return space.dimension() * g.vertex_count() - space.isometry_dimension();
}

Verdict verdict_from_rank(const Graph& g, const LqSpace& space, const RankResult& r) {
  Verdict v;
  v.rank = r.rank;
  v.edges = g.edge_count();
  v.target_rank = target_rank(g, space);
  v.independent = r.rank == g.edge_count();
  v.rigid = r.rank == v.target_rank;
  v.minimally_rigid = v.independent && v.rigid;
  v.stress_dim = g.edge_count() - r.rank;
  v.stable = r.stable();
  return v;
}

Verdict verdict(const Graph& g, const LqSpace& space, int trials, std::uint64_t seed,
                double rel_tol) {
  return verdict_from_rank(g, space, max_rank_sample(g, space, trials, seed, rel_tol));
}

Eigen::MatrixXd cokernel_basis(const Eigen::MatrixXd& m, double rel_tol) {
  check_input(m, rel_tol);
  const Eigen::Index rows = m.rows();
  if (m.size() == 0) return Eigen::MatrixXd::Identity(rows, rows);

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
  const Eigen::VectorXd& s = svd.singularValues();
  const double tol = threshold(s[0], m, rel_tol);
  Eigen::Index rank = 0;
  while (rank < s.size() && s[rank] > tol) ++rank;
  return svd.matrixU().rightCols(rows - rank).transpose();
}

}  // namespace lqrigid
