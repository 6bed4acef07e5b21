#pragma once

#include <cmath>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "lqrigid/graph.hpp"

namespace lqrigid {

/// Coordinates of every vertex in R^d, one row per vertex.
class Placement {
 public:
  Placement() = default;
  Placement(int n, int d);
  /// Throws std::invalid_argument on non-finite entries.
  explicit Placement(Eigen::MatrixXd coords);

  int dimension() const { return static_cast<int>(coords_.cols()); }
  int vertex_count() const { return static_cast<int>(coords_.rows()); }

  Eigen::VectorXd point(Vertex v) const { return coords_.row(v).transpose(); }
  void set_point(Vertex v, const Eigen::VectorXd& x);
  const Eigen::MatrixXd& coords() const { return coords_; }

  /// No edge has coincident endpoints (the only obstruction in l_q, 1<q<inf).
  bool well_positioned(const Graph& g) const;
  /// First edge with coincident endpoints, if any.
  std::optional<Edge> first_coincident_edge(const Graph& g) const;

  friend bool operator==(const Placement& a, const Placement& b) { return a.coords_ == b.coords_; }

 private:
  Eigen::MatrixXd coords_;
};

/// R^d with the l_q norm, 1 < q < inf.
class LqSpace {
 public:
  LqSpace(int d, double q);

  int dimension() const { return d_; }
  double exponent() const { return q_; }
  bool is_euclidean() const { return q_ == 2.0; }
  /// Distance of q from the Euclidean exponent.
  double euclidean_gap() const { return std::abs(q_ - 2.0); }
  /// dim T(p): d for q != 2, d(d+1)/2 for q = 2.
  int isometry_dimension() const { return is_euclidean() ? d_ * (d_ + 1) / 2 : d_; }

  double norm(const Eigen::VectorXd& x) const;

 private:
  int d_;
  double q_;
};

enum class MatrixForm { standard, altered };

struct RigidityMatrix {
  Eigen::MatrixXd entries;
  MatrixForm form = MatrixForm::altered;
  int dimension = 0;

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
};

/// Raised when an edge has coincident endpoints.
class IllPositionedError : public std::invalid_argument {
 public:
  explicit IllPositionedError(Edge e);
  Edge edge() const { return edge_; }

 private:
  Edge edge_;
};

/// Componentwise sgn(x_k)|x_k|^s.
Eigen::VectorXd signed_pow(const Eigen::VectorXd& x, double s);

/// Coefficients of the support functional phi_x in the standard basis:
/// x^(q-1) / ||x||_q^(q-2). Satisfies phi_x(x) = ||x||_q^2.
Eigen::VectorXd support_row(const Eigen::VectorXd& x, double q);

/// |E| x d|V| matrix; the row of edge vw (v < w) carries the support row of
/// p_v - p_w in v's block and its negation in w's block. The altered form
/// drops the ||p_v - p_w||^(q-2) scaling.
RigidityMatrix rigidity_matrix(const Graph& g, const Placement& p, const LqSpace& space,
                               MatrixForm form = MatrixForm::altered);

void write_csv(std::ostream& os, const Eigen::MatrixXd& m);

}  // namespace lqrigid
