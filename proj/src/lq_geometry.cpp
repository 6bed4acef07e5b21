#include "lqrigid/lq_geometry.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

namespace lqrigid {

Placement::Placement(int n, int d) : coords_(Eigen::MatrixXd::Zero(n, d)) {}

Placement::Placement(Eigen::MatrixXd coords) : coords_(std::move(coords)) {
  if (!coords_.allFinite()) throw std::invalid_argument("placement: non-finite coordinate");
}

void Placement::set_point(Vertex v, const Eigen::VectorXd& x) {
  if (x.size() != dimension()) throw std::invalid_argument("placement: dimension mismatch");
  if (!x.allFinite()) throw std::invalid_argument("placement: non-finite coordinate");
  coords_.row(v) = x.transpose();
}

std::optional<Edge> Placement::first_coincident_edge(const Graph& g) const {
  for (const Edge& e : g.edges()) {
    if (coords_.row(e.u) == coords_.row(e.v)) return e;
  }
  return std::nullopt;
}

bool Placement::well_positioned(const Graph& g) const {
  return vertex_count() == g.vertex_count() && !first_coincident_edge(g);
}

LqSpace::LqSpace(int d, double q) : d_(d), q_(q) {
  if (d < 1) throw std::invalid_argument("lq space: dimension must be >= 1");
  if (!(q > 1.0) || !std::isfinite(q)) throw std::invalid_argument("lq space: need 1 < q < inf");
}

double LqSpace::norm(const Eigen::VectorXd& x) const {
  return std::pow(x.array().abs().pow(q_).sum(), 1.0 / q_);
}

IllPositionedError::IllPositionedError(Edge e)
    : std::invalid_argument("placement is not well-positioned: edge (" + std::to_string(e.u) +
                            "," + std::to_string(e.v) + ") has coincident endpoints"),
      edge_(e) {}

Eigen::VectorXd signed_pow(const Eigen::VectorXd& x, double s) {
  Eigen::VectorXd out(x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double a = std::abs(x[k]);
    out[k] = a == 0.0 ? 0.0 : std::copysign(std::pow(a, s), x[k]);
  }
  return out;
}

Eigen::VectorXd support_row(const Eigen::VectorXd& x, double q) {
  const double nq = std::pow(x.array().abs().pow(q).sum(), 1.0 / q);
  if (nq == 0.0) throw std::invalid_argument("support_row: zero vector has no support functional");
  return signed_pow(x, q - 1.0) / std::pow(nq, q - 2.0);
}

RigidityMatrix rigidity_matrix(const Graph& g, const Placement& p, const LqSpace& space,
                               MatrixForm form) {
  const int d = space.dimension();
  if (p.dimension() != d) throw std::invalid_argument("rigidity_matrix: placement dimension mismatch");
  if (p.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("rigidity_matrix: placement does not cover the graph");
  }
  if (auto bad = p.first_coincident_edge(g)) throw IllPositionedError(*bad);

  RigidityMatrix r;
  r.form = form;
  r.dimension = d;
  r.entries = Eigen::MatrixXd::Zero(g.edge_count(), static_cast<Eigen::Index>(d) * g.vertex_count());
  const double q = space.exponent();
  int row = 0;
  for (const Edge& e : g.edges()) {
    const Eigen::VectorXd diff = p.point(e.u) - p.point(e.v);
    const Eigen::VectorXd phi =
        form == MatrixForm::altered ? signed_pow(diff, q - 1.0) : support_row(diff, q);
    r.entries.block(row, static_cast<Eigen::Index>(d) * e.u, 1, d) = phi.transpose();
    r.entries.block(row, static_cast<Eigen::Index>(d) * e.v, 1, d) = -phi.transpose();
    ++row;
  }
  return r;
}

void write_csv(std::ostream& os, const Eigen::MatrixXd& m) {
  os << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << '\n';
  }
}

}  // namespace lqrigid
