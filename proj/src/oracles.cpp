#include "lqrigid/oracles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lqrigid::oracles {
namespace {

Placement from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const int n = static_cast<int>(rows.size());
  const int d = static_cast<int>(rows.begin()->size());
  Eigen::MatrixXd m(n, d);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (double x : r) m(i, j++) = x;
    ++i;
  }
  return Placement(std::move(m));
}

}  // namespace

Placement wheel_placement(bool degenerate) {
  return from_rows({{0, 0}, {-1, 0}, {0, 1}, {1, 0}, {degenerate ? 0.0 : 1.0, -1}});
}

Eigen::MatrixXd wheel_submatrix(double q) {
  const auto r = rigidity_matrix(Graph::wheel(5), wheel_placement(), LqSpace(2, q));
  return r.entries.leftCols(8);
}

double wheel_det(double q) { return std::pow(2.0, q - 1.0) - 2.0; }

Eigen::MatrixXd circulant_matrix(int d, double q) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Constant(d, d, std::pow(2.0, -(q - 2.0)));
  c.diagonal().setOnes();
  return c;
}

double circulant_det(int d, double q) {
  const double t = std::pow(2.0, -(q - 2.0));
  return (1.0 + (d - 1) * t) * std::pow(1.0 - t, d - 1);
}

Placement bracing_placement(const Placement& p, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("bracing_placement: lambda must be positive");
  const int n = p.vertex_count(), d = p.dimension();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 2, d + 1);
  m.topLeftCorner(n, d) = p.coords();
  m(n, d) = -lambda;
  m.row(n + 1).head(d).setOnes();
  m(n + 1, d) = lambda;
  return Placement(std::move(m));
}

Placement bracing_special_placement(int d) {
  if (d < 1) throw std::invalid_argument("bracing_special_placement: d must be positive");
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(2 * d, d, 0.5);
  for (int i = 0; i < d; ++i) {
    m(i, i) = 0.0;
    m(d + i, i) = 1.0;
  }
  return Placement(std::move(m));
}

Placement cone_placement(const Placement& p, const Eigen::VectorXd& apex) {
  const int n = p.vertex_count(), d = p.dimension();
  if (apex.size() != d + 1) throw std::invalid_argument("cone_placement: apex must lie in R^{d+1}");
  if (apex[d] == 0.0) throw std::invalid_argument("cone_placement: apex needs a nonzero last coordinate");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n + 1, d + 1);
  m.topLeftCorner(n, d) = p.coords();
  m.row(n) = apex.transpose();
  return Placement(std::move(m));
}

Placement k4_gamma_placement(double gamma) {
  return from_rows({{0, 0}, {0, 1}, {-1, 0}, {gamma, gamma}});
}

Eigen::MatrixXd k4_gamma_matrix(double gamma, double q) {
  const auto r = rigidity_matrix(Graph::complete(4), k4_gamma_placement(gamma), LqSpace(2, q));
  return r.entries.rightCols(6);
}

double k4_gamma_det(double gamma, double q) {
  const double g = std::pow(gamma, q - 1.0);
  return g * g * (2.0 * g - std::pow(1.0 + gamma, q - 1.0) + std::pow(1.0 - gamma, q - 1.0));
}

Graph k7k3_graph() {
  std::vector<Edge> es;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      if (a < 4 || b < 4) es.emplace_back(a, b);
  return Graph(7, std::move(es));
}

Placement k7k3_placement(double gamma) {
  return from_rows({{0, 0, 0},
                    {0, 1, 0},
                    {-1, 0, 0},
                    {gamma, gamma, 0},
                    {0, 0, -1},
                    {1, 1, 1},
                    {1, 0, 1}});
}

double k7k3_detR(double gamma, double q) {
  const double s = q - 1.0;
  const double gs = std::pow(gamma, s), cs = std::pow(1.0 - gamma, s);
  return ((1.0 - gs) - cs) * (cs + std::pow(2.0 * gamma, s) - (1.0 + gs));
}

double k7k3_f(double x, double q) {
  const double s = q - 1.0;
  return (std::pow(2.0, s) - 1.0) * std::pow(x, s) + std::pow(1.0 - x, s) - 1.0;
}

double select_gamma(double q) {
  constexpr double kMinMagnitude = 1e-6;
  for (int den = 2; den <= 1000; ++den) {
    for (int num = 1; num < den; ++num) {
      if (std::gcd(num, den) != 1) continue;
      const double gamma = static_cast<double>(num) / den;
      if (std::abs(k7k3_f(gamma, q)) > kMinMagnitude) return gamma;
    }
  }
  throw std::domain_error("select_gamma: f vanishes on every probed gamma (is q = 2?)");
}

bool power_inequality_holds(double x, double y, double k) {
  const double lhs = std::pow(x, k) - std::pow(y, k), rhs = std::pow(x - y, k);
  if (k > 1.0) return lhs > rhs;
  if (k < 1.0) return lhs < rhs;
  return false;
}

OracleValue evaluate(const std::string& name, int d, double q, double gamma) {
  OracleValue v{name, d, q, gamma, 0.0, 0.0};
  auto pick_gamma = [&] {
    if (!(gamma > 0.0)) v.gamma = select_gamma(q);
    if (!(v.gamma > 0.0 && v.gamma < 1.0)) throw std::invalid_argument("gamma must lie in (0,1)");
    return v.gamma;
  };
  if (name == "wheel_det") {
    v.value = wheel_det(q);
  } else if (name == "circulant_det") {
    if (d < 1) throw std::invalid_argument("circulant_det needs d >= 1");
    v.value = circulant_det(d, q);
  } else if (name == "k4_gamma_det") {
    v.value = k4_gamma_det(pick_gamma(), q);
  } else if (name == "k7k3_detR") {
    v.value = k7k3_detR(pick_gamma(), q);
  } else if (name == "k7k3_f") {
    v.value = k7k3_f(gamma > 0.0 ? gamma : 1.0, q);
    v.gamma = gamma > 0.0 ? gamma : 1.0;
  } else if (name == "select_gamma") {
    v.value = select_gamma(q);
    v.gamma = v.value;
  } else {
    throw std::invalid_argument("unknown oracle '" + name + "'");
  }
  return v;
}

}  // namespace lqrigid::oracles
