#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lqrigid/graph.hpp"
#include "lqrigid/lq_geometry.hpp"

namespace lqrigid::oracles {

/// A named closed-form value and the parameters it was evaluated at.
struct OracleValue {
  std::string name;
  int d = 0;
  double q = 0.0;
  double gamma = 0.0;
  double lambda = 0.0;
  double value = 0.0;
};

// Wheel on five vertices, hub 0, rim 1..4.

/// Placement (0,0), (-1,0), (0,1), (1,0), (1,-1); with `degenerate` the last
/// rim vertex moves to (0,-1), which is non-regular for every q != 2.
Placement wheel_placement(bool degenerate = false);
/// The first eight columns of the altered matrix at wheel_placement().
Eigen::MatrixXd wheel_submatrix(double q);
/// det of wheel_submatrix: 2^(q-1) - 2.
double wheel_det(double q);

// Bracing witness.

/// d x d matrix with unit diagonal and 2^-(q-2) elsewhere.
Eigen::MatrixXd circulant_matrix(int d, double q);
/// (1 + (d-1)/2^(q-2)) (1 - 1/2^(q-2))^(d-1).
double circulant_det(int d, double q);

/// Lifts p into R^{d+1} on x_{d+1} = 0 and appends v0 = (0,..,0,-lambda),
/// v1 = (1,..,1,lambda) as vertices n and n+1 (the brace() numbering).
/// Throws std::invalid_argument for lambda <= 0.
Placement bracing_placement(const Placement& p, double lambda = 1.0);

/// Placement of 2d vertices in R^d: vertex i < d gets 0 at coordinate i and
/// 1/2 elsewhere; vertex d+i gets 1 at coordinate i and 1/2 elsewhere.
Placement bracing_special_placement(int d);

/// Lifts p into R^{d+1} and puts the cone apex (vertex n) at `apex`, whose
/// last coordinate must be nonzero.
Placement cone_placement(const Placement& p, const Eigen::VectorXd& apex);

// K4 in the plane and K7 - K3 in 3-space.

/// (0,0), (0,1), (-1,0), (gamma,gamma).
Placement k4_gamma_placement(double gamma);
/// Altered matrix of K4 at k4_gamma_placement without vertex 0's columns.
Eigen::MatrixXd k4_gamma_matrix(double gamma, double q);
/// (gamma^(q-1))^2 (2 gamma^(q-1) - (1+gamma)^(q-1) + (1-gamma)^(q-1)).
double k4_gamma_det(double gamma, double q);

/// K7 - K3 on v0..v3 = 0..3 and a, b, c = 4, 5, 6 (missing triangle abc).
Graph k7k3_graph();
Placement k7k3_placement(double gamma);
/// ((1-gamma^(q-1)) - (1-gamma)^(q-1)) ((1-gamma)^(q-1) + (2gamma)^(q-1) - (1+gamma^(q-1))).
double k7k3_detR(double gamma, double q);
/// (2^(q-1)-1) x^(q-1) + (1-x)^(q-1) - 1.
double k7k3_f(double x, double q);
/// First gamma in 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ... with |f(gamma)| > 1e-6.
double select_gamma(double q);

/// x > y > 0: x^k - y^k > (x-y)^k for k > 1, reversed for k < 1.
bool power_inequality_holds(double x, double y, double k);

/// Evaluates a named oracle: wheel_det, circulant_det, k4_gamma_det,
/// k7k3_detR, k7k3_f, select_gamma. gamma <= 0 selects via select_gamma.
OracleValue evaluate(const std::string& name, int d, double q, double gamma);

}  // namespace lqrigid::oracles
