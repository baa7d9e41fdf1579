#pragma once

#include <vector>

#include "graph_pum/approximation.hpp"
#include "graph_pum/graph.hpp"

namespace gpum {

/// Relative error ||x - approx||_2 / ||x||_2.
double rrmse(const Signal& x, const Signal& approx);

/// max over directed edges of the gradient product-rule defect.
double verify_product_rule_gradient(const Graph& g, const Signal& x, const Signal& y);
/// max over vertices of the Laplacian product-rule defect.
double verify_product_rule_laplacian(const Graph& g, const Signal& x, const Signal& y);

struct Inequality {
  double lhs = 0.0;
  double rhs = 0.0;

  double slack() const noexcept { return rhs - lhs; }
  /// lhs <= rhs up to a relative rounding allowance of 1e-12.
  bool holds() const noexcept;
};

struct NormEstimateReport {
  double p = 2.0;
  double q = 2.0;
  Inequality gradient;   ///< ||grad(xy)||_p bound
  Inequality laplacian;  ///< ||L(xy)||_p three-term bound
};

NormEstimateReport verify_norm_estimates(const Graph& g, const Signal& x, const Signal& y,
                                         double p);

/// Measured local errors of x_*^(j) on G_j.
struct LocalErrorTriple {
  Eigen::Index subdomain = 0;
  double p = 2.0;
  double value = 0.0;     ///< ||x - x_*^(j)||_{p;G_j}
  double gradient = 0.0;  ///< ||grad_{L^(j)}(x - x_*^(j))||_{p;E_j}
  double laplacian = 0.0; ///< ||L^(j)(x - x_*^(j))||_{p;G_j}
};

std::vector<LocalErrorTriple> measure_local_errors(const Signal& x,
                                                   const PumApproximant& approximant,
                                                   double p);

struct GlobalBoundReport {
  double p = 2.0;
  double q = 2.0;
  Inequality value;      ///< (i)'
  Inequality gradient;   ///< (ii)'
  Inequality laplacian;  ///< (iii)'
  std::vector<LocalErrorTriple> local_errors;
  std::vector<double> partition_gradient_p;  ///< ||grad phi^(j)||_{inf,p;E}
  std::vector<double> partition_gradient_q;  ///< ||grad phi^(j)||_{inf,q;E}
  std::vector<double> partition_laplacian;   ///< ||L_S phi^(j)||_{inf;G}
  bool boundary_condition = false;

  /// (i)' always; (ii)' and (iii)' only under the boundary condition.
  bool holds() const noexcept;
};

/// Evaluates the local-to-global error bounds with the measured local errors
/// as right-hand side constants.
GlobalBoundReport verify_global_bound(const Graph& g, const Signal& x,
                                      const PumApproximant& approximant, double p);

/// Throws ErrorCode::BoundViolated when report.holds() is false.
void require_global_bound(const GlobalBoundReport& report);

}  // namespace gpum
