#include "graph_pum/analysis.hpp"

#include <cmath>
#include <string>

namespace gpum {

double rrmse(const Signal& x, const Signal& approx) {
  if (x.size() != approx.size()) fail(ErrorCode::DimensionMismatch, "signal length mismatch");
  const double reference = x.norm();
  if (reference == 0.0) fail(ErrorCode::ZeroReference, "reference signal is zero");
  return (x - approx).norm() / reference;
}

double verify_product_rule_gradient(const Graph& g, const Signal& x, const Signal& y) {
  const EdgeFunction gxy = gradient(g, x.cwiseProduct(y));
  const EdgeFunction gx = gradient(g, x);
  const EdgeFunction gy = gradient(g, y);
  double worst = 0.0;
  for (Vertex i = 0; i < g.size(); ++i) {
    auto nb = g.neighbors(i);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const auto e = static_cast<Eigen::Index>(g.edge_begin(i) + k);
      const double rule = gx.values[e] * y[i] + x[nb[k]] * gy.values[e];
      worst = std::max(worst, std::abs(gxy.values[e] - rule));
    }
  }
  return worst;
}

double verify_product_rule_laplacian(const Graph& g, const Signal& x, const Signal& y) {
  const Signal lxy = laplacian_apply(g, x.cwiseProduct(y));
  const Signal lx = laplacian_apply(g, x);
  const Signal lsy = standard_laplacian_apply(g, y);
  double worst = 0.0;
  for (Vertex i = 0; i < g.size(); ++i) {
    auto nb = g.neighbors(i);
    auto a = g.adjacency(i);
    double cross = 0.0;
    for (std::size_t k = 0; k < nb.size(); ++k) {
      // L_{ii'} = -A_{ii'}
      cross += -a[k] * (x[i] - x[nb[k]]) * (y[i] - y[nb[k]]);
    }
    const double rule = lx[i] * y[i] + x[i] * lsy[i] + cross;
    worst = std::max(worst, std::abs(lxy[i] - rule));
  }
  return worst;
}

bool Inequality::holds() const noexcept {
  return lhs <= rhs + 1e-12 * std::max(std::abs(rhs), 1.0);
}

NormEstimateReport verify_norm_estimates(const Graph& g, const Signal& x, const Signal& y,
                                         double p) {
  NormEstimateReport r;
  r.p = p;
  r.q = dual_exponent(p);
  const EdgeFunction gx = gradient(g, x);
  const EdgeFunction gy = gradient(g, y);
  const double y_sup = node_norm(y, kInfinity);
  const double x_p = node_norm(x, p);
  const double gx_p = edge_norm(gx, p);
  const Signal xy = x.cwiseProduct(y);

  r.gradient.lhs = edge_norm(gradient(g, xy), p);
  r.gradient.rhs = gx_p * y_sup + x_p * hybrid_norm(g, gy, p);

  r.laplacian.lhs = node_norm(laplacian_apply(g, xy), p);
  r.laplacian.rhs = node_norm(laplacian_apply(g, x), p) * y_sup +
                    x_p * node_norm(standard_laplacian_apply(g, y), kInfinity) +
                    gx_p * hybrid_norm(g, gy, r.q);
  return r;
}

std::vector<LocalErrorTriple> measure_local_errors(const Signal& x,
                                                   const PumApproximant& approximant,
                                                   double p) {
  std::vector<LocalErrorTriple> out;
  for (std::size_t j = 0; j < approximant.locals.size(); ++j) {
    const auto& local = approximant.locals[j];
    const auto& to_parent = local.subgraph.to_parent;
    Signal error(static_cast<Eigen::Index>(to_parent.size()));
    for (std::size_t k = 0; k < to_parent.size(); ++k) {
      const auto i = static_cast<Eigen::Index>(k);
      error[i] = x[to_parent[k]] - local.values[i];
    }
    const Graph& sub = local.subgraph.graph;
    out.push_back({static_cast<Eigen::Index>(j), p, node_norm(error, p),
                   edge_norm(gradient(sub, error), p),
                   node_norm(laplacian_apply(sub, error), p)});
  }
  return out;
}

bool GlobalBoundReport::holds() const noexcept {
  if (!value.holds()) return false;
  if (!boundary_condition) return true;
  return gradient.holds() && laplacian.holds();
}

GlobalBoundReport verify_global_bound(const Graph& g, const Signal& x,
                                      const PumApproximant& approximant, double p) {
  if (x.size() != g.size() || approximant.values.size() != g.size()) {
    fail(ErrorCode::DimensionMismatch, "signal length mismatch");
  }
  GlobalBoundReport r;
  r.p = p;
  r.q = dual_exponent(p);
  r.local_errors = measure_local_errors(x, approximant, p);
  r.boundary_condition =
      check_boundary_condition(g, approximant.cover, approximant.partition).satisfied();

  const Signal error = x - approximant.values;
  r.value.lhs = node_norm(error, p);
  r.gradient.lhs = edge_norm(gradient(g, error), p);
  r.laplacian.lhs = node_norm(laplacian_apply(g, error), p);

  for (Eigen::Index j = 0; j < approximant.partition.size(); ++j) {
    const Signal phi = approximant.partition.dense(j, g.size());
    const EdgeFunction grad_phi = gradient(g, phi);
    const double gp = hybrid_norm(g, grad_phi, p);
    const double gq = hybrid_norm(g, grad_phi, r.q);
    const double lp = node_norm(standard_laplacian_apply(g, phi), kInfinity);
    r.partition_gradient_p.push_back(gp);
    r.partition_gradient_q.push_back(gq);
    r.partition_laplacian.push_back(lp);

    const auto& e = r.local_errors[static_cast<std::size_t>(j)];
    r.value.rhs += e.value;
    r.gradient.rhs += e.gradient + gp * e.value;
    r.laplacian.rhs += e.laplacian + gq * e.gradient + lp * e.value;
  }
  return r;
}

void require_global_bound(const GlobalBoundReport& report) {
  if (report.holds()) return;
  fail(ErrorCode::BoundViolated,
       "global error bound violated for p = " + std::to_string(report.p));
}

}  // namespace gpum
