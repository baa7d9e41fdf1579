#include "graph_pum/kernels.hpp"

#include <cmath>
#include <string>

namespace gpum {

namespace {

Eigen::MatrixXd rows_of(const Eigen::MatrixXd& m, std::span<const Vertex> nodes) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(nodes.size()), m.cols());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = m.row(nodes[i]);
  }
  return out;
}

void check_nodes(std::span<const Vertex> nodes, Vertex n) {
  for (Vertex v : nodes) {
    if (v < 0 || v >= n) {
      fail(ErrorCode::NodeOutOfRange, "kernel node " + std::to_string(v) + " out of range");
    }
  }
}

void check_coefficients(std::span<const Vertex> nodes, const Eigen::VectorXd& c) {
  if (c.size() != static_cast<Eigen::Index>(nodes.size())) {
    fail(ErrorCode::DimensionMismatch, "one coefficient per node expected");
  }
}

}  // namespace

bool is_positive_definite_gbf(const Eigen::VectorXd& multipliers) {
  return multipliers.size() > 0 && multipliers.minCoeff() > 0.0;
}

GbfKernel diffusion_kernel(std::shared_ptr<const Spectrum> spectrum, double t) {
  if (!std::isfinite(t)) fail(ErrorCode::InvalidArgument, "diffusion time must be finite");
  Eigen::VectorXd f = (-t * spectrum->eigenvalues.array()).exp();
  GbfKernel k{std::move(spectrum), std::move(f), KernelFamily::Diffusion};
  k.t = t;
  return k;
}

GbfKernel spline_kernel(std::shared_ptr<const Spectrum> spectrum, double eps, double s) {
  if (!(s > 0.0)) fail(ErrorCode::InvalidArgument, "spline exponent s must be positive");
  if (spectrum->size() == 0) fail(ErrorCode::EmptyNodeSet, "empty spectrum");
  if (!(eps > -spectrum->eigenvalues[0])) {
    fail(ErrorCode::EpsilonTooSmall, "eps must exceed -lambda_1");
  }
  Eigen::VectorXd f = (eps + spectrum->eigenvalues.array()).pow(-s);
  GbfKernel k{std::move(spectrum), std::move(f), KernelFamily::VariationalSpline};
  k.eps = eps;
  k.s = s;
  return k;
}

GbfKernel kernel_from_multipliers(std::shared_ptr<const Spectrum> spectrum,
                                  Eigen::VectorXd multipliers) {
  if (multipliers.size() != spectrum->size()) {
    fail(ErrorCode::DimensionMismatch, "one multiplier per eigenvalue expected");
  }
  if (!is_positive_definite_gbf(multipliers)) {
    fail(ErrorCode::InvalidArgument, "multipliers must be positive");
  }
  return {std::move(spectrum), std::move(multipliers), KernelFamily::Custom};
}

KernelMatrix kernel_matrix(const GbfKernel& kernel, std::span<const Vertex> nodes) {
  check_nodes(nodes, kernel.size());
  const Eigen::MatrixXd u = rows_of(kernel.spectrum->eigenvectors, nodes);
  Eigen::MatrixXd k = u * kernel.multipliers.asDiagonal() * u.transpose();
  return {VertexList(nodes.begin(), nodes.end()), std::move(k)};
}

Signal kernel_combination(const GbfKernel& kernel, std::span<const Vertex> nodes,
                          const Eigen::VectorXd& coefficients) {
  check_nodes(nodes, kernel.size());
  check_coefficients(nodes, coefficients);
  const Eigen::MatrixXd u = rows_of(kernel.spectrum->eigenvectors, nodes);
  const Eigen::VectorXd weighted =
      kernel.multipliers.cwiseProduct(u.transpose() * coefficients);
  return kernel.spectrum->eigenvectors * weighted;
}

double rkhs_inner(const GbfKernel& kernel, const Signal& x, const Signal& y) {
  const Eigen::VectorXd xh = fourier(*kernel.spectrum, x);
  const Eigen::VectorXd yh = fourier(*kernel.spectrum, y);
  return (xh.array() * yh.array() / kernel.multipliers.array()).sum();
}

double rkhs_norm(const GbfKernel& kernel, const Signal& x) {
  const Eigen::VectorXd xh = fourier(*kernel.spectrum, x);
  return std::sqrt((xh.array().square() / kernel.multipliers.array()).sum());
}

Signal convolve(const Spectrum& spectrum, const Signal& y, const Signal& x) {
  const Eigen::VectorXd yh = fourier(spectrum, y);
  return inverse_fourier(spectrum, yh.cwiseProduct(fourier(spectrum, x)));
}

SplineFactorization::SplineFactorization(const Graph& g, double eps, int power)
    : size_(g.size()), eps_(eps), power_(power) {
  if (power < 1) fail(ErrorCode::InvalidArgument, "factorized spline needs integer s >= 1");
  if (g.size() > kMaxDenseSize) fail(ErrorCode::TooLarge, "graph too large for dense factor");
  Eigen::MatrixXd m = g.laplacian_dense();
  m.diagonal().array() += eps;
  factor_.compute(m);
  if (factor_.info() != Eigen::Success) {
    fail(ErrorCode::EpsilonTooSmall, "eps I + L is not positive definite (eps <= -lambda_1)");
  }
}

Eigen::MatrixXd SplineFactorization::solve_power(Eigen::MatrixXd rhs, int power) const {
  for (int k = 0; k < power; ++k) rhs = factor_.solve(rhs);
  return rhs;
}

Eigen::MatrixXd SplineFactorization::columns(std::span<const Vertex> nodes) const {
  check_nodes(nodes, size_);
  Eigen::MatrixXd unit = Eigen::MatrixXd::Zero(size_, static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) unit(nodes[i], static_cast<Eigen::Index>(i)) = 1.0;
  return solve_power(std::move(unit), power_);
}

Eigen::MatrixXd SplineFactorization::matrix(std::span<const Vertex> nodes) const {
  check_nodes(nodes, size_);
  const auto count = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd unit = Eigen::MatrixXd::Zero(size_, count);
  for (Eigen::Index i = 0; i < count; ++i) unit(nodes[static_cast<std::size_t>(i)], i) = 1.0;
  if (power_ % 2 == 0) {
    // K_W = Y^T Y with Y = (eps I + L)^{-s/2} E_W
    const Eigen::MatrixXd y = solve_power(std::move(unit), power_ / 2);
    Eigen::MatrixXd k(count, count);
    k.setZero();
    k.selfadjointView<Eigen::Lower>().rankUpdate(y.transpose());
    return k.selfadjointView<Eigen::Lower>();
  }
  const Eigen::MatrixXd z = solve_power(std::move(unit), power_);
  Eigen::MatrixXd k = rows_of(z, nodes);
  return 0.5 * (k + k.transpose());
}

Signal SplineFactorization::combine(std::span<const Vertex> nodes,
                                    const Eigen::VectorXd& coefficients) const {
  check_nodes(nodes, size_);
  check_coefficients(nodes, coefficients);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size_);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    rhs[nodes[i]] += coefficients[static_cast<Eigen::Index>(i)];
  }
  return solve_power(std::move(rhs), power_);
}

KernelOperator make_kernel(const Graph& g, const KernelSpec& spec) {
  const bool integer_spline = spec.family == KernelFamily::VariationalSpline &&
                              spec.s >= 1.0 && spec.s <= 16.0 &&
                              std::floor(spec.s) == spec.s;
  KernelRoute route = spec.route;
  if (route == KernelRoute::Auto) {
    route = integer_spline ? KernelRoute::Factorized : KernelRoute::Spectral;
  }
  if (route == KernelRoute::Factorized) {
    if (!integer_spline) {
      fail(ErrorCode::InvalidArgument,
           "factorized route requires a variational spline with integer s");
    }
    return SplineFactorization(g, spec.eps, static_cast<int>(spec.s));
  }
  auto spectrum = std::make_shared<const Spectrum>(eigendecompose(g));
  switch (spec.family) {
    case KernelFamily::Diffusion: return diffusion_kernel(std::move(spectrum), spec.t);
    case KernelFamily::VariationalSpline:
      return spline_kernel(std::move(spectrum), spec.eps, spec.s);
    case KernelFamily::Custom: break;
  }
  fail(ErrorCode::InvalidArgument, "custom multipliers cannot be built from a KernelSpec");
}

Eigen::MatrixXd gram_matrix(const KernelOperator& kernel, std::span<const Vertex> nodes) {
  return std::visit(
      [&](const auto& k) -> Eigen::MatrixXd {
        if constexpr (std::is_same_v<std::decay_t<decltype(k)>, GbfKernel>) {
          return kernel_matrix(k, nodes).entries;
        } else {
          return k.matrix(nodes);
        }
      },
      kernel);
}

Signal kernel_combination(const KernelOperator& kernel, std::span<const Vertex> nodes,
                          const Eigen::VectorXd& coefficients) {
  return std::visit(
      [&](const auto& k) -> Signal {
        if constexpr (std::is_same_v<std::decay_t<decltype(k)>, GbfKernel>) {
          return kernel_combination(k, nodes, coefficients);
        } else {
          return k.combine(nodes, coefficients);
        }
      },
      kernel);
}

}  // namespace gpum
