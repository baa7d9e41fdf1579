#pragma once

#include <memory>
#include <span>
#include <variant>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "graph_pum/graph.hpp"
#include "graph_pum/spectral.hpp"

namespace gpum {

enum class KernelFamily { Diffusion, VariationalSpline, Custom };

/// Positive definite graph basis function given by its Fourier multipliers
/// on a fixed spectrum: K_f = U diag(f_hat) U^T.
struct GbfKernel {
  std::shared_ptr<const Spectrum> spectrum;
  Eigen::VectorXd multipliers;
  KernelFamily family = KernelFamily::Custom;
  double t = 0.0;
  double eps = 0.0;
  double s = 0.0;

  Vertex size() const noexcept { return multipliers.size(); }
};

bool is_positive_definite_gbf(const Eigen::VectorXd& multipliers);

/// exp(-t L).
GbfKernel diffusion_kernel(std::shared_ptr<const Spectrum> spectrum, double t);
/// (eps I + L)^{-s}; requires eps > -lambda_1 and s > 0.
GbfKernel spline_kernel(std::shared_ptr<const Spectrum> spectrum, double eps, double s);
GbfKernel kernel_from_multipliers(std::shared_ptr<const Spectrum> spectrum,
                                  Eigen::VectorXd multipliers);

struct KernelMatrix {
  VertexList nodes;
  Eigen::MatrixXd entries;
};

/// K_f(v, w) for v, w in `nodes`, from the Mercer sum.
KernelMatrix kernel_matrix(const GbfKernel& kernel, std::span<const Vertex> nodes);
/// sum_i c_i K_f(., w_i) on all vertices.
Signal kernel_combination(const GbfKernel& kernel, std::span<const Vertex> nodes,
                          const Eigen::VectorXd& coefficients);

double rkhs_inner(const GbfKernel& kernel, const Signal& x, const Signal& y);
double rkhs_norm(const GbfKernel& kernel, const Signal& x);

/// Spectral convolution C_y x = U diag(y_hat) U^T x.
Signal convolve(const Spectrum& spectrum, const Signal& y, const Signal& x);

/// (eps I + L)^{-s} for integer s through a dense Cholesky factor of
/// eps I + L, without an eigendecomposition.
class SplineFactorization {
 public:
  SplineFactorization(const Graph& g, double eps, int power);

  Vertex size() const noexcept { return size_; }
  double eps() const noexcept { return eps_; }
  int power() const noexcept { return power_; }

  /// K restricted to rows and columns in `nodes`.
  Eigen::MatrixXd matrix(std::span<const Vertex> nodes) const;
  /// Columns of K belonging to `nodes`.
  Eigen::MatrixXd columns(std::span<const Vertex> nodes) const;
  Signal combine(std::span<const Vertex> nodes, const Eigen::VectorXd& coefficients) const;

 private:
  Eigen::MatrixXd solve_power(Eigen::MatrixXd rhs, int power) const;

  Eigen::LLT<Eigen::MatrixXd> factor_;
  Vertex size_ = 0;
  double eps_ = 0.0;
  int power_ = 1;
};

enum class KernelRoute { Auto, Spectral, Factorized };

/// Kernel choice for local and global fits. Auto factorizes variational
/// splines with integer s and uses the eigendecomposition otherwise.
struct KernelSpec {
  KernelFamily family = KernelFamily::VariationalSpline;
  double t = 1.0;
  double eps = 1e-3;
  double s = 2.0;
  KernelRoute route = KernelRoute::Auto;
};

using KernelOperator = std::variant<GbfKernel, SplineFactorization>;

KernelOperator make_kernel(const Graph& g, const KernelSpec& spec);
Eigen::MatrixXd gram_matrix(const KernelOperator& kernel, std::span<const Vertex> nodes);
Signal kernel_combination(const KernelOperator& kernel, std::span<const Vertex> nodes,
                          const Eigen::VectorXd& coefficients);

}  // namespace gpum
