#pragma once

#include <Eigen/Core>

#include "graph_pum/graph.hpp"

namespace gpum {

/// Largest graph handled by the dense eigensolver.
inline constexpr Vertex kMaxDenseSize = 10000;

/// Eigenpairs of a symmetric Laplacian, eigenvalues ascending. Each
/// eigenvector is signed so that its largest-magnitude entry (first one on
/// ties) is positive.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  Vertex size() const noexcept { return eigenvalues.size(); }
};

Spectrum eigendecompose(const Graph& g);
Spectrum eigendecompose(const Eigen::MatrixXd& symmetric);

/// Graph Fourier transform U^T x.
Eigen::VectorXd fourier(const Spectrum& spectrum, const Signal& x);
Signal inverse_fourier(const Spectrum& spectrum, const Eigen::VectorXd& coefficients);

/// Sum of the first `count` eigenvectors.
Signal bandlimited_signal(const Spectrum& spectrum, Vertex count);

}  // namespace gpum
