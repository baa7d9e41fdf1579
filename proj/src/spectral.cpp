#include "graph_pum/spectral.hpp"

#include <Eigen/Eigenvalues>

namespace gpum {

Spectrum eigendecompose(const Graph& g) {
  if (g.size() > kMaxDenseSize) {
    fail(ErrorCode::TooLarge, "graph exceeds the dense eigensolver limit of " +
                                  std::to_string(kMaxDenseSize) + " vertices");
  }
  return eigendecompose(g.laplacian_dense());
}

Spectrum eigendecompose(const Eigen::MatrixXd& symmetric) {
  const Vertex n = symmetric.rows();
  if (symmetric.cols() != n) fail(ErrorCode::DimensionMismatch, "matrix must be square");
  if (n > kMaxDenseSize) fail(ErrorCode::TooLarge, "matrix too large for dense solver");
  if (n == 0) return {};
  const double scale = std::max(1.0, symmetric.cwiseAbs().maxCoeff());
  if ((symmetric - symmetric.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    fail(ErrorCode::NonSymmetric, "matrix is not symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::InvariantViolation, "symmetric eigensolver did not converge");
  }
  Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = 0;
    s.eigenvectors.col(k).cwiseAbs().maxCoeff(&pivot);
    if (s.eigenvectors(pivot, k) < 0.0) s.eigenvectors.col(k) *= -1.0;
  }
  return s;
}

Eigen::VectorXd fourier(const Spectrum& spectrum, const Signal& x) {
  if (x.size() != spectrum.size()) fail(ErrorCode::DimensionMismatch, "signal length mismatch");
  return spectrum.eigenvectors.transpose() * x;
}

Signal inverse_fourier(const Spectrum& spectrum, const Eigen::VectorXd& coefficients) {
  if (coefficients.size() != spectrum.size()) {
    fail(ErrorCode::DimensionMismatch, "coefficient length mismatch");
  }
  return spectrum.eigenvectors * coefficients;
}

Signal bandlimited_signal(const Spectrum& spectrum, Vertex count) {
  if (count < 1 || count > spectrum.size()) {
    fail(ErrorCode::KOutOfRange, "band limit must lie in [1, n]");
  }
  return spectrum.eigenvectors.leftCols(count).rowwise().sum();
}

}  // namespace gpum
