#include <doctest.h>

#include <cmath>
#include <random>

#include "graph_pum/generators.hpp"
#include "graph_pum/spectral.hpp"
#include "oracles.hpp"

using namespace gpum;

TEST_CASE("two-node spectrum") {
  const Spectrum s = eigendecompose(path_graph(2));
  CHECK(s.eigenvalues[0] == doctest::Approx(0.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(2.0));
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(s.eigenvectors(0, 0) == doctest::Approx(h));
  CHECK(s.eigenvectors(1, 0) == doctest::Approx(h));
  CHECK(s.eigenvectors(0, 1) == doctest::Approx(h));
  CHECK(s.eigenvectors(1, 1) == doctest::Approx(-h));
}

TEST_CASE("eigendecomposition reconstructs L with orthonormal vectors") {
  for (auto kind : {LaplacianKind::Standard, LaplacianKind::Normalized,
                    LaplacianKind::NegativeAdjacency}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph g = random_connected_graph(30, 25, seed, kind, false);
      const Spectrum s = eigendecompose(g);
      const Eigen::MatrixXd& u = s.eigenvectors;
      CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(30, 30)).cwiseAbs().maxCoeff() <
            1e-12);
      const Eigen::MatrixXd rebuilt = u * s.eigenvalues.asDiagonal() * u.transpose();
      CHECK((rebuilt - oracle::laplacian(g)).cwiseAbs().maxCoeff() < 1e-12);
      for (Eigen::Index k = 1; k < s.size(); ++k) {
        CHECK(s.eigenvalues[k - 1] <= s.eigenvalues[k]);
      }
      for (Eigen::Index k = 0; k < s.size(); ++k) {
        Eigen::Index at = 0;
        u.col(k).cwiseAbs().maxCoeff(&at);
        CHECK(u(at, k) > 0.0);
      }
    }
  }
}

TEST_CASE("connected standard Laplacian has a simple zero eigenvalue") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Spectrum s = eigendecompose(random_geometric_graph(40, 0.2, seed));
    CHECK(std::abs(s.eigenvalues[0]) < 1e-10);
    CHECK(s.eigenvalues[1] > 1e-8);
  }
}

TEST_CASE("Fourier transform round trip") {
  const Spectrum s = eigendecompose(grid_graph(4, 5));
  const Eigen::VectorXd xhat = fourier(s, s.eigenvectors.col(2));
  Eigen::VectorXd e3 = Eigen::VectorXd::Zero(20);
  e3[2] = 1.0;
  CHECK((xhat - e3).cwiseAbs().maxCoeff() < 1e-8);
  std::mt19937_64 rng(1);
  const Signal x = oracle::random_signal(20, rng);
  CHECK((inverse_fourier(s, fourier(s, x)) - x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("bandlimited signals") {
  const Spectrum s = eigendecompose(random_connected_graph(25, 10, 4));
  CHECK(bandlimited_signal(s, 25).norm() == doctest::Approx(5.0));
  const Signal x1 = bandlimited_signal(s, 1);
  CHECK(((x1.array() > 0).all() || (x1.array() < 0).all()));
  CHECK_THROWS_AS(bandlimited_signal(s, 0), Error);
  CHECK_THROWS_AS(bandlimited_signal(s, 26), Error);
}

TEST_CASE("eigendecompose rejects asymmetric input") {
  Eigen::Matrix2d m{{1, 2}, {0, 1}};
  CHECK_THROWS_AS(eigendecompose(Eigen::MatrixXd(m)), Error);
}
