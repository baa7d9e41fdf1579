#pragma once

// Independent reference computations used to check the library.

#include <cmath>
#include <cstdint>
#include <deque>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "graph_pum/graph.hpp"

namespace oracle {

using gpum::Graph;
using gpum::Vertex;

/// Dense L rebuilt from the public accessors of g.
inline Eigen::MatrixXd laplacian(const Graph& g) {
  const Vertex n = g.size();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (Vertex i = 0; i < n; ++i) {
    l(i, i) = g.diagonal()[i];
    auto nb = g.neighbors(i);
    auto a = g.adjacency(i);
    for (std::size_t k = 0; k < nb.size(); ++k) l(i, nb[k]) = -a[k];
  }
  return l;
}

/// All-pairs hop distances by repeated BFS over the dense Laplacian pattern.
inline Eigen::MatrixXd hop_distances(const Eigen::MatrixXd& l) {
  const auto n = l.rows();
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, gpum::kInfinity);
  for (Eigen::Index s = 0; s < n; ++s) {
    std::deque<Eigen::Index> queue{s};
    d(s, s) = 0.0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (Eigen::Index v = 0; v < n; ++v) {
        if (v != u && l(u, v) != 0.0 && std::isinf(d(s, v))) {
          d(s, v) = d(s, u) + 1.0;
          queue.push_back(v);
        }
      }
    }
  }
  return d;
}

/// Floyd-Warshall on explicit edge lengths.
inline Eigen::MatrixXd weighted_distances(Vertex n, const std::vector<gpum::WeightedEdge>& edges) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, gpum::kInfinity);
  for (Vertex i = 0; i < n; ++i) d(i, i) = 0.0;
  for (const auto& e : edges) {
    d(e.u, e.v) = std::min(d(e.u, e.v), e.weight);
    d(e.v, e.u) = d(e.u, e.v);
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  return d;
}

/// exp(m) by scaling and squaring with a degree-18 Taylor polynomial.
inline Eigen::MatrixXd expm(const Eigen::MatrixXd& m) {
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Eigen::MatrixXd a = m / std::ldexp(1.0, squarings);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  Eigen::MatrixXd sum = term;
  for (int k = 1; k <= 18; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Fill distance max_v min_q d(v, q) from a distance matrix.
inline double fill(const Eigen::MatrixXd& d, const std::vector<Vertex>& centers,
                   const std::vector<Vertex>& over) {
  double h = 0.0;
  for (Vertex v : over) {
    double best = gpum::kInfinity;
    for (Vertex q : centers) best = std::min(best, d(v, q));
    h = std::max(h, best);
  }
  return h;
}

/// min over all J-subsets of `pool` of the fill distance over all vertices.
inline double optimal_fill(const Eigen::MatrixXd& d, const std::vector<Vertex>& pool, int count) {
  std::vector<Vertex> all(static_cast<std::size_t>(d.rows()));
  for (Vertex v = 0; v < d.rows(); ++v) all[v] = v;
  std::vector<int> pick(static_cast<std::size_t>(count));
  double best = gpum::kInfinity;
  // iterate combinations of indices into pool in lexicographic order
  for (int i = 0; i < count; ++i) pick[i] = i;
  const int m = static_cast<int>(pool.size());
  while (true) {
    std::vector<Vertex> q;
    for (int i : pick) q.push_back(pool[i]);
    best = std::min(best, fill(d, q, all));
    int i = count - 1;
    while (i >= 0 && pick[i] == m - count + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < count; ++k) pick[k] = pick[k - 1] + 1;
  }
  return best;
}

inline gpum::Signal random_signal(Vertex n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  gpum::Signal x(n);
  for (Vertex i = 0; i < n; ++i) x[i] = u(rng);
  return x;
}

/// Smallest eigenvalue of a symmetric matrix.
inline double min_eigenvalue(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly)
      .eigenvalues()
      .minCoeff();
}

}  // namespace oracle
