#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "graph_pum/error.hpp"

namespace gpum {

using Vertex = Eigen::Index;
using VertexList = std::vector<Vertex>;

/// Real-valued function on the vertices, indexed densely from 0.
using Signal = Eigen::VectorXd;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class LaplacianKind { NegativeAdjacency, Standard, Normalized, Custom };
enum class MetricKind { ShortestPathHops, ShortestPathWeighted };

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 1.0;
};

/// Simple connected undirected graph together with a symmetric Laplacian.
///
/// The Laplacian is stored as its diagonal plus the adjacency A = -offdiag(L)
/// in compressed rows. Every undirected edge appears in both orientations, so
/// the compressed position of (i, i') is the id of the directed edge e_{ii'}.
/// Edge lengths used by the weighted metric are kept separately; they are the
/// ingested edge weights and do not change with the Laplacian normalization.
class Graph {
 public:
  Graph() = default;

  Vertex size() const noexcept { return static_cast<Vertex>(diagonal_.size()); }
  std::size_t directed_edge_count() const noexcept { return targets_.size(); }

  LaplacianKind laplacian_kind() const noexcept { return kind_; }
  MetricKind metric_kind() const noexcept { return metric_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  /// A_{v,w} for each neighbor w, aligned with neighbors(v).
  std::span<const double> adjacency(Vertex v) const noexcept {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::span<const double> lengths(Vertex v) const noexcept {
    return {lengths_.data() + offsets_[v], lengths_.data() + offsets_[v + 1]};
  }
  /// First directed edge id leaving v.
  std::size_t edge_begin(Vertex v) const noexcept { return offsets_[v]; }
  std::size_t edge_end(Vertex v) const noexcept { return offsets_[v + 1]; }
  Vertex degree(Vertex v) const noexcept {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }

  const Eigen::VectorXd& diagonal() const noexcept { return diagonal_; }
  double laplacian(Vertex i, Vertex j) const;
  Eigen::MatrixXd laplacian_dense() const;

  /// True when the weighted metric reduces to hop counts.
  bool unit_lengths() const noexcept { return unit_lengths_; }

  /// External 1-based labels, one per vertex.
  const std::vector<std::int64_t>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::int64_t> labels);

 private:
  friend class GraphBuilder;

  LaplacianKind kind_ = LaplacianKind::Standard;
  MetricKind metric_ = MetricKind::ShortestPathHops;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<double> weights_;
  std::vector<double> lengths_;
  Eigen::VectorXd diagonal_;
  std::vector<std::int64_t> labels_;
  bool unit_lengths_ = true;
};

/// Assembles a graph from undirected weighted edges. Duplicate edges with an
/// identical weight collapse; conflicting duplicates are rejected.
Graph build_graph(Vertex n, std::span<const WeightedEdge> edges,
                  LaplacianKind kind,
                  MetricKind metric = MetricKind::ShortestPathHops);

/// Wraps an arbitrary symmetric matrix with nonpositive off-diagonal entries
/// as a Custom Laplacian. Edge lengths default to 1.
Graph graph_from_laplacian(const Eigen::MatrixXd& laplacian,
                           MetricKind metric = MetricKind::ShortestPathHops);

/// Same graph with the Laplacian diagonal replaced (kind becomes Custom).
Graph with_diagonal(const Graph& g, const Eigen::VectorXd& diagonal);

bool is_connected(const Graph& g);

/// Shortest-path distance under the graph's metric kind.
double distance(const Graph& g, Vertex u, Vertex v);

/// Minimum distance to any source; entries beyond `cutoff` stay infinite.
Eigen::VectorXd distances_from(const Graph& g, std::span<const Vertex> sources,
                               double cutoff = kInfinity);

/// Function on directed edges, indexed by directed edge id.
struct EdgeFunction {
  Eigen::VectorXd values;
};

EdgeFunction gradient(const Graph& g, const Signal& x);

double node_norm(const Signal& x, double p);
double edge_norm(const EdgeFunction& z, double p);
/// max_i (sum over edges leaving v_i of |z|^p)^{1/p}; the edge sup-norm at p = inf.
double hybrid_norm(const Graph& g, const EdgeFunction& z, double p);

/// Exponent q with 1/p + 1/q = 1.
double dual_exponent(double p);

Signal laplacian_apply(const Graph& g, const Signal& x);
/// L_S x with L_S = D - A built from the adjacency of g, whatever its kind.
Signal standard_laplacian_apply(const Graph& g, const Signal& x);

/// Induced subgraph whose Laplacian is the principal submatrix of the parent.
/// Distances for the local graph are meant to be taken in the parent through
/// `to_parent`.
struct Subgraph {
  Graph graph;
  VertexList to_parent;
};

Subgraph extract_subgraph(const Graph& g, std::span<const Vertex> nodes);

}  // namespace gpum
