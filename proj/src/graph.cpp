#include "graph_pum/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

namespace gpum {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::InvalidP: return "InvalidP";
    case ErrorCode::DisconnectedSubgraph: return "DisconnectedSubgraph";
    case ErrorCode::EmptyNodeSet: return "EmptyNodeSet";
    case ErrorCode::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::StartNotInW: return "StartNotInW";
    case ErrorCode::JTooLarge: return "JTooLarge";
    case ErrorCode::EmptyCenterSet: return "EmptyCenterSet";
    case ErrorCode::CombinatorialBlowup: return "CombinatorialBlowup";
    case ErrorCode::NegativeRadius: return "NegativeRadius";
    case ErrorCode::ZeroTotalWeight: return "ZeroTotalWeight";
    case ErrorCode::EpsilonTooSmall: return "EpsilonTooSmall";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::EmptyLocalSampleSet: return "EmptyLocalSampleSet";
    case ErrorCode::ZeroReference: return "ZeroReference";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

struct Adjacent {
  Vertex target;
  double weight;
  double length;
};

using AdjacencyRows = std::vector<std::vector<Adjacent>>;

}  // namespace

class GraphBuilder {
 public:
  static Graph assemble(AdjacencyRows rows, Eigen::VectorXd diagonal,
                        LaplacianKind kind, MetricKind metric) {
    Graph g;
    g.kind_ = kind;
    g.metric_ = metric;
    const auto n = static_cast<Vertex>(rows.size());
    g.offsets_.assign(rows.size() + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
      auto& row = rows[v];
      std::sort(row.begin(), row.end(),
                [](const Adjacent& a, const Adjacent& b) { return a.target < b.target; });
      g.offsets_[v + 1] = g.offsets_[v] + row.size();
    }
    g.targets_.reserve(g.offsets_.back());
    g.weights_.reserve(g.offsets_.back());
    g.lengths_.reserve(g.offsets_.back());
    for (const auto& row : rows) {
      for (const auto& a : row) {
        g.targets_.push_back(a.target);
        g.weights_.push_back(a.weight);
        g.lengths_.push_back(a.length);
        if (a.length != 1.0) g.unit_lengths_ = false;
      }
    }
    g.diagonal_ = std::move(diagonal);
    g.labels_.resize(rows.size());
    std::iota(g.labels_.begin(), g.labels_.end(), std::int64_t{1});
    return g;
  }

  static AdjacencyRows rows_of(const Graph& g) {
    AdjacencyRows rows(static_cast<std::size_t>(g.size()));
    for (Vertex v = 0; v < g.size(); ++v) {
      for (std::size_t e = g.edge_begin(v); e < g.edge_end(v); ++e) {
        rows[v].push_back({g.targets_[e], g.weights_[e], g.lengths_[e]});
      }
    }
    return rows;
  }
};

double Graph::laplacian(Vertex i, Vertex j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size()) {
    fail(ErrorCode::NodeOutOfRange, "laplacian entry out of range");
  }
  if (i == j) return diagonal_[i];
  auto nb = neighbors(i);
  auto it = std::lower_bound(nb.begin(), nb.end(), j);
  if (it == nb.end() || *it != j) return 0.0;
  return -weights_[offsets_[i] + static_cast<std::size_t>(it - nb.begin())];
}

Eigen::MatrixXd Graph::laplacian_dense() const {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(size(), size());
  for (Vertex v = 0; v < size(); ++v) {
    L(v, v) = diagonal_[v];
    for (std::size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
      L(v, targets_[e]) = -weights_[e];
    }
  }
  return L;
}

void Graph::set_labels(std::vector<std::int64_t> labels) {
  if (static_cast<Vertex>(labels.size()) != size()) {
    fail(ErrorCode::DimensionMismatch, "label count differs from vertex count");
  }
  labels_ = std::move(labels);
}

Graph build_graph(Vertex n, std::span<const WeightedEdge> edges,
                  LaplacianKind kind, MetricKind metric) {
  if (n <= 0) fail(ErrorCode::EmptyNodeSet, "graph needs at least one vertex");
  if (kind == LaplacianKind::Custom) {
    fail(ErrorCode::InvalidArgument,
         "Custom Laplacians are built with graph_from_laplacian or with_diagonal");
  }
  std::map<std::pair<Vertex, Vertex>, double> unique;
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      fail(ErrorCode::NodeOutOfRange, "edge endpoint outside [0, n)");
    }
    if (e.u == e.v) {
      fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      fail(ErrorCode::NonpositiveWeight,
           "edge weight must be positive and finite, got " + std::to_string(e.weight));
    }
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = unique.emplace(key, e.weight);
    if (!inserted && it->second != e.weight) {
      fail(ErrorCode::ParseError, "conflicting weights for edge " +
                                      std::to_string(key.first) + "-" +
                                      std::to_string(key.second));
    }
  }

  Eigen::VectorXd degree = Eigen::VectorXd::Zero(n);
  for (const auto& [key, w] : unique) {
    degree[key.first] += w;
    degree[key.second] += w;
  }

  AdjacencyRows rows(static_cast<std::size_t>(n));
  for (const auto& [key, w] : unique) {
    double a = w;
    if (kind == LaplacianKind::Normalized) {
      a = w / std::sqrt(degree[key.first] * degree[key.second]);
    }
    rows[key.first].push_back({key.second, a, w});
    rows[key.second].push_back({key.first, a, w});
  }

  Eigen::VectorXd diagonal;
  switch (kind) {
    case LaplacianKind::NegativeAdjacency: diagonal = Eigen::VectorXd::Zero(n); break;
    case LaplacianKind::Standard: diagonal = degree; break;
    case LaplacianKind::Normalized: diagonal = Eigen::VectorXd::Ones(n); break;
    case LaplacianKind::Custom: break;
  }

  Graph g = GraphBuilder::assemble(std::move(rows), std::move(diagonal), kind, metric);
  if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "graph is not connected");
  return g;
}

Graph graph_from_laplacian(const Eigen::MatrixXd& laplacian, MetricKind metric) {
  const Vertex n = laplacian.rows();
  if (n == 0) fail(ErrorCode::EmptyNodeSet, "empty Laplacian");
  if (laplacian.cols() != n) fail(ErrorCode::DimensionMismatch, "Laplacian must be square");
  AdjacencyRows rows(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (laplacian(i, j) != laplacian(j, i)) {
        fail(ErrorCode::NonSymmetric, "Laplacian is not symmetric");
      }
      if (i == j || laplacian(i, j) == 0.0) continue;
      if (laplacian(i, j) > 0.0) {
        fail(ErrorCode::NonpositiveWeight, "positive off-diagonal Laplacian entry");
      }
      rows[i].push_back({j, -laplacian(i, j), 1.0});
    }
  }
  if (metric == MetricKind::ShortestPathWeighted) {
    for (auto& row : rows) {
      for (auto& a : row) a.length = a.weight;
    }
  }
  Graph g = GraphBuilder::assemble(std::move(rows), laplacian.diagonal(),
                                   LaplacianKind::Custom, metric);
  if (!is_connected(g)) fail(ErrorCode::DisconnectedGraph, "graph is not connected");
  return g;
}

Graph with_diagonal(const Graph& g, const Eigen::VectorXd& diagonal) {
  if (diagonal.size() != g.size()) {
    fail(ErrorCode::DimensionMismatch, "diagonal length differs from vertex count");
  }
  Graph out = GraphBuilder::assemble(GraphBuilder::rows_of(g), diagonal,
                                     LaplacianKind::Custom, g.metric_kind());
  out.set_labels(g.labels());
  return out;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.size();
}

Eigen::VectorXd distances_from(const Graph& g, std::span<const Vertex> sources,
                               double cutoff) {
  Eigen::VectorXd dist = Eigen::VectorXd::Constant(g.size(), kInfinity);
  for (Vertex s : sources) {
    if (s < 0 || s >= g.size()) fail(ErrorCode::NodeOutOfRange, "source vertex out of range");
    dist[s] = 0.0;
  }
  const bool hops = g.metric_kind() == MetricKind::ShortestPathHops || g.unit_lengths();
  if (hops) {
    std::deque<Vertex> queue(sources.begin(), sources.end());
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      const double next = dist[v] + 1.0;
      if (next > cutoff) continue;
      for (Vertex w : g.neighbors(v)) {
        if (next < dist[w]) {
          dist[w] = next;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (Vertex s : sources) heap.emplace(0.0, s);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    auto nb = g.neighbors(v);
    auto len = g.lengths(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const double next = d + len[k];
      if (next <= cutoff && next < dist[nb[k]]) {
        dist[nb[k]] = next;
        heap.emplace(next, nb[k]);
      }
    }
  }
  return dist;
}

double distance(const Graph& g, Vertex u, Vertex v) {
  const Vertex src[] = {u};
  if (v < 0 || v >= g.size()) fail(ErrorCode::NodeOutOfRange, "target vertex out of range");
  return distances_from(g, src)[v];
}

EdgeFunction gradient(const Graph& g, const Signal& x) {
  if (x.size() != g.size()) fail(ErrorCode::DimensionMismatch, "signal length mismatch");
  EdgeFunction z{Eigen::VectorXd(static_cast<Eigen::Index>(g.directed_edge_count()))};
  for (Vertex i = 0; i < g.size(); ++i) {
    auto nb = g.neighbors(i);
    auto a = g.adjacency(i);
    const std::size_t base = g.edge_begin(i);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      z.values[static_cast<Eigen::Index>(base + k)] = std::sqrt(a[k]) * (x[i] - x[nb[k]]);
    }
  }
  return z;
}

namespace {

void check_p(double p) {
  if (!(p >= 1.0)) fail(ErrorCode::InvalidP, "norm exponent must satisfy p >= 1");
}

double lp(const Eigen::Ref<const Eigen::VectorXd>& v, double p) {
  check_p(p);
  if (v.size() == 0) return 0.0;
  if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
  if (p == 1.0) return v.cwiseAbs().sum();
  if (p == 2.0) return v.norm();
  return std::pow(v.cwiseAbs().array().pow(p).sum(), 1.0 / p);
}

}  // namespace

double node_norm(const Signal& x, double p) { return lp(x, p); }

double edge_norm(const EdgeFunction& z, double p) { return lp(z.values, p); }

double hybrid_norm(const Graph& g, const EdgeFunction& z, double p) {
  check_p(p);
  if (z.values.size() != static_cast<Eigen::Index>(g.directed_edge_count())) {
    fail(ErrorCode::DimensionMismatch, "edge function does not match graph");
  }
  double best = 0.0;
  for (Vertex i = 0; i < g.size(); ++i) {
    const auto begin = static_cast<Eigen::Index>(g.edge_begin(i));
    const auto count = static_cast<Eigen::Index>(g.degree(i));
    best = std::max(best, lp(z.values.segment(begin, count), p));
  }
  return best;
}

double dual_exponent(double p) {
  check_p(p);
  if (p == 1.0) return kInfinity;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

Signal laplacian_apply(const Graph& g, const Signal& x) {
  if (x.size() != g.size()) fail(ErrorCode::DimensionMismatch, "signal length mismatch");
  Signal y = g.diagonal().cwiseProduct(x);
  for (Vertex i = 0; i < g.size(); ++i) {
    auto nb = g.neighbors(i);
    auto a = g.adjacency(i);
    double acc = 0.0;
    for (std::size_t k = 0; k < nb.size(); ++k) acc += a[k] * x[nb[k]];
    y[i] -= acc;
  }
  return y;
}

Signal standard_laplacian_apply(const Graph& g, const Signal& x) {
  if (x.size() != g.size()) fail(ErrorCode::DimensionMismatch, "signal length mismatch");
  Signal y(g.size());
  for (Vertex i = 0; i < g.size(); ++i) {
    auto nb = g.neighbors(i);
    auto a = g.adjacency(i);
    double acc = 0.0;
    for (std::size_t k = 0; k < nb.size(); ++k) acc += a[k] * (x[i] - x[nb[k]]);
    y[i] = acc;
  }
  return y;
}

Subgraph extract_subgraph(const Graph& g, std::span<const Vertex> nodes) {
  if (nodes.empty()) fail(ErrorCode::EmptyNodeSet, "subgraph node set is empty");
  VertexList sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= g.size()) {
    fail(ErrorCode::NodeOutOfRange, "subgraph node outside graph");
  }

  std::vector<Vertex> local(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t k = 0; k < sorted.size(); ++k) local[sorted[k]] = static_cast<Vertex>(k);

  AdjacencyRows rows(sorted.size());
  Eigen::VectorXd diagonal(static_cast<Eigen::Index>(sorted.size()));
  std::vector<std::int64_t> labels(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const Vertex v = sorted[k];
    diagonal[static_cast<Eigen::Index>(k)] = g.diagonal()[v];
    labels[k] = g.labels()[v];
    auto nb = g.neighbors(v);
    auto a = g.adjacency(v);
    auto len = g.lengths(v);
    for (std::size_t e = 0; e < nb.size(); ++e) {
      if (local[nb[e]] >= 0) rows[k].push_back({local[nb[e]], a[e], len[e]});
    }
  }

  const bool whole = static_cast<Vertex>(sorted.size()) == g.size();
  const LaplacianKind kind = whole ? g.laplacian_kind() : LaplacianKind::Custom;
  Subgraph sub{GraphBuilder::assemble(std::move(rows), std::move(diagonal), kind,
                                      g.metric_kind()),
               std::move(sorted)};
  sub.graph.set_labels(std::move(labels));
  if (!is_connected(sub.graph)) {
    fail(ErrorCode::DisconnectedSubgraph, "induced subgraph is not connected");
  }
  return sub;
}

}  // namespace gpum
