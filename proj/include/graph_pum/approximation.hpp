#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "graph_pum/clustering.hpp"
#include "graph_pum/graph.hpp"
#include "graph_pum/kernels.hpp"
#include "graph_pum/partition.hpp"

namespace gpum {

/// Known values x(w_i) on distinct sampling nodes w_i.
struct SampleSet {
  VertexList nodes;
  Eigen::VectorXd values;

  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(nodes.size()); }
};

SampleSet sample_signal(const Signal& x, VertexList nodes);

/// First `count` entries of a seeded random permutation of V, so the sets for
/// increasing counts are nested.
VertexList nested_sampling_sequence(Vertex n, Vertex count, std::uint64_t seed);

/// Coefficients of sum_i c_i K(., w_i) solving (K_W + gamma N I) c = x|_W.
struct LocalFit {
  std::shared_ptr<const KernelOperator> kernel;
  VertexList sample_nodes;
  Eigen::VectorXd coefficients;
  double gamma = 0.0;
  /// ||(K_W + gamma N I) c - x|_W|| / ||x|_W||.
  double relative_residual = 0.0;
  /// Set when Cholesky broke down and a pivoted LDL^T solve was used.
  bool pivoted_fallback = false;
};

LocalFit fit_local(std::shared_ptr<const KernelOperator> kernel, const SampleSet& samples,
                   double gamma);
Signal evaluate_local(const LocalFit& fit);

/// Fit and evaluate on the whole graph.
Signal gbf_global(const Graph& g, const KernelSpec& kernel, const SampleSet& samples,
                  double gamma);

struct PumConfig {
  Eigen::Index subdomains = 8;
  double radius = 8.0;
  std::optional<Vertex> start;
  PouKind pou = PouKind::IndicatorCluster;
  /// Builds the partition when pou == CustomShepard.
  std::function<PartitionOfUnity(const Graph&, const Cover&)> custom_partition;
  KernelSpec kernel;
  double gamma = 0.0;
  /// 0 picks default_thread_count().
  unsigned threads = 0;
};

struct LocalSolution {
  Subgraph subgraph;
  LocalFit fit;
  /// x_*^(j) on V_j, ordered like subgraph.to_parent.
  Signal values;
};

struct PumApproximant {
  PumConfig config;
  JCenterResult centers;
  Cover cover;
  PartitionOfUnity partition;
  std::vector<LocalSolution> locals;
  /// x_* = sum_j phi^(j) x_*^(j).
  Signal values;
};

PumApproximant gbf_pum(const Graph& g, const SampleSet& samples, const PumConfig& config);

/// sum_j phi^(j) x^(j) with each x^(j) given on V_j.
Signal blend(const PartitionOfUnity& partition, const std::vector<Signal>& local_values,
             Vertex n);

}  // namespace gpum
