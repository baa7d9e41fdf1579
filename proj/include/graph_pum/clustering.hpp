#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graph_pum/graph.hpp"

namespace gpum {

/// Disjoint clusters covering V; assignment[v] is the cluster index of v.
struct Clustering {
  std::vector<VertexList> clusters;
  std::vector<Eigen::Index> assignment;
};

struct JCenterResult {
  VertexList centers;
  Clustering clustering;
  /// h(Q_J) over all of V.
  double fill_distance = 0.0;
  /// h(Q_j) after each center was added, j = 1..J.
  std::vector<double> fill_history;
};

/// Restricted greedy J-center clustering. Centers are drawn from `candidates`
/// (the sampling set W): each new center maximizes the distance to the centers
/// chosen so far, ties going to the lowest position in `candidates`. Vertices
/// join their nearest center, ties going to the lowest center index. Without
/// `start` the first candidate is used.
JCenterResult greedy_j_center(const Graph& g, std::span<const Vertex> candidates,
                              Eigen::Index count, std::optional<Vertex> start = {});

/// max over `over` of the distance to the nearest element of `centers`.
double fill_distance(const Graph& g, std::span<const Vertex> centers,
                     std::span<const Vertex> over);
double fill_distance(const Graph& g, std::span<const Vertex> centers);

struct OptimalCenters {
  VertexList centers;
  double fill_distance = 0.0;
};

/// Exact J-center optimum over all `count`-subsets of `candidates`, found by
/// enumeration. Ties keep the lexicographically first subset.
OptimalCenters optimal_j_center_bruteforce(const Graph& g,
                                           std::span<const Vertex> candidates,
                                           Eigen::Index count,
                                           std::uint64_t max_subsets = 1'000'000);

}  // namespace gpum
