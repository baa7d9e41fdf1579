#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "graph_pum/clustering.hpp"
#include "graph_pum/graph.hpp"

namespace gpum {

/// Overlapping subdomains V_j grown from disjoint clusters C_j.
struct Cover {
  std::vector<VertexList> subdomains;  ///< sorted vertex ids of V_j
  std::vector<VertexList> clusters;    ///< sorted vertex ids of C_j
  VertexList centers;
  double radius = 0.0;
  double fill_distance = 0.0;

  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(subdomains.size()); }
};

enum class PouKind { IndicatorSubdomain, IndicatorCluster, CustomShepard };

/// Partition of unity subordinate to a cover. values[j][k] is the weight of
/// subdomains[j][k]; the weight vanishes off V_j.
struct PartitionOfUnity {
  PouKind kind = PouKind::IndicatorCluster;
  std::vector<VertexList> supports;
  std::vector<Eigen::VectorXd> values;

  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(values.size()); }
  /// phi^(j) extended by zero to all n vertices.
  Signal dense(Eigen::Index j, Vertex n) const;
};

/// C_j together with every vertex within distance r of C_j.
VertexList augment_cluster(const Graph& g, std::span<const Vertex> cluster, double radius);

/// Augments every cluster and checks the cover invariants: C_j in V_j, the
/// union is V, d(v, q_j) <= h(Q_J) + r on V_j and each V_j is connected.
Cover build_cover(const Graph& g, const JCenterResult& clustering, double radius);

/// Shepard weights from indicators of V_j (IndicatorSubdomain) or of C_j
/// (IndicatorCluster).
PartitionOfUnity shepard_partition(const Cover& cover, PouKind kind);

/// Shepard weights from caller-supplied psi^(j), given on V_j in the order of
/// cover.subdomains[j].
PartitionOfUnity shepard_partition(const Cover& cover,
                                   const std::vector<Eigen::VectorXd>& psi);

struct BoundaryCheck {
  bool satisfied = true;
  /// Directed edges (v_i in V_j, v_i' outside V_j) with a nonzero gradient.
  std::vector<std::pair<Vertex, Vertex>> offending_edges;
};

struct BoundaryReport {
  std::vector<BoundaryCheck> subdomains;
  bool satisfied() const noexcept;
};

/// Checks that grad phi^(j) vanishes on every edge leaving V_j.
BoundaryReport check_boundary_condition(const Graph& g, const Cover& cover,
                                        const PartitionOfUnity& pou);

/// CSV with columns vertex,cluster,subdomains. Vertex and cluster are 1-based;
/// `subdomains` is a 0/1 string whose j-th character flags membership in V_{j+1}.
void write_cover_csv(std::ostream& out, const Graph& g, const Cover& cover);

}  // namespace gpum
