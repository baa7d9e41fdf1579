#include "graph_pum/partition.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace gpum {

Signal PartitionOfUnity::dense(Eigen::Index j, Vertex n) const {
  Signal phi = Signal::Zero(n);
  const auto& support = supports[static_cast<std::size_t>(j)];
  const auto& w = values[static_cast<std::size_t>(j)];
  for (std::size_t k = 0; k < support.size(); ++k) {
    phi[support[k]] = w[static_cast<Eigen::Index>(k)];
  }
  return phi;
}

VertexList augment_cluster(const Graph& g, std::span<const Vertex> cluster, double radius) {
  if (!(radius >= 0.0)) fail(ErrorCode::NegativeRadius, "augmentation radius must be >= 0");
  if (cluster.empty()) fail(ErrorCode::EmptyNodeSet, "cluster is empty");
  const Eigen::VectorXd d = distances_from(g, cluster, radius);
  VertexList out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (d[v] <= radius) out.push_back(v);
  }
  return out;
}

namespace {

bool induced_connected(const Graph& g, const VertexList& nodes, std::vector<char>& mark) {
  std::fill(mark.begin(), mark.end(), 0);
  for (Vertex v : nodes) mark[v] = 1;
  std::vector<Vertex> stack{nodes.front()};
  mark[nodes.front()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (mark[w] == 1) {
        mark[w] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == nodes.size();
}

}  // namespace

Cover build_cover(const Graph& g, const JCenterResult& clustering, double radius) {
  Cover cover;
  cover.radius = radius;
  cover.centers = clustering.centers;
  cover.fill_distance = clustering.fill_distance;
  cover.clusters = clustering.clustering.clusters;
  for (auto& c : cover.clusters) std::sort(c.begin(), c.end());

  std::vector<char> covered(static_cast<std::size_t>(g.size()), 0);
  std::vector<char> mark(static_cast<std::size_t>(g.size()));
  const double reach = clustering.fill_distance + radius;
  for (std::size_t j = 0; j < cover.clusters.size(); ++j) {
    VertexList sub = augment_cluster(g, cover.clusters[j], radius);
    if (!std::includes(sub.begin(), sub.end(), cover.clusters[j].begin(),
                       cover.clusters[j].end())) {
      fail(ErrorCode::InvariantViolation, "cluster not contained in its subdomain");
    }
    const Vertex src[] = {cover.centers[j]};
    const Eigen::VectorXd d = distances_from(g, src);
    for (Vertex v : sub) {
      covered[v] = 1;
      if (d[v] > reach * (1.0 + 1e-12)) {
        fail(ErrorCode::InvariantViolation,
             "subdomain vertex farther than h(Q_J) + r from its center");
      }
    }
    if (!induced_connected(g, sub, mark)) {
      fail(ErrorCode::DisconnectedSubgraph, "subdomain " + std::to_string(j + 1) +
                                                " induces a disconnected subgraph");
    }
    cover.subdomains.push_back(std::move(sub));
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
    fail(ErrorCode::InvariantViolation, "subdomains do not cover V");
  }
  return cover;
}

namespace {

PartitionOfUnity normalize(const Cover& cover, PouKind kind, std::vector<Eigen::VectorXd> psi,
                           Vertex n) {
  Eigen::VectorXd total = Eigen::VectorXd::Zero(n);
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const auto& support = cover.subdomains[j];
    for (std::size_t k = 0; k < support.size(); ++k) {
      total[support[k]] += psi[j][static_cast<Eigen::Index>(k)];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!(total[v] > 0.0)) {
      fail(ErrorCode::ZeroTotalWeight,
           "Shepard weights vanish at vertex " + std::to_string(v));
    }
  }
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const auto& support = cover.subdomains[j];
    for (std::size_t k = 0; k < support.size(); ++k) {
      psi[j][static_cast<Eigen::Index>(k)] /= total[support[k]];
    }
  }
  return {kind, cover.subdomains, std::move(psi)};
}

Vertex vertex_count(const Cover& cover) {
  Vertex n = 0;
  for (const auto& s : cover.subdomains) {
    if (!s.empty()) n = std::max(n, s.back() + 1);
  }
  return n;
}

}  // namespace

PartitionOfUnity shepard_partition(const Cover& cover, PouKind kind) {
  if (kind == PouKind::CustomShepard) {
    fail(ErrorCode::InvalidArgument, "CustomShepard needs explicit weights");
  }
  std::vector<Eigen::VectorXd> psi;
  for (std::size_t j = 0; j < cover.subdomains.size(); ++j) {
    const auto& support = cover.subdomains[j];
    Eigen::VectorXd w(static_cast<Eigen::Index>(support.size()));
    if (kind == PouKind::IndicatorSubdomain) {
      w.setOnes();
    } else {
      const auto& cluster = cover.clusters[j];
      for (std::size_t k = 0; k < support.size(); ++k) {
        w[static_cast<Eigen::Index>(k)] =
            std::binary_search(cluster.begin(), cluster.end(), support[k]) ? 1.0 : 0.0;
      }
    }
    psi.push_back(std::move(w));
  }
  return normalize(cover, kind, std::move(psi), vertex_count(cover));
}

PartitionOfUnity shepard_partition(const Cover& cover,
                                   const std::vector<Eigen::VectorXd>& psi) {
  if (psi.size() != cover.subdomains.size()) {
    fail(ErrorCode::DimensionMismatch, "one weight function per subdomain expected");
  }
  for (std::size_t j = 0; j < psi.size(); ++j) {
    if (psi[j].size() != static_cast<Eigen::Index>(cover.subdomains[j].size())) {
      fail(ErrorCode::DimensionMismatch, "weight function length differs from |V_j|");
    }
    if (!psi[j].allFinite() || (psi[j].array() < 0.0).any()) {
      fail(ErrorCode::InvalidArgument, "Shepard weights must be finite and nonnegative");
    }
  }
  return normalize(cover, PouKind::CustomShepard, psi, vertex_count(cover));
}

bool BoundaryReport::satisfied() const noexcept {
  return std::all_of(subdomains.begin(), subdomains.end(),
                     [](const BoundaryCheck& c) { return c.satisfied; });
}

BoundaryReport check_boundary_condition(const Graph& g, const Cover& cover,
                                        const PartitionOfUnity& pou) {
  BoundaryReport report;
  std::vector<char> inside(static_cast<std::size_t>(g.size()));
  for (Eigen::Index j = 0; j < pou.size(); ++j) {
    const auto& support = cover.subdomains[static_cast<std::size_t>(j)];
    std::fill(inside.begin(), inside.end(), 0);
    for (Vertex v : support) inside[v] = 1;
    const Signal phi = pou.dense(j, g.size());
    BoundaryCheck check;
    for (Vertex v : support) {
      auto nb = g.neighbors(v);
      auto a = g.adjacency(v);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        if (inside[nb[k]]) continue;
        if (std::sqrt(a[k]) * (phi[v] - phi[nb[k]]) != 0.0) {
          check.satisfied = false;
          check.offending_edges.emplace_back(v, nb[k]);
        }
      }
    }
    report.subdomains.push_back(std::move(check));
  }
  return report;
}

void write_cover_csv(std::ostream& out, const Graph& g, const Cover& cover) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<Eigen::Index> cluster_of(n, -1);
  for (std::size_t j = 0; j < cover.clusters.size(); ++j) {
    for (Vertex v : cover.clusters[j]) cluster_of[v] = static_cast<Eigen::Index>(j);
  }
  std::vector<std::string> mask(n, std::string(cover.subdomains.size(), '0'));
  for (std::size_t j = 0; j < cover.subdomains.size(); ++j) {
    for (Vertex v : cover.subdomains[j]) mask[v][j] = '1';
  }
  out << "vertex,cluster,subdomains\n";
  for (std::size_t v = 0; v < n; ++v) {
    out << g.labels()[v] << ',' << cluster_of[v] + 1 << ',' << mask[v] << '\n';
  }
}

}  // namespace gpum
