#include "graph_pum/clustering.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gpum {

JCenterResult greedy_j_center(const Graph& g, std::span<const Vertex> candidates,
                              Eigen::Index count, std::optional<Vertex> start) {
  if (candidates.empty()) fail(ErrorCode::EmptyCenterSet, "no candidate centers");
  if (count < 1) fail(ErrorCode::InvalidArgument, "J must be at least 1");
  if (count > static_cast<Eigen::Index>(candidates.size())) {
    fail(ErrorCode::JTooLarge, "J = " + std::to_string(count) + " exceeds |W| = " +
                                   std::to_string(candidates.size()));
  }
  for (Vertex w : candidates) {
    if (w < 0 || w >= g.size()) fail(ErrorCode::NodeOutOfRange, "candidate out of range");
  }
  const Vertex first = start.value_or(candidates.front());
  if (std::find(candidates.begin(), candidates.end(), first) == candidates.end()) {
    fail(ErrorCode::StartNotInW, "start vertex is not a sampling node");
  }

  const Vertex n = g.size();
  JCenterResult result;
  Eigen::VectorXd nearest = Eigen::VectorXd::Constant(n, kInfinity);
  std::vector<Eigen::Index> owner(static_cast<std::size_t>(n), -1);

  auto absorb = [&](Vertex center) {
    const auto j = static_cast<Eigen::Index>(result.centers.size());
    result.centers.push_back(center);
    const Vertex src[] = {center};
    const Eigen::VectorXd d = distances_from(g, src);
    for (Vertex v = 0; v < n; ++v) {
      // strict: equidistant vertices stay with the lower center index
      if (d[v] < nearest[v]) {
        nearest[v] = d[v];
        owner[v] = j;
      }
    }
    result.fill_history.push_back(nearest.maxCoeff());
  };

  absorb(first);
  while (static_cast<Eigen::Index>(result.centers.size()) < count) {
    Vertex best = -1;
    double best_distance = -1.0;
    for (Vertex w : candidates) {
      if (nearest[w] > best_distance) {
        best_distance = nearest[w];
        best = w;
      }
    }
    // Only reachable when W has repeated entries covering every distinct node.
    if (best_distance <= 0.0) {
      fail(ErrorCode::JTooLarge, "fewer than J distinct sampling nodes");
    }
    absorb(best);
  }

  result.fill_distance = result.fill_history.back();
  result.clustering.assignment = std::move(owner);
  result.clustering.clusters.resize(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < n; ++v) {
    result.clustering.clusters[result.clustering.assignment[v]].push_back(v);
  }
  return result;
}

double fill_distance(const Graph& g, std::span<const Vertex> centers,
                     std::span<const Vertex> over) {
  if (centers.empty()) fail(ErrorCode::EmptyCenterSet, "center set is empty");
  const Eigen::VectorXd d = distances_from(g, centers);
  double h = 0.0;
  for (Vertex v : over) h = std::max(h, d[v]);
  return h;
}

double fill_distance(const Graph& g, std::span<const Vertex> centers) {
  if (centers.empty()) fail(ErrorCode::EmptyCenterSet, "center set is empty");
  return distances_from(g, centers).maxCoeff();
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

}  // namespace

OptimalCenters optimal_j_center_bruteforce(const Graph& g,
                                           std::span<const Vertex> candidates,
                                           Eigen::Index count,
                                           std::uint64_t max_subsets) {
  if (count < 1) fail(ErrorCode::InvalidArgument, "J must be at least 1");
  const auto m = static_cast<Eigen::Index>(candidates.size());
  if (count > m) fail(ErrorCode::JTooLarge, "J exceeds the number of candidates");
  if (binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(count),
               max_subsets) > max_subsets) {
    fail(ErrorCode::CombinatorialBlowup, "too many candidate subsets to enumerate");
  }

  // rows: candidates, cols: vertices
  Eigen::MatrixXd table(m, g.size());
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vertex src[] = {candidates[static_cast<std::size_t>(i)]};
    table.row(i) = distances_from(g, src).transpose();
  }

  std::vector<Eigen::Index> pick(static_cast<std::size_t>(count));
  std::iota(pick.begin(), pick.end(), Eigen::Index{0});
  OptimalCenters best{{}, kInfinity};
  Eigen::VectorXd nearest(g.size());
  while (true) {
    nearest = table.row(pick[0]).transpose();
    for (std::size_t k = 1; k < pick.size(); ++k) {
      nearest = nearest.cwiseMin(table.row(pick[k]).transpose());
    }
    const double h = nearest.maxCoeff();
    if (h < best.fill_distance) {
      best.fill_distance = h;
      best.centers.clear();
      for (auto i : pick) best.centers.push_back(candidates[static_cast<std::size_t>(i)]);
    }
    // next combination in lexicographic order
    auto k = static_cast<Eigen::Index>(count) - 1;
    while (k >= 0 && pick[k] == m - count + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (auto l = k + 1; l < count; ++l) pick[l] = pick[l - 1] + 1;
  }
  return best;
}

}  // namespace gpum
