#include "graph_pum/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace gpum {

Graph path_graph(Vertex n, LaplacianKind kind) {
  std::vector<WeightedEdge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
  return build_graph(n, edges, kind);
}

Graph grid_graph(Vertex rows, Vertex cols, LaplacianKind kind) {
  std::vector<WeightedEdge> edges;
  auto id = [cols](Vertex r, Vertex c) { return r * cols + c; };
  for (Vertex r = 0; r < rows; ++r) {
    for (Vertex c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1.0});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1.0});
    }
  }
  return build_graph(rows * cols, edges, kind);
}

Graph random_connected_graph(Vertex n, Vertex extra_edges, std::uint64_t seed,
                             LaplacianKind kind, bool unit_weights) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  auto draw = [&] { return unit_weights ? 1.0 : weight(rng); };
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<WeightedEdge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const Vertex parent = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    seen.emplace(parent, v);
    edges.push_back({parent, v, draw()});
  }
  const Vertex max_edges = n * (n - 1) / 2;
  const Vertex target = std::min<Vertex>(max_edges, n - 1 + extra_edges);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  while (static_cast<Vertex>(edges.size()) < target) {
    Vertex a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!seen.emplace(a, b).second) continue;
    edges.push_back({a, b, draw()});
  }
  return build_graph(n, edges, kind);
}

Graph random_geometric_graph(Vertex n, double radius, std::uint64_t seed, LaplacianKind kind) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n));
  for (auto& p : pts) p = {coord(rng), coord(rng)};
  auto dist = [&](Vertex a, Vertex b) {
    return std::hypot(pts[a].first - pts[b].first, pts[a].second - pts[b].second);
  };

  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  std::vector<WeightedEdge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (dist(a, b) < radius) {
        edges.push_back({a, b, 1.0});
        parent[find(a)] = find(b);
      }
    }
  }
  // join components through their closest pair until one remains
  while (true) {
    double best = kInfinity;
    std::pair<Vertex, Vertex> link{-1, -1};
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (find(a) != find(b) && dist(a, b) < best) {
          best = dist(a, b);
          link = {a, b};
        }
      }
    }
    if (link.first < 0) break;
    edges.push_back({link.first, link.second, 1.0});
    parent[find(link.first)] = find(link.second);
  }
  return build_graph(n, edges, kind);
}

}  // namespace gpum
