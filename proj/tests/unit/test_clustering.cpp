#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graph_pum/clustering.hpp"
#include "graph_pum/generators.hpp"
#include "oracles.hpp"

using namespace gpum;

namespace {

VertexList iota(Vertex n) {
  VertexList v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

}  // namespace

TEST_CASE("single center owns the whole graph") {
  const Graph g = random_connected_graph(12, 4, 1);
  const VertexList w{5, 2, 9};
  const JCenterResult r = greedy_j_center(g, w, 1);
  CHECK(r.centers == VertexList{5});
  REQUIRE(r.clustering.clusters.size() == 1);
  CHECK(r.clustering.clusters[0] == iota(12));
}

TEST_CASE("greedy on the five-node path") {
  const Graph g = path_graph(5);
  const JCenterResult r = greedy_j_center(g, iota(5), 2, 0);
  CHECK(r.centers == VertexList{0, 4});
  CHECK(r.clustering.clusters[0] == VertexList{0, 1, 2});
  CHECK(r.clustering.clusters[1] == VertexList{3, 4});
  CHECK(r.fill_distance == 2.0);
  CHECK(r.fill_history == std::vector<double>{4.0, 2.0});
}

TEST_CASE("fill distance") {
  const Graph g = path_graph(5);
  CHECK(fill_distance(g, iota(5)) == 0.0);
  const Vertex ends[] = {0, 4};
  CHECK(fill_distance(g, ends) == 2.0);
  const Vertex over[] = {0, 1};
  CHECK(fill_distance(g, std::span<const Vertex>(ends, 1), over) == 1.0);
}

TEST_CASE("brute force J-center") {
  const Graph g = path_graph(5);
  const OptimalCenters best = optimal_j_center_bruteforce(g, iota(5), 2);
  CHECK(best.fill_distance == 1.0);
  CHECK(fill_distance(g, best.centers) == 1.0);
  const VertexList w{0, 2, 4};
  const OptimalCenters all = optimal_j_center_bruteforce(g, w, 3);
  CHECK(all.centers == w);
  CHECK(all.fill_distance == fill_distance(g, w));
  const Graph big = random_connected_graph(60, 10, 1);
  CHECK_THROWS_AS(optimal_j_center_bruteforce(big, iota(60), 10, 1000), Error);
}

TEST_CASE("greedy input validation") {
  const Graph g = path_graph(5);
  const VertexList w{1, 3};
  CHECK_THROWS_AS(greedy_j_center(g, w, 3), Error);
  CHECK_THROWS_AS(greedy_j_center(g, w, 1, 0), Error);
  CHECK_THROWS_AS(greedy_j_center(g, VertexList{}, 1), Error);
  CHECK_THROWS_AS(greedy_j_center(g, w, 0), Error);
}

TEST_CASE("greedy clustering properties on random graphs") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Vertex n = 10 + static_cast<Vertex>(rng() % 30);
    const Graph g = random_connected_graph(n, static_cast<Vertex>(rng() % n), seed,
                                           LaplacianKind::Standard, seed % 2 == 0);
    VertexList w = iota(n);
    std::shuffle(w.begin(), w.end(), rng);
    w.resize(static_cast<std::size_t>(2 + rng() % (n - 2)));
    const auto count = static_cast<Eigen::Index>(1 + rng() % std::min<std::size_t>(6, w.size()));
    const JCenterResult r = greedy_j_center(g, w, count);
    const Eigen::MatrixXd d = oracle::hop_distances(oracle::laplacian(g));

    REQUIRE(r.centers.size() == static_cast<std::size_t>(count));
    CHECK(r.centers.front() == w.front());
    for (Vertex q : r.centers) CHECK(std::find(w.begin(), w.end(), q) != w.end());

    // clusters partition V and every vertex sits with a nearest center
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t j = 0; j < r.clustering.clusters.size(); ++j) {
      for (Vertex v : r.clustering.clusters[j]) {
        ++seen[v];
        CHECK(r.clustering.assignment[v] == static_cast<Eigen::Index>(j));
        double nearest = kInfinity;
        for (Vertex q : r.centers) nearest = std::min(nearest, d(v, q));
        CHECK(d(v, r.centers[j]) == nearest);
      }
      CHECK(std::find(r.clustering.clusters[j].begin(), r.clustering.clusters[j].end(),
                      r.centers[j]) != r.clustering.clusters[j].end());
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));

    CHECK(r.fill_distance == oracle::fill(d, r.centers, iota(n)));
    for (std::size_t k = 1; k < r.fill_history.size(); ++k) {
      CHECK(r.fill_history[k] <= r.fill_history[k - 1]);
    }
  }
}
