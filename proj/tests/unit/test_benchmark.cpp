#include <doctest.h>

#include <sstream>

#include "graph_pum/benchmark.hpp"
#include "graph_pum/generators.hpp"
#include "graph_pum/spectral.hpp"

using namespace gpum;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.pum.subdomains = 3;
  c.pum.radius = 2.0;
  c.pum.threads = 1;
  c.sample_counts = {20, 40, 80};
  c.repetitions = 2;
  return c;
}

}  // namespace

TEST_CASE("benchmark rows are sorted and deterministic") {
  const Graph g = random_geometric_graph(100, 0.18, 4, LaplacianKind::Normalized);
  const Signal x = bandlimited_signal(eigendecompose(g), 5);
  ExperimentConfig c = small_config();
  c.baseline = true;
  const auto rows = run_benchmark(g, x, c);
  REQUIRE(rows.size() == 6);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(std::make_pair(rows[k - 1].samples, rows[k - 1].seed) <
          std::make_pair(rows[k].samples, rows[k].seed));
  }
  for (const auto& r : rows) {
    CHECK(r.rrmse >= 0.0);
    CHECK(r.pum_seconds >= 0.0);
    REQUIRE(r.global_rrmse.has_value());
    CHECK(*r.global_seconds >= 0.0);
  }
  std::ostringstream a, b;
  write_benchmark_csv(a, rows, false);
  write_benchmark_csv(b, run_benchmark(g, x, c), false);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("N,seed,J,r,rrmse,global_rrmse\n", 0) == 0);
}

TEST_CASE("full sampling gives negligible error") {
  const Graph g = grid_graph(8, 8, LaplacianKind::Normalized);
  const Signal x = bandlimited_signal(eigendecompose(g), 6);
  ExperimentConfig c = small_config();
  c.sample_counts = {64};
  c.repetitions = 1;
  CHECK(run_benchmark(g, x, c).front().rrmse < 1e-8);
}

TEST_CASE("configuration checks") {
  ExperimentConfig c = small_config();
  CHECK_NOTHROW(validate(c, 100));
  c.sample_counts = {40, 20};
  CHECK_THROWS_AS(validate(c, 100), Error);
  c.sample_counts = {2, 20};
  CHECK_THROWS_AS(validate(c, 100), Error);
  c.sample_counts = {20, 200};
  CHECK_THROWS_AS(validate(c, 100), Error);
  c = small_config();
  c.pum.radius = -1.0;
  CHECK_THROWS_AS(validate(c, 100), Error);
}

TEST_CASE("median") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
}
