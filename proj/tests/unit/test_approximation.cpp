#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "graph_pum/analysis.hpp"
#include "graph_pum/approximation.hpp"
#include "graph_pum/generators.hpp"
#include "oracles.hpp"

using namespace gpum;

namespace {

std::shared_ptr<const KernelOperator> spectral_spline(const Graph& g, double eps, double s) {
  auto spec = std::make_shared<const Spectrum>(eigendecompose(g));
  return std::make_shared<const KernelOperator>(spline_kernel(spec, eps, s));
}

VertexList iota(Vertex n) {
  VertexList v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

}  // namespace

TEST_CASE("nested sampling sequence") {
  const VertexList a = nested_sampling_sequence(100, 30, 5);
  const VertexList b = nested_sampling_sequence(100, 60, 5);
  CHECK(a.size() == 30);
  CHECK(std::equal(a.begin(), a.end(), b.begin()));
  CHECK(std::set<Vertex>(b.begin(), b.end()).size() == 60);
  CHECK(nested_sampling_sequence(100, 30, 5) == a);
  CHECK(nested_sampling_sequence(100, 30, 6) != a);
  VertexList all = nested_sampling_sequence(10, 10, 1);
  std::sort(all.begin(), all.end());
  CHECK(all == iota(10));
  CHECK_THROWS_AS(nested_sampling_sequence(10, 11, 1), Error);
}

TEST_CASE("sample sets are validated") {
  const Graph g = path_graph(4);
  const Signal x = Signal::LinSpaced(4, 1, 4);
  CHECK_THROWS_AS(sample_signal(x, {0, 7}), Error);
  KernelSpec spec;
  SampleSet dup{{1, 1}, Eigen::Vector2d(2, 2)};
  CHECK_THROWS_AS(gbf_global(g, spec, dup, 0.0), Error);
  SampleSet empty;
  CHECK_THROWS_AS(gbf_global(g, spec, empty, 0.0), Error);
}

TEST_CASE("full sampling interpolates exactly") {
  const Graph g = random_connected_graph(30, 20, 4, LaplacianKind::Normalized);
  std::mt19937_64 rng(1);
  const Signal x = oracle::random_signal(30, rng);
  const LocalFit fit = fit_local(spectral_spline(g, 0.1, 2.0), sample_signal(x, iota(30)), 0.0);
  CHECK((evaluate_local(fit) - x).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(fit.relative_residual < 1e-10);
  CHECK_FALSE(fit.pivoted_fallback);
}

TEST_CASE("one sample gives a scalar solve") {
  const Graph g = path_graph(6);
  auto kernel = spectral_spline(g, 0.5, 1.0);
  const Vertex node[] = {2};
  const double k11 = gram_matrix(*kernel, node)(0, 0);
  const LocalFit fit = fit_local(kernel, SampleSet{{2}, Eigen::VectorXd::Constant(1, 3.0)}, 0.0);
  CHECK(fit.coefficients[0] == doctest::Approx(3.0 / k11));
  LocalFit zero = fit;
  zero.coefficients.setZero();
  CHECK(evaluate_local(zero).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("heavy regularization shrinks the fit") {
  const Graph g = random_connected_graph(40, 30, 2);
  std::mt19937_64 rng(2);
  const Signal x = oracle::random_signal(40, rng);
  const SampleSet samples = sample_signal(x, nested_sampling_sequence(40, 20, 3));
  KernelSpec spec;
  spec.eps = 0.1;
  const Signal y = gbf_global(g, spec, samples, 1e6);
  CHECK(y.norm() < 1e-3 * x.norm());
  CHECK_THROWS_AS(gbf_global(g, spec, samples, -1.0), Error);
}

TEST_CASE("bandlimited signal is recovered from all samples") {
  const Graph g = random_geometric_graph(50, 0.25, 3, LaplacianKind::Normalized);
  const Signal x = bandlimited_signal(eigendecompose(g), 5);
  KernelSpec spec;
  const Signal y = gbf_global(g, spec, sample_signal(x, iota(50)), 0.0);
  CHECK((y - x).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("spectral and factorized global fits agree") {
  const Graph g = random_geometric_graph(60, 0.2, 5, LaplacianKind::Normalized);
  const Signal x = bandlimited_signal(eigendecompose(g), 6);
  const SampleSet samples = sample_signal(x, nested_sampling_sequence(60, 25, 1));
  KernelSpec spec;
  spec.eps = 0.01;
  spec.route = KernelRoute::Spectral;
  const Signal a = gbf_global(g, spec, samples, 0.0);
  spec.route = KernelRoute::Factorized;
  const Signal b = gbf_global(g, spec, samples, 0.0);
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-7 * a.cwiseAbs().maxCoeff());
}

TEST_CASE("PUM with one subdomain equals the global fit") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = random_geometric_graph(50, 0.2, seed, LaplacianKind::Normalized);
    std::mt19937_64 rng(seed);
    const Signal x = oracle::random_signal(50, rng);
    const SampleSet samples = sample_signal(x, nested_sampling_sequence(50, 20, seed));
    PumConfig config;
    config.subdomains = 1;
    config.radius = 2.0;
    config.kernel.eps = 0.05;
    const PumApproximant pum = gbf_pum(g, samples, config);
    const Signal global = gbf_global(g, config.kernel, samples, 0.0);
    CHECK((pum.values - global).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("PUM interpolates samples and the full signal") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_geometric_graph(80, 0.18, seed, LaplacianKind::Normalized);
    std::mt19937_64 rng(seed);
    const Signal x = oracle::random_signal(80, rng);
    PumConfig config;
    config.subdomains = 4;
    config.radius = 2.0;
    config.kernel.eps = 0.01;
    const VertexList w = nested_sampling_sequence(80, 40, seed);
    const PumApproximant pum = gbf_pum(g, sample_signal(x, w), config);
    for (Vertex v : w) CHECK(std::abs(pum.values[v] - x[v]) < 1e-8);
    const PumApproximant full = gbf_pum(g, sample_signal(x, iota(80)), config);
    CHECK((full.values - x).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("PUM is independent of the thread count") {
  const Graph g = random_geometric_graph(120, 0.15, 9, LaplacianKind::Normalized);
  const Signal x = bandlimited_signal(eigendecompose(g), 8);
  const SampleSet samples = sample_signal(x, nested_sampling_sequence(120, 50, 2));
  PumConfig config;
  config.subdomains = 6;
  config.radius = 2.0;
  config.threads = 1;
  const Signal one = gbf_pum(g, samples, config).values;
  config.threads = 4;
  const Signal four = gbf_pum(g, samples, config).values;
  CHECK(one == four);
}

TEST_CASE("PUM local samples keep the order of W") {
  const Graph g = grid_graph(6, 6, LaplacianKind::Normalized);
  const VertexList w = nested_sampling_sequence(36, 20, 4);
  const Signal x = Signal::LinSpaced(36, -1, 1);
  PumConfig config;
  config.subdomains = 3;
  config.radius = 1.0;
  const PumApproximant pum = gbf_pum(g, sample_signal(x, w), config);
  for (const auto& local : pum.locals) {
    std::vector<std::size_t> positions;
    for (Vertex k : local.fit.sample_nodes) {
      const Vertex v = local.subgraph.to_parent[k];
      positions.push_back(static_cast<std::size_t>(std::find(w.begin(), w.end(), v) - w.begin()));
    }
    CHECK(std::is_sorted(positions.begin(), positions.end()));
  }
  CHECK(pum.centers.centers.front() == w.front());
}

TEST_CASE("custom Shepard partition through the pipeline") {
  const Graph g = grid_graph(5, 5, LaplacianKind::Normalized);
  const Signal x = Signal::LinSpaced(25, 0, 1);
  PumConfig config;
  config.subdomains = 3;
  config.radius = 1.0;
  config.pou = PouKind::CustomShepard;
  CHECK_THROWS_AS(gbf_pum(g, sample_signal(x, iota(25)), config), Error);
  config.custom_partition = [](const Graph&, const Cover& cover) {
    std::vector<Eigen::VectorXd> psi;
    for (const auto& v : cover.subdomains) {
      psi.push_back(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(v.size())));
    }
    return shepard_partition(cover, psi);
  };
  const PumApproximant pum = gbf_pum(g, sample_signal(x, iota(25)), config);
  CHECK((pum.values - x).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("every subdomain holds its own center as a sample") {
  const Graph g = path_graph(9);
  const Signal x = Signal::LinSpaced(9, 0, 1);
  PumConfig config;
  config.subdomains = 2;
  config.radius = 0.0;
  const PumApproximant pum = gbf_pum(g, sample_signal(x, {0, 8}), config);
  REQUIRE(pum.cover.size() == 2);
  for (const auto& local : pum.locals) CHECK(local.fit.sample_nodes.size() == 1);

  auto kernel = spectral_spline(g, 0.5, 1.0);
  CHECK_THROWS_AS(fit_local(kernel, SampleSet{}, 0.0), Error);
}
