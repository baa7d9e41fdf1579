#include "graph_pum/approximation.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "graph_pum/parallel.hpp"

namespace gpum {

SampleSet sample_signal(const Signal& x, VertexList nodes) {
  Eigen::VectorXd values(static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] < 0 || nodes[i] >= x.size()) {
      fail(ErrorCode::NodeOutOfRange, "sampling node outside the graph");
    }
    values[static_cast<Eigen::Index>(i)] = x[nodes[i]];
  }
  return {std::move(nodes), std::move(values)};
}

namespace {

// Uniform integer in [0, bound) by rejection; std::uniform_int_distribution is
// implementation-defined, this keeps sampling sets identical across toolchains.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = 0;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

void check_samples(const SampleSet& samples, Vertex n) {
  if (samples.nodes.empty()) fail(ErrorCode::EmptyNodeSet, "sampling set is empty");
  if (samples.values.size() != samples.size()) {
    fail(ErrorCode::DimensionMismatch, "one value per sampling node expected");
  }
  if (!samples.values.allFinite()) fail(ErrorCode::InvalidArgument, "non-finite sample value");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex w : samples.nodes) {
    if (w < 0 || w >= n) fail(ErrorCode::NodeOutOfRange, "sampling node outside the graph");
    if (seen[w]) fail(ErrorCode::InvalidArgument, "duplicate sampling node");
    seen[w] = 1;
  }
}

}  // namespace

VertexList nested_sampling_sequence(Vertex n, Vertex count, std::uint64_t seed) {
  if (count < 0 || count > n) {
    fail(ErrorCode::InvalidArgument, "sample count must lie in [0, n]");
  }
  VertexList order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Vertex{0});
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates: position k receives a uniform pick among the rest
  for (Vertex k = 0; k < count; ++k) {
    const auto pick = k + static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n - k)));
    std::swap(order[k], order[pick]);
  }
  order.resize(static_cast<std::size_t>(count));
  return order;
}

LocalFit fit_local(std::shared_ptr<const KernelOperator> kernel, const SampleSet& samples,
                   double gamma) {
  if (!(gamma >= 0.0)) fail(ErrorCode::InvalidArgument, "gamma must be >= 0");
  const Vertex n = std::visit([](const auto& k) { return k.size(); }, *kernel);
  if (samples.nodes.empty()) {
    fail(ErrorCode::EmptyLocalSampleSet, "no sampling node in the local graph");
  }
  check_samples(samples, n);

  const Eigen::Index count = samples.size();
  Eigen::MatrixXd system = gram_matrix(*kernel, samples.nodes);
  system.diagonal().array() += gamma * static_cast<double>(count);

  LocalFit fit;
  fit.gamma = gamma;
  fit.sample_nodes = samples.nodes;
  Eigen::LLT<Eigen::MatrixXd> llt(system);
  if (llt.info() == Eigen::Success) {
    fit.coefficients = llt.solve(samples.values);
  } else {
    Eigen::LDLT<Eigen::MatrixXd> ldlt(system);
    if (ldlt.info() != Eigen::Success) {
      fail(ErrorCode::SingularSystem, "kernel system could not be factorized");
    }
    fit.coefficients = ldlt.solve(samples.values);
    fit.pivoted_fallback = true;
  }
  if (!fit.coefficients.allFinite()) {
    fail(ErrorCode::SingularSystem, "kernel system produced non-finite coefficients");
  }
  const double scale = samples.values.norm();
  const double residual = (system * fit.coefficients - samples.values).norm();
  fit.relative_residual = scale > 0.0 ? residual / scale : residual;
  fit.kernel = std::move(kernel);
  return fit;
}

Signal evaluate_local(const LocalFit& fit) {
  return kernel_combination(*fit.kernel, fit.sample_nodes, fit.coefficients);
}

Signal gbf_global(const Graph& g, const KernelSpec& kernel, const SampleSet& samples,
                  double gamma) {
  check_samples(samples, g.size());
  auto op = std::make_shared<const KernelOperator>(make_kernel(g, kernel));
  return evaluate_local(fit_local(std::move(op), samples, gamma));
}

Signal blend(const PartitionOfUnity& partition, const std::vector<Signal>& local_values,
             Vertex n) {
  if (local_values.size() != partition.values.size()) {
    fail(ErrorCode::DimensionMismatch, "one local signal per subdomain expected");
  }
  Signal out = Signal::Zero(n);
  for (std::size_t j = 0; j < local_values.size(); ++j) {
    const auto& support = partition.supports[j];
    const auto& phi = partition.values[j];
    if (local_values[j].size() != static_cast<Eigen::Index>(support.size())) {
      fail(ErrorCode::DimensionMismatch, "local signal length differs from |V_j|");
    }
    for (std::size_t k = 0; k < support.size(); ++k) {
      const auto i = static_cast<Eigen::Index>(k);
      out[support[k]] += phi[i] * local_values[j][i];
    }
  }
  return out;
}

PumApproximant gbf_pum(const Graph& g, const SampleSet& samples, const PumConfig& config) {
  check_samples(samples, g.size());
  PumApproximant result;
  result.config = config;
  result.centers = greedy_j_center(g, samples.nodes, config.subdomains, config.start);
  result.cover = build_cover(g, result.centers, config.radius);
  if (config.pou == PouKind::CustomShepard) {
    if (!config.custom_partition) {
      fail(ErrorCode::InvalidArgument, "CustomShepard needs a partition builder");
    }
    result.partition = config.custom_partition(g, result.cover);
  } else {
    result.partition = shepard_partition(result.cover, config.pou);
  }

  std::vector<Eigen::Index> sample_index(static_cast<std::size_t>(g.size()), -1);
  for (Eigen::Index i = 0; i < samples.size(); ++i) {
    sample_index[samples.nodes[static_cast<std::size_t>(i)]] = i;
  }

  const auto count = static_cast<std::size_t>(result.cover.size());
  result.locals.resize(count);
  const unsigned threads = config.threads > 0 ? config.threads : default_thread_count();
  parallel_for(count, threads, [&](std::size_t j) {
    LocalSolution& local = result.locals[j];
    local.subgraph = extract_subgraph(g, result.cover.subdomains[j]);

    // W_j = W ∩ V_j, kept in the order of W
    std::vector<std::pair<Eigen::Index, Vertex>> hits;
    const auto& to_parent = local.subgraph.to_parent;
    for (std::size_t k = 0; k < to_parent.size(); ++k) {
      if (const auto i = sample_index[to_parent[k]]; i >= 0) {
        hits.emplace_back(i, static_cast<Vertex>(k));
      }
    }
    if (hits.empty()) {
      fail(ErrorCode::EmptyLocalSampleSet,
           "subdomain " + std::to_string(j + 1) + " holds no sampling node");
    }
    std::sort(hits.begin(), hits.end());
    SampleSet local_samples;
    local_samples.values.resize(static_cast<Eigen::Index>(hits.size()));
    for (std::size_t k = 0; k < hits.size(); ++k) {
      local_samples.nodes.push_back(hits[k].second);
      local_samples.values[static_cast<Eigen::Index>(k)] = samples.values[hits[k].first];
    }

    auto kernel = std::make_shared<const KernelOperator>(
        make_kernel(local.subgraph.graph, config.kernel));
    local.fit = fit_local(std::move(kernel), local_samples, config.gamma);
    local.values = evaluate_local(local.fit);
  });

  std::vector<Signal> local_values;
  local_values.reserve(count);
  for (const auto& local : result.locals) local_values.push_back(local.values);
  result.values = blend(result.partition, local_values, g.size());
  return result;
}

}  // namespace gpum
