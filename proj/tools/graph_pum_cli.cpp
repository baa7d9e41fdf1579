#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graph_pum/analysis.hpp"
#include "graph_pum/benchmark.hpp"
#include "graph_pum/io.hpp"
#include "graph_pum/partition.hpp"
#include "graph_pum/spectral.hpp"
#include "verify_suite.hpp"

using namespace gpum;

namespace {

struct GraphOptions {
  std::string path;
  std::string format = "auto";
  LaplacianKind laplacian = LaplacianKind::Normalized;
  MetricKind metric = MetricKind::ShortestPathHops;
};

struct SignalOptions {
  std::string path;
  Vertex band = 10;
};

struct RunOptions {
  Eigen::Index subdomains = 8;
  double radius = 8.0;
  std::optional<std::int64_t> start;
  std::string pou = "cluster";
  std::string kernel = "spline";
  double t = 1.0;
  double eps = 1e-3;
  double s = 2.0;
  std::string route = "auto";
  double gamma = 0.0;
  std::uint64_t seed = 7;
  unsigned threads = 0;
};

const std::map<std::string, LaplacianKind> kLaplacians{
    {"standard", LaplacianKind::Standard},
    {"normalized", LaplacianKind::Normalized},
    {"negative-adjacency", LaplacianKind::NegativeAdjacency}};
const std::map<std::string, MetricKind> kMetrics{{"hops", MetricKind::ShortestPathHops},
                                                 {"weighted", MetricKind::ShortestPathWeighted}};

void add_graph_options(CLI::App* cmd, GraphOptions& g, bool required = true) {
  auto* opt = cmd->add_option("--graph", g.path, "edge list or MatrixMarket file");
  if (required) opt->required()->check(CLI::ExistingFile);
  cmd->add_option("--format", g.format, "graph file format")
      ->check(CLI::IsMember({"auto", "edges", "mtx"}));
  cmd->add_option("--laplacian", g.laplacian, "Laplacian variant")
      ->transform(CLI::CheckedTransformer(kLaplacians));
  cmd->add_option("--metric", g.metric, "shortest-path metric")
      ->transform(CLI::CheckedTransformer(kMetrics));
}

void add_partition_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--j", o.subdomains, "number of subdomains J")->check(CLI::PositiveNumber);
  cmd->add_option("--r", o.radius, "augmentation radius")->check(CLI::NonNegativeNumber);
  cmd->add_option("--start", o.start, "1-based label of the first center (must be sampled)");
  cmd->add_option("--seed", o.seed, "seed of the nested sampling sequence");
}

void add_fit_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--pou", o.pou, "Shepard weights from clusters or subdomains")
      ->check(CLI::IsMember({"cluster", "subdomain"}));
  cmd->add_option("--kernel", o.kernel, "GBF kernel")
      ->check(CLI::IsMember({"spline", "diffusion"}));
  cmd->add_option("--t", o.t, "diffusion time");
  cmd->add_option("--eps", o.eps, "spline shift eps");
  cmd->add_option("--s", o.s, "spline exponent s");
  cmd->add_option("--route", o.route, "kernel evaluation route")
      ->check(CLI::IsMember({"auto", "spectral", "factorized"}));
  cmd->add_option("--gamma", o.gamma, "regularization parameter (0 interpolates)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--threads", o.threads, "worker threads (default GRAPH_PUM_THREADS)");
}

void add_signal_options(CLI::App* cmd, SignalOptions& s) {
  cmd->add_option("--signal", s.path, "CSV vertex,value with the reference signal")
      ->check(CLI::ExistingFile);
  cmd->add_option("--band", s.band, "use the sum of the first K Laplacian eigenvectors")
      ->check(CLI::PositiveNumber);
}

Graph load(const GraphOptions& o) {
  GraphFormat format = GraphFormat::Auto;
  if (o.format == "edges") format = GraphFormat::EdgeList;
  if (o.format == "mtx") format = GraphFormat::MatrixMarket;
  return read_graph(o.path, o.laplacian, o.metric, format);
}

Signal reference_signal(const Graph& g, const SignalOptions& o) {
  if (!o.path.empty()) return read_signal_csv(o.path, g.size());
  return bandlimited_signal(eigendecompose(g), o.band);
}

Vertex vertex_of_label(const Graph& g, std::int64_t label) {
  const auto& labels = g.labels();
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == label) return static_cast<Vertex>(v);
  }
  fail(ErrorCode::NodeOutOfRange, "no vertex with label " + std::to_string(label));
}

PumConfig pum_config(const Graph& g, const RunOptions& o) {
  PumConfig c;
  c.subdomains = o.subdomains;
  c.radius = o.radius;
  if (o.start) c.start = vertex_of_label(g, *o.start);
  c.pou = o.pou == "subdomain" ? PouKind::IndicatorSubdomain : PouKind::IndicatorCluster;
  c.kernel.family = o.kernel == "diffusion" ? KernelFamily::Diffusion
                                            : KernelFamily::VariationalSpline;
  c.kernel.t = o.t;
  c.kernel.eps = o.eps;
  c.kernel.s = o.s;
  c.kernel.route = o.route == "spectral"     ? KernelRoute::Spectral
                   : o.route == "factorized" ? KernelRoute::Factorized
                                             : KernelRoute::Auto;
  c.gamma = o.gamma;
  c.threads = o.threads;
  return c;
}

/// Writes to `path`, or stdout for an empty path or "-".
template <class Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorCode::FileNotFound, "cannot write " + path);
  write(out);
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition of unity GBF interpolation on graphs"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file, one [subcommand] section per command; flags win");
  app.fallthrough();

  GraphOptions graph;
  SignalOptions signal;
  RunOptions run;
  std::string out_path;
  Vertex sample_count = 0;

  auto* partition = app.add_subcommand("partition", "cluster, augment and write the cover as CSV");
  add_graph_options(partition, graph);
  add_partition_options(partition, run);
  partition->add_option("--n", sample_count, "number of sampled nodes (default: all)");
  partition->add_option("--out", out_path, "output CSV (default stdout)");

  auto* interpolate = app.add_subcommand("interpolate", "single GBF-PUM run");
  add_graph_options(interpolate, graph);
  add_partition_options(interpolate, run);
  add_fit_options(interpolate, run);
  add_signal_options(interpolate, signal);
  interpolate->add_option("--n", sample_count, "number of sampled nodes")->required();
  interpolate->add_option("--out", out_path, "output CSV (default stdout)");

  VerifyOptions verify_opts;
  GraphOptions verify_graph;
  auto* verify = app.add_subcommand("verify", "run the analysis checks, JSON lines on stdout");
  verify->add_option("--seed", verify_opts.seed, "base seed of the random instances");
  verify->add_option("--instances", verify_opts.instances, "random graphs per check");
  add_graph_options(verify, verify_graph, false);

  ExperimentConfig bench_config;
  std::vector<Vertex> grid;
  bool no_timing = false;
  auto* bench = app.add_subcommand("bench", "sampling sweep with RRMSE and timings");
  add_graph_options(bench, graph);
  add_partition_options(bench, run);
  add_fit_options(bench, run);
  add_signal_options(bench, signal);
  bench->add_option("--grid", grid, "sample counts (default 132 264 528 1056 2112)")
      ->delimiter(',');
  bench->add_option("--seeds", bench_config.repetitions, "number of seeds (seed, seed+1, ...)")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--baseline", bench_config.baseline, "also time the global GBF fit");
  bench->add_flag("--no-timing", no_timing, "omit timing columns");
  bench->add_option("--out", out_path, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << nlohmann::json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return e.get_exit_code();
  }

  try {
    if (*partition) {
      const Graph g = load(graph);
      const Vertex n = sample_count > 0 ? sample_count : g.size();
      const VertexList w = nested_sampling_sequence(g.size(), n, run.seed);
      const PumConfig config = pum_config(g, run);
      const JCenterResult centers = greedy_j_center(g, w, config.subdomains, config.start);
      const Cover cover = build_cover(g, centers, config.radius);
      emit(out_path, [&](std::ostream& os) { write_cover_csv(os, g, cover); });
      std::cerr << "fill distance h(Q_J) = " << cover.fill_distance << '\n';
    } else if (*interpolate) {
      const Graph g = load(graph);
      const Signal x = reference_signal(g, signal);
      const SampleSet samples =
          sample_signal(x, nested_sampling_sequence(g.size(), sample_count, run.seed));
      const auto start = std::chrono::steady_clock::now();
      const PumApproximant pum = gbf_pum(g, samples, pum_config(g, run));
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit(out_path, [&](std::ostream& os) {
        os << "vertex,true,approx,abs_error\n";
        for (Vertex v = 0; v < g.size(); ++v) {
          os << g.labels()[v] << ',' << format_real(x[v]) << ',' << format_real(pum.values[v])
             << ',' << format_real(std::abs(x[v] - pum.values[v])) << '\n';
        }
      });
      std::cerr << "rrmse = " << format_real(rrmse(x, pum.values)) << ", pum_seconds = " << seconds
                << '\n';
    } else if (*verify) {
      std::optional<Graph> g;
      if (!verify_graph.path.empty()) g = load(verify_graph);
      const bool ok = run_verify_suite(std::cout, verify_opts, g ? &*g : nullptr);
      return ok ? 0 : 1;
    } else if (*bench) {
      const Graph g = load(graph);
      const Signal x = reference_signal(g, signal);
      bench_config.pum = pum_config(g, run);
      bench_config.seed = run.seed;
      if (!grid.empty()) bench_config.sample_counts = grid;
      const auto rows = run_benchmark(g, x, bench_config);
      emit(out_path, [&](std::ostream& os) { write_benchmark_csv(os, rows, !no_timing); });
      if (!no_timing) {
        std::cerr << "timings cover the PUM pipeline and the global fit only; graph loading "
                     "and reference signal synthesis are excluded\n";
      }
    }
  } catch (const Error& e) {
    nlohmann::json err{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 3;
  }
  return 0;
}
